#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace freefid {

struct OracleCheckOptions {
  std::vector<int> sizes{2, 4, 6, 8};
  int instances_per_size = 25;
  std::uint64_t seed = 20070601;
  double min_gap = 1e-6;
  double min_singular = 1e-6;
  double fidelity_tol = 1e-8;
  double state_tol = 1e-9;
  double energy_tol = 1e-8;
};

struct OracleCheckReport {
  int instances = 0;
  int fidelity_failures = 0;
  int state_failures = 0;
  int energy_failures = 0;
  double max_fidelity_error = 0.0;
  double max_state_defect = 0.0;
  double max_energy_error = 0.0;

  bool passed() const { return instances > 0 && fidelity_failures + state_failures + energy_failures == 0; }
};

/// Compares the polar-decomposition formulas with exact diagonalization on
/// random gapped couplings: fidelity_det against the overlap of exact ground
/// states, state_from_angles against the exact ground state, and the ground
/// energy (Tr A - sum Lambda)/2 against the lowest eigenvalue.
OracleCheckReport run_oracle_check(const OracleCheckOptions& options = {});

void print_report(const OracleCheckReport& report, std::ostream& out);

}  // namespace freefid
