#include "freefid/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "freefid/coupling.hpp"
#include "freefid/fidelity.hpp"
#include "freefid/fock.hpp"
#include "freefid/groundstate.hpp"
#include "freefid/polar.hpp"

namespace freefid {

namespace {

Matrix gaussian_matrix(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = normal(rng);
  return m;
}

QuadraticCoupling random_coupling(Index n, std::mt19937_64& rng) {
  const Matrix x = gaussian_matrix(n, rng);
  const Matrix y = gaussian_matrix(n, rng);
  return make_coupling(0.5 * (x + x.transpose()), 0.5 * (y - y.transpose()));
}

QuadraticCoupling perturbed(const QuadraticCoupling& base, double scale, std::mt19937_64& rng) {
  const Index n = base.size();
  const Matrix x = gaussian_matrix(n, rng);
  const Matrix y = gaussian_matrix(n, rng);
  return make_coupling(base.hopping() + scale * 0.5 * (x + x.transpose()),
                       base.pairing() + scale * 0.5 * (y - y.transpose()));
}

}  // namespace

OracleCheckReport run_oracle_check(const OracleCheckOptions& options) {
  OracleCheckReport report;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> scale_dist(0.05, 0.8);

  for (int size : options.sizes) {
    int accepted = 0;
    while (accepted < options.instances_per_size) {
      const QuadraticCoupling z = random_coupling(size, rng);
      const QuadraticCoupling z_tilde = perturbed(z, scale_dist(rng), rng);
      const PolarForm polar = polar_decompose(z);
      const PolarForm polar_tilde = polar_decompose(z_tilde);
      if (polar.min_singular <= options.min_singular || polar_tilde.min_singular <= options.min_singular) {
        continue;
      }
      const fock::ExactGroundState exact = fock::fock_ground_state(fock::build_fock_hamiltonian(z));
      const fock::ExactGroundState exact_tilde = fock::fock_ground_state(fock::build_fock_hamiltonian(z_tilde));
      if (exact.gap <= options.min_gap || exact_tilde.gap <= options.min_gap) continue;
      ++accepted;
      ++report.instances;

      const double f_formula = fidelity_det(polar.orthogonal, polar_tilde.orthogonal).value;
      const double f_exact = fock::fock_overlap(exact.vector, exact_tilde.vector);
      const double f_err = std::abs(f_formula - f_exact);
      report.max_fidelity_error = std::max(report.max_fidelity_error, f_err);
      if (!(f_err < options.fidelity_tol)) ++report.fidelity_failures;

      const fock::FockVector paired = fock::state_from_angles(canonical_ground_state(polar.orthogonal));
      const double defect = 1.0 - fock::fock_overlap(paired, exact.vector);
      report.max_state_defect = std::max(report.max_state_defect, defect);
      if (!(defect < options.state_tol)) ++report.state_failures;

      const double e_formula = 0.5 * (z.hopping().trace() - polar.singular_values.sum());
      const double e_err = std::abs(e_formula - exact.energy);
      report.max_energy_error = std::max(report.max_energy_error, e_err);
      if (!(e_err < options.energy_tol)) ++report.energy_failures;
    }
  }
  return report;
}

void print_report(const OracleCheckReport& report, std::ostream& out) {
  out << "oracle-check instances: " << report.instances << '\n'
      << "  fidelity  max |F_det - F_exact| = " << report.max_fidelity_error << "  failures "
      << report.fidelity_failures << '\n'
      << "  paired state  max (1 - overlap) = " << report.max_state_defect << "  failures "
      << report.state_failures << '\n'
      << "  ground energy  max error = " << report.max_energy_error << "  failures " << report.energy_failures
      << '\n'
      << (report.passed() ? "oracle-check PASSED" : "oracle-check FAILED") << '\n';
}

}  // namespace freefid
