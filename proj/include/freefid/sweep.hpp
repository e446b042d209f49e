#pragma once

#include <optional>
#include <string>
#include <vector>

namespace freefid {

/// Inclusive grid lo..hi with `steps` points. Values are computed as
/// (lo (n-1-k) + hi k) / (n-1), so a range symmetric about zero yields
/// exactly negated values at mirrored indices.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double value(int k) const;
  double spacing() const { return steps > 1 ? (hi - lo) / (steps - 1) : 0.0; }
};

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  std::string model = "complete-graph";
  int size = 400;
  GridRange mu{-2.0, 4.0, 61};
  GridRange gamma{-2.5, 2.5, 51};
  double delta_mu = 0.1;
  double delta_gamma = 0.1;
  std::optional<double> tol_sing;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty: standard output
  int workers = 1;
};

/// One grid point: forward fidelities toward (mu + dmu, gamma) and
/// (mu, gamma + dgamma), their minimum, and the parity / gap data of Z(mu, gamma).
struct SweepRecord {
  double mu = 0.0;
  double gamma = 0.0;
  double f_dmu = 1.0;
  double f_dgamma = 1.0;
  double f_min = 1.0;
  int det_sign = 1;
  double min_singular = 0.0;
  bool singular_flag = false;
};

struct BoundaryPoint {
  double mu = 0.0;
  double gamma = 0.0;
};

/// det T sign and singularity flag on a (mu, gamma) grid, gamma-major.
struct ParityGrid {
  int size = 0;
  GridRange mu;
  GridRange gamma;
  std::vector<int> det_sign;
  std::vector<char> singular;

  int sign_at(int i_mu, int j_gamma) const { return det_sign[static_cast<std::size_t>(j_gamma) * mu.steps + i_mu]; }
  bool singular_at(int i_mu, int j_gamma) const {
    return singular[static_cast<std::size_t>(j_gamma) * mu.steps + i_mu] != 0;
  }
};

/// Throws ConfigError for unknown models, odd sizes, steps < 1, negative
/// deltas or workers < 1.
void validate(const SweepConfig& cfg);

/// Rows in gamma-major order (gamma outer, mu inner); the result does not
/// depend on cfg.workers.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

ParityGrid parity_grid(int size, const GridRange& mu, const GridRange& gamma,
                       std::optional<double> tol_sing = std::nullopt, int workers = 1);

/// Midpoints between horizontally or vertically adjacent grid points whose
/// det T signs differ, sorted by polar angle about (0, 0).
std::vector<BoundaryPoint> boundary_from_grid(const ParityGrid& grid);

std::vector<BoundaryPoint> first_order_boundary(int size, const GridRange& mu, const GridRange& gamma,
                                                int workers = 1);

}  // namespace freefid
