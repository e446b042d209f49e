#include "freefid/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freefid/errors.hpp"
#include "freefid/fidelity.hpp"
#include "freefid/models.hpp"
#include "freefid/polar.hpp"
#include "fidelity_detail.hpp"
#include "parallel.hpp"

namespace freefid {

namespace {

void validate_range(const GridRange& r, const char* name) {
  if (r.steps < 1) throw Error(ErrorCode::ConfigError, std::string(name) + " range needs at least one step");
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
    throw Error(ErrorCode::ConfigError, std::string(name) + " range bounds must be finite");
  }
}

void validate_size(int size) {
  if (size < 2 || size % 2 != 0) {
    throw Error(ErrorCode::ConfigError, "size must be an even integer >= 2, got " + std::to_string(size));
  }
}

PolarForm complete_graph_polar(int size, double mu, double gamma, std::optional<double> tol) {
  return polar_decompose(complete_graph({mu, gamma, size}), tol, PolarParts::OrthogonalOnly);
}

}  // namespace

double GridRange::value(int k) const {
  if (steps <= 1) return lo;
  const double n = steps - 1;
  return (lo * (n - k) + hi * k) / n;
}

void validate(const SweepConfig& cfg) {
  if (cfg.model != "complete-graph") {
    throw Error(ErrorCode::ConfigError, "unknown model '" + cfg.model + "' (available: complete-graph)");
  }
  validate_size(cfg.size);
  validate_range(cfg.mu, "mu");
  validate_range(cfg.gamma, "gamma");
  if (!(cfg.delta_mu >= 0.0) || !(cfg.delta_gamma >= 0.0)) {
    throw Error(ErrorCode::ConfigError, "fidelity steps must be non-negative");
  }
  if (cfg.workers < 1) throw Error(ErrorCode::ConfigError, "workers must be >= 1");
  if (cfg.tol_sing && !(*cfg.tol_sing >= 0.0)) {
    throw Error(ErrorCode::ConfigError, "tol_sing must be non-negative");
  }
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::size_t nmu = cfg.mu.steps;
  const std::size_t count = nmu * cfg.gamma.steps;
  std::vector<SweepRecord> records(count);

  detail::parallel_for(count, cfg.workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % nmu);
    const int j = static_cast<int>(idx / nmu);
    SweepRecord& rec = records[idx];
    rec.mu = cfg.mu.value(i);
    rec.gamma = cfg.gamma.value(j);

    const PolarForm here = complete_graph_polar(cfg.size, rec.mu, rec.gamma, cfg.tol_sing);
    const PolarForm along_mu = complete_graph_polar(cfg.size, rec.mu + cfg.delta_mu, rec.gamma, cfg.tol_sing);
    const PolarForm along_gamma =
        complete_graph_polar(cfg.size, rec.mu, rec.gamma + cfg.delta_gamma, cfg.tol_sing);

    auto fidelity = [&](const PolarForm& other) {
      const auto f = detail::fidelity_det_signed(here.orthogonal, here.det_sign, other.orthogonal, other.det_sign);
      return std::min(1.0, f.value);
    };
    rec.f_dmu = fidelity(along_mu);
    rec.f_dgamma = fidelity(along_gamma);
    rec.f_min = std::min(rec.f_dmu, rec.f_dgamma);
    rec.det_sign = here.det_sign;
    rec.min_singular = here.min_singular;
    rec.singular_flag = here.is_singular;
  });
  return records;
}

ParityGrid parity_grid(int size, const GridRange& mu, const GridRange& gamma, std::optional<double> tol_sing,
                       int workers) {
  validate_size(size);
  validate_range(mu, "mu");
  validate_range(gamma, "gamma");
  ParityGrid grid;
  grid.size = size;
  grid.mu = mu;
  grid.gamma = gamma;
  const std::size_t nmu = mu.steps;
  const std::size_t count = nmu * gamma.steps;
  grid.det_sign.assign(count, 1);
  grid.singular.assign(count, 0);

  detail::parallel_for(count, workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % nmu);
    const int j = static_cast<int>(idx / nmu);
    const PolarForm polar = complete_graph_polar(size, mu.value(i), gamma.value(j), tol_sing);
    grid.det_sign[idx] = polar.det_sign;
    grid.singular[idx] = polar.is_singular ? 1 : 0;
  });
  return grid;
}

std::vector<BoundaryPoint> boundary_from_grid(const ParityGrid& grid) {
  std::vector<BoundaryPoint> points;
  for (int j = 0; j < grid.gamma.steps; ++j) {
    for (int i = 0; i < grid.mu.steps; ++i) {
      const int here = grid.sign_at(i, j);
      if (i + 1 < grid.mu.steps && grid.sign_at(i + 1, j) != here) {
        points.push_back({0.5 * (grid.mu.value(i) + grid.mu.value(i + 1)), grid.gamma.value(j)});
      }
      if (j + 1 < grid.gamma.steps && grid.sign_at(i, j + 1) != here) {
        points.push_back({grid.mu.value(i), 0.5 * (grid.gamma.value(j) + grid.gamma.value(j + 1))});
      }
    }
  }
  std::stable_sort(points.begin(), points.end(), [](const BoundaryPoint& a, const BoundaryPoint& b) {
    return std::atan2(a.gamma, a.mu) < std::atan2(b.gamma, b.mu);
  });
  return points;
}

std::vector<BoundaryPoint> first_order_boundary(int size, const GridRange& mu, const GridRange& gamma,
                                                int workers) {
  return boundary_from_grid(parity_grid(size, mu, gamma, std::nullopt, workers));
}

}  // namespace freefid
