#include <cmath>
#include <numbers>

#include "doctest.h"
#include "freefid/errors.hpp"
#include "freefid/fidelity.hpp"
#include "freefid/models.hpp"
#include "freefid/polar.hpp"
#include "freefid/records.hpp"
#include "freefid/sweep.hpp"

using namespace freefid;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.size = 8;
  cfg.mu = {-1.0, 3.0, 9};
  cfg.gamma = {-1.5, 1.5, 7};
  return cfg;
}

}  // namespace

TEST_CASE("grid values") {
  const GridRange r{-2.5, 2.5, 51};
  CHECK(r.value(0) == -2.5);
  CHECK(r.value(50) == 2.5);
  CHECK(r.value(25) == 0.0);
  for (int k = 0; k < 51; ++k) CHECK(r.value(k) == -r.value(50 - k));
  CHECK(GridRange{0.3, 0.3, 1}.value(0) == 0.3);
  CHECK(r.spacing() == doctest::Approx(0.1));
}

TEST_CASE("validate rejects bad configurations") {
  auto bad = [](auto mutate) {
    SweepConfig cfg = small_config();
    mutate(cfg);
    try {
      validate(cfg);
    } catch (const Error& e) {
      return e.code() == ErrorCode::ConfigError;
    }
    return false;
  };
  CHECK(bad([](SweepConfig& c) { c.size = 7; }));
  CHECK(bad([](SweepConfig& c) { c.model = "chain"; }));
  CHECK(bad([](SweepConfig& c) { c.mu.steps = 0; }));
  CHECK(bad([](SweepConfig& c) { c.delta_mu = -0.1; }));
  CHECK(bad([](SweepConfig& c) { c.workers = 0; }));
  CHECK_NOTHROW(validate(small_config()));
}

TEST_CASE("single point with zero steps has unit fidelity") {
  SweepConfig cfg = small_config();
  cfg.mu = {2.0, 2.0, 1};
  cfg.gamma = {0.5, 0.5, 1};
  cfg.delta_mu = 0.0;
  cfg.delta_gamma = 0.0;
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].f_dmu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].f_dgamma == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].det_sign == 1);
}

TEST_CASE("records follow gamma-major order and match direct evaluation") {
  const SweepConfig cfg = small_config();
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 63);
  for (int j = 0; j < 7; ++j) {
    for (int i = 0; i < 9; ++i) {
      const auto& r = rows[j * 9 + i];
      CHECK(r.mu == cfg.mu.value(i));
      CHECK(r.gamma == cfg.gamma.value(j));
      const auto p = polar_decompose(complete_graph({r.mu, r.gamma, 8}));
      const auto pm = polar_decompose(complete_graph({r.mu + 0.1, r.gamma, 8}));
      const auto pg = polar_decompose(complete_graph({r.mu, r.gamma + 0.1, 8}));
      CHECK(r.f_dmu == doctest::Approx(fidelity_det(p.orthogonal, pm.orthogonal).value).epsilon(1e-12));
      CHECK(r.f_dgamma == doctest::Approx(fidelity_det(p.orthogonal, pg.orthogonal).value).epsilon(1e-12));
      CHECK(r.f_min == std::min(r.f_dmu, r.f_dgamma));
      CHECK(r.min_singular == doctest::Approx(p.min_singular));
      CHECK(r.singular_flag == (r.min_singular < p.singular_tolerance));
      CHECK(r.det_sign == (p.orthogonal.determinant() > 0 ? 1 : -1));
      CHECK(r.f_min >= 0.0);
      CHECK(r.f_min <= 1.0);
    }
  }
}

TEST_CASE("output does not depend on the worker count") {
  SweepConfig one = small_config();
  SweepConfig four = small_config();
  four.workers = 4;
  const auto a = run_sweep(one);
  const auto b = run_sweep(four);
  CHECK(format_records(a, OutputFormat::Csv) == format_records(b, OutputFormat::Csv));
  CHECK(format_records(a, OutputFormat::Json) == format_records(b, OutputFormat::Json));
}

TEST_CASE("gamma reversal symmetry of the mu-fidelity") {
  const auto rows = run_sweep(small_config());
  for (int j = 0; j < 7; ++j) {
    for (int i = 0; i < 9; ++i) {
      const auto& r = rows[j * 9 + i];
      const auto& m = rows[(6 - j) * 9 + i];
      CHECK(r.gamma == -m.gamma);
      if (r.singular_flag || m.singular_flag) continue;
      CHECK(std::abs(r.f_dmu - m.f_dmu) < 1e-10);
    }
  }
}

TEST_CASE("two-mode boundary is the unit circle") {
  const GridRange axis{-1.5, 1.5, 61};
  const auto points = first_order_boundary(2, axis, axis);
  REQUIRE(points.size() > 20);
  for (const auto& p : points) {
    const double r = std::hypot(p.mu, p.gamma);
    CHECK(std::abs(r - 1.0) < 0.06);
  }
  for (std::size_t k = 1; k < points.size(); ++k)
    CHECK(std::atan2(points[k - 1].gamma, points[k - 1].mu) <= std::atan2(points[k].gamma, points[k].mu));
}

TEST_CASE("no odd parity to the right of mu = 1") {
  const GridRange mu{1.2, 4.0, 15};
  const GridRange gamma{-2.0, 2.0, 11};
  for (int size : {2, 6, 20}) {
    CHECK(first_order_boundary(size, mu, gamma).empty());
    const auto grid = parity_grid(size, mu, gamma);
    for (int s : grid.det_sign) CHECK(s == 1);
  }
}

TEST_CASE("odd region grows with the system size") {
  const GridRange mu{-6.0, 1.5, 31};
  const GridRange gamma{-1.5, 1.5, 25};
  const auto g2 = parity_grid(2, mu, gamma);
  const auto g4 = parity_grid(4, mu, gamma);
  const auto g6 = parity_grid(6, mu, gamma, std::nullopt, 2);
  int odd2 = 0;
  int odd6 = 0;
  for (int j = 0; j < gamma.steps; ++j) {
    for (int i = 0; i < mu.steps; ++i) {
      if (g2.singular_at(i, j) || g4.singular_at(i, j) || g6.singular_at(i, j)) continue;
      odd2 += g2.sign_at(i, j) < 0;
      odd6 += g6.sign_at(i, j) < 0;
      if (g2.sign_at(i, j) < 0) CHECK(g4.sign_at(i, j) < 0);
      if (g4.sign_at(i, j) < 0) CHECK(g6.sign_at(i, j) < 0);
    }
  }
  CHECK(odd2 > 0);
  CHECK(odd6 > odd2);
}
