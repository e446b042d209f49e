#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "freefid/errors.hpp"
#include "freefid/logdet.hpp"
#include "freefid/orthogonal.hpp"
#include "support/random_matrices.hpp"

using namespace freefid;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected freefid::Error");
  return ErrorCode::IOError;
}

std::complex<double> char_poly(const std::vector<std::complex<double>>& eigs, double x) {
  std::complex<double> p = 1.0;
  for (const auto& e : eigs) p *= (x - e);
  return p;
}

}  // namespace

TEST_CASE("angles of simple orthogonal matrices") {
  const auto id = orthogonal_angles(Matrix::Identity(4, 4));
  CHECK(id.angles == std::vector<double>{0.0, 0.0});
  CHECK(id.det_sign == 1);
  CHECK(id.count_plus_one == 4);

  const auto rot = orthogonal_angles(testing::rotation(pi / 3));
  REQUIRE(rot.angles.size() == 1);
  CHECK(rot.angles[0] == doctest::Approx(pi / 3).epsilon(1e-14));
  CHECK(rot.det_sign == 1);

  Matrix sigma_x(2, 2);
  sigma_x << 0, 1, 1, 0;
  const auto sx = orthogonal_angles(sigma_x);
  REQUIRE(sx.angles.size() == 1);
  CHECK(sx.angles[0] == doctest::Approx(pi));
  CHECK(sx.count_minus_one == 1);
  CHECK(sx.count_plus_one == 1);
  CHECK(sx.det_sign == -1);

  const auto minus = orthogonal_angles(Matrix(-Matrix::Identity(2, 2)));
  CHECK(minus.angles[0] == doctest::Approx(pi));
  CHECK(minus.count_minus_one == 2);
  CHECK(minus.det_sign == 1);

  // Negative rotation angles are reported by magnitude.
  const auto neg = orthogonal_angles(testing::rotation(-0.4));
  CHECK(neg.angles[0] == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("orthogonal_angles input validation") {
  Matrix not_orth = Matrix::Identity(2, 2);
  not_orth(0, 1) = 1e-6;
  CHECK(code_of([&] { orthogonal_angles(not_orth); }) == ErrorCode::NotOrthogonal);
  CHECK(code_of([&] { orthogonal_angles(Matrix::Identity(3, 3)); }) == ErrorCode::OddSize);
  CHECK(code_of([&] { orthogonal_angles(Matrix::Identity(2, 3)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("angle spectrum reproduces the characteristic polynomial and det sign") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 2 * (1 + trial % 6);
    const Matrix q = testing::random_orthogonal(n, rng);
    const auto spec = orthogonal_angles(q);
    CHECK(spec.angles.size() == static_cast<std::size_t>(n / 2));
    CHECK(spec.count_plus_one + spec.count_minus_one + 2 * spec.rotation_pairs == n);
    CHECK(spec.det_sign == ((spec.count_minus_one % 2 == 0) ? 1 : -1));
    CHECK(spec.det_sign == log_abs_det(q).sign);
    for (double theta : spec.angles) {
      CHECK(theta >= 0.0);
      CHECK(theta <= pi);
    }
    const auto eigs = spec.eigenvalues();
    for (double x : {1.0, -1.0}) {
      const double expected = (x * Matrix::Identity(n, n) - q).determinant();
      CHECK(std::abs(char_poly(eigs, x) - expected) < 1e-8);
    }
  }
}

TEST_CASE("angles agree with a general eigensolver") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix q = testing::random_special_orthogonal(8, rng);
    std::vector<double> expected;
    Eigen::EigenSolver<Matrix> es(q);
    for (Index i = 0; i < 8; ++i) {
      const double arg = std::arg(es.eigenvalues()(i));
      if (arg >= 0) expected.push_back(arg);
    }
    auto got = orthogonal_angles(q).angles;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == doctest::Approx(expected[k]).epsilon(1e-9));
  }
}

TEST_CASE("canonical frame block-diagonalizes with oriented rotations") {
  std::mt19937_64 rng(12);
  const Matrix frame = testing::random_orthogonal(8, rng);
  Matrix block = Matrix::Zero(8, 8);
  block.block(0, 0, 2, 2) = testing::rotation(0.9);
  block.block(2, 2, 2, 2) = testing::rotation(-2.0);
  block(4, 4) = 1.0;
  block(5, 5) = 1.0;
  block(6, 6) = -1.0;
  block(7, 7) = 1.0;
  const Matrix q = frame * block * frame.transpose();
  const auto form = orthogonal_canonical_form(q);
  CHECK(form.rotation_angles.size() == 2);
  CHECK(form.count_plus_one == 3);
  CHECK(form.count_minus_one == 1);
  const Matrix reduced = form.frame.transpose() * q * form.frame;
  for (std::size_t k = 0; k < form.rotation_angles.size(); ++k) {
    const Index a = 2 * static_cast<Index>(k);
    CHECK(max_abs(reduced.block(a, a, 2, 2) - testing::rotation(form.rotation_angles[k])) < 1e-12);
  }
  CHECK(reduced(form.minus_one_column(0), form.minus_one_column(0)) == doctest::Approx(-1.0));
  CHECK(max_abs(form.frame.transpose() * form.frame - Matrix::Identity(8, 8)) < 1e-12);
}

TEST_CASE("orthogonal_log") {
  CHECK(max_abs(orthogonal_log(Matrix::Identity(4, 4)).generator) == 0.0);

  const auto k = orthogonal_log(testing::rotation(pi / 4)).generator;
  CHECK(k(1, 0) == doctest::Approx(pi / 4).epsilon(1e-14));
  CHECK(k(0, 1) == doctest::Approx(-pi / 4).epsilon(1e-14));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix t = testing::random_special_orthogonal(8, rng);
    const Matrix gen = orthogonal_log(t).generator;
    CHECK(gen == -gen.transpose());
    CHECK(max_abs(testing::expm(gen) - t) < 1e-8);
  }
}

TEST_CASE("orthogonal_log errors") {
  Matrix sigma_x(2, 2);
  sigma_x << 0, 1, 1, 0;
  CHECK(code_of([&] { orthogonal_log(sigma_x); }) == ErrorCode::NegativeDeterminant);
  CHECK(code_of([&] { orthogonal_log(Matrix(-Matrix::Identity(2, 2))); }) == ErrorCode::AngleAtBranchCut);
  CHECK(code_of([&] { orthogonal_log(testing::rotation(pi - 1e-10)); }) == ErrorCode::AngleAtBranchCut);
}
