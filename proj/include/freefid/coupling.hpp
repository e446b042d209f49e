#pragma once

#include "freefid/matrix.hpp"

namespace freefid {

/// Coupling data of a quadratic fermionic Hamiltonian
///   H = sum_ij c_i^+ A_ij c_j + 1/2 sum_ij (c_i^+ B_ij c_j^+ + h.c.)
/// on L modes, parametrized by the single real matrix Z = A - B.
///
/// Instances are only produced by make_coupling / coupling_from_matrix, so
/// A is exactly symmetric, B exactly antisymmetric and L even.
class QuadraticCoupling {
 public:
  Index size() const noexcept { return z_.rows(); }
  const Matrix& z() const noexcept { return z_; }
  const Matrix& hopping() const noexcept { return a_; }
  const Matrix& pairing() const noexcept { return b_; }

 private:
  QuadraticCoupling(Matrix a, Matrix b);

  Matrix a_;
  Matrix b_;
  Matrix z_;

  friend QuadraticCoupling make_coupling(const Matrix& a, const Matrix& b);
  friend QuadraticCoupling coupling_from_matrix(const Matrix& z);
};

/// Validates A (symmetric) and B (antisymmetric). Deviations up to
/// tolerance::kSymmetry are projected away; larger ones throw NotSymmetric /
/// NotAntisymmetric. Throws ShapeMismatch and OddSize as well.
QuadraticCoupling make_coupling(const Matrix& a, const Matrix& b);

/// Splits an arbitrary real Z into A = (Z + Z^T)/2 and B = (Z^T - Z)/2.
QuadraticCoupling coupling_from_matrix(const Matrix& z);

}  // namespace freefid
