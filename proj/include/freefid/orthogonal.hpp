#pragma once

#include <complex>
#include <vector>

#include "freefid/matrix.hpp"

namespace freefid {

/// Rotation content of a real orthogonal L x L matrix (L even).
///
/// `angles` has exactly L/2 entries in [0, pi]: first the genuine rotation
/// angles (0, pi), then 0 for each pair of +1 eigenvalues, pi for each pair of
/// -1 eigenvalues, and finally pi for a leftover (+1, -1) couple when the
/// determinant is -1.
struct AngleSpectrum {
  std::vector<double> angles;
  int count_plus_one = 0;
  int count_minus_one = 0;
  int det_sign = 1;
  int rotation_pairs = 0;

  /// Eigenvalues of the source matrix rebuilt from the classification.
  std::vector<std::complex<double>> eigenvalues() const;
};

/// Orthogonal frame that block-diagonalizes Q:
///   frame^T Q frame = R(theta_0) + ... + (+1 block) + (-1 block)
/// Columns are grouped as: rotation pairs (2k, 2k+1) with
/// R(theta) = [[cos, -sin], [sin, cos]], theta in (0, pi); then +1
/// eigenvectors; then -1 eigenvectors.
struct OrthogonalCanonicalForm {
  Matrix frame;
  std::vector<double> rotation_angles;
  int count_plus_one = 0;
  int count_minus_one = 0;

  Index plus_one_column(int k) const { return 2 * static_cast<Index>(rotation_angles.size()) + k; }
  Index minus_one_column(int k) const { return plus_one_column(count_plus_one) + k; }
};

/// Skew-symmetric K with exp(K) = T, block angles in (-pi, pi).
struct SkewGenerator {
  Matrix generator;
};

bool is_orthogonal(const Matrix& q, double tol);

/// Throws ShapeMismatch for non-square input and NotOrthogonal when
/// |Q Q^T - I|_max exceeds tolerance::kOrthogonality.
void require_orthogonal(const Matrix& q);

OrthogonalCanonicalForm orthogonal_canonical_form(const Matrix& q);

/// Classifies the real Schur form of Q. Throws NotOrthogonal, OddSize and
/// UnpairedRealEigenvalue (a real 1x1 Schur block away from +-1).
AngleSpectrum orthogonal_angles(const Matrix& q);

/// Principal real logarithm of a special orthogonal matrix. Throws
/// NegativeDeterminant when det T = -1 and AngleAtBranchCut when T has an
/// eigenvalue within tolerance::kUnitEigenvalue of -1.
SkewGenerator orthogonal_log(const Matrix& t);

}  // namespace freefid
