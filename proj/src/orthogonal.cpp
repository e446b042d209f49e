#include "freefid/orthogonal.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "freefid/errors.hpp"
#include "freefid/logdet.hpp"
#include "freefid/tolerances.hpp"

namespace freefid {

bool is_orthogonal(const Matrix& q, double tol) {
  if (q.rows() != q.cols()) return false;
  const Matrix defect = q * q.transpose() - Matrix::Identity(q.rows(), q.cols());
  return max_abs(defect) <= tol;
}

void require_orthogonal(const Matrix& q) {
  if (q.rows() != q.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
  if (!is_orthogonal(q, tolerance::kOrthogonality)) {
    throw Error(ErrorCode::NotOrthogonal, "|Q Q^T - I|_max exceeds " +
                                              describe(tolerance::kOrthogonality));
  }
}

OrthogonalCanonicalForm orthogonal_canonical_form(const Matrix& q) {
  require_orthogonal(q);
  const Index n = q.rows();

  Eigen::RealSchur<Matrix> schur(q);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::UnpairedRealEigenvalue, "real Schur iteration did not converge");
  }
  const Matrix& s = schur.matrixT();
  const Matrix& u = schur.matrixU();

  std::vector<Index> pair_first;
  std::vector<Index> pair_second;
  std::vector<double> pair_angle;
  std::vector<Index> plus;
  std::vector<Index> minus;

  for (Index i = 0; i < n;) {
    if (i + 1 < n && s(i + 1, i) != 0.0) {
      // Normal 2x2 block, ~ c I + s J up to rounding. Orient it so that the
      // lower off-diagonal entry is positive.
      const double c = 0.5 * (s(i, i) + s(i + 1, i + 1));
      double sn = 0.5 * (s(i + 1, i) - s(i, i + 1));
      Index first = i;
      Index second = i + 1;
      if (sn < 0.0) {
        std::swap(first, second);
        sn = -sn;
      }
      pair_first.push_back(first);
      pair_second.push_back(second);
      pair_angle.push_back(std::atan2(sn, c));
      i += 2;
      continue;
    }
    const double d = s(i, i);
    if (std::abs(d - 1.0) < tolerance::kUnitEigenvalue) {
      plus.push_back(i);
    } else if (std::abs(d + 1.0) < tolerance::kUnitEigenvalue) {
      minus.push_back(i);
    } else {
      throw Error(ErrorCode::UnpairedRealEigenvalue,
                  "real Schur block " + describe(d) + " is not +-1");
    }
    ++i;
  }

  OrthogonalCanonicalForm out;
  out.frame.resize(n, n);
  Index col = 0;
  for (std::size_t k = 0; k < pair_angle.size(); ++k) {
    out.frame.col(col++) = u.col(pair_first[k]);
    out.frame.col(col++) = u.col(pair_second[k]);
  }
  for (Index k : plus) out.frame.col(col++) = u.col(k);
  for (Index k : minus) out.frame.col(col++) = u.col(k);
  out.rotation_angles = std::move(pair_angle);
  out.count_plus_one = static_cast<int>(plus.size());
  out.count_minus_one = static_cast<int>(minus.size());
  return out;
}

AngleSpectrum orthogonal_angles(const Matrix& q) {
  if (q.rows() % 2 != 0) {
    throw Error(ErrorCode::OddSize, "orthogonal_angles needs an even dimension");
  }
  const OrthogonalCanonicalForm form = orthogonal_canonical_form(q);
  constexpr double pi = std::numbers::pi;

  AngleSpectrum out;
  out.count_plus_one = form.count_plus_one;
  out.count_minus_one = form.count_minus_one;
  out.det_sign = form.count_minus_one % 2 == 0 ? 1 : -1;
  out.rotation_pairs = static_cast<int>(form.rotation_angles.size());
  out.angles = form.rotation_angles;
  out.angles.insert(out.angles.end(), form.count_plus_one / 2, 0.0);
  out.angles.insert(out.angles.end(), form.count_minus_one / 2, pi);
  if (form.count_minus_one % 2 != 0) out.angles.push_back(pi);
  return out;
}

std::vector<std::complex<double>> AngleSpectrum::eigenvalues() const {
  std::vector<std::complex<double>> out;
  for (int k = 0; k < rotation_pairs; ++k) {
    out.push_back(std::polar(1.0, angles[k]));
    out.push_back(std::polar(1.0, -angles[k]));
  }
  out.insert(out.end(), count_plus_one, {1.0, 0.0});
  out.insert(out.end(), count_minus_one, {-1.0, 0.0});
  return out;
}

SkewGenerator orthogonal_log(const Matrix& t) {
  require_orthogonal(t);
  if (log_abs_det(t).sign < 0) {
    throw Error(ErrorCode::NegativeDeterminant, "no real logarithm in the special orthogonal branch");
  }
  const OrthogonalCanonicalForm form = orthogonal_canonical_form(t);
  constexpr double pi = std::numbers::pi;
  if (form.count_minus_one > 0) {
    throw Error(ErrorCode::AngleAtBranchCut, "T has eigenvalue -1");
  }
  const Index n = t.rows();
  Matrix block = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < form.rotation_angles.size(); ++k) {
    const double theta = form.rotation_angles[k];
    if (pi - theta < tolerance::kUnitEigenvalue) {
      throw Error(ErrorCode::AngleAtBranchCut, "rotation angle within tolerance of pi");
    }
    const Index a = 2 * static_cast<Index>(k);
    block(a + 1, a) = theta;
    block(a, a + 1) = -theta;
  }
  Matrix k = form.frame * block * form.frame.transpose();
  SkewGenerator out;
  out.generator = 0.5 * (k - k.transpose());
  return out;
}

}  // namespace freefid
