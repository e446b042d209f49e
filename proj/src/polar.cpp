#include "freefid/polar.hpp"

#include <Eigen/SVD>

#include "freefid/errors.hpp"
#include "freefid/logdet.hpp"
#include "freefid/tolerances.hpp"

namespace freefid {

namespace {

bool nearly_orthogonal(const Matrix& q) {
  return max_abs(q * q.transpose() - Matrix::Identity(q.rows(), q.cols())) <= tolerance::kFrameDefect;
}

}  // namespace

PolarForm polar_decompose(const Matrix& z, std::optional<double> tol_sing, PolarParts parts) {
  if (z.rows() != z.cols()) throw Error(ErrorCode::ShapeMismatch, "polar_decompose needs a square matrix");
  const Index n = z.rows();

  Eigen::BDCSVD<Matrix> bdc(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Vector sigma = bdc.singularValues();
  Matrix u = bdc.matrixU();
  Matrix v = bdc.matrixV();
  Matrix t = u * v.transpose();
  // Divide and conquer can lose orthogonality of the frames under heavy
  // deflation (e.g. a rank-one Z); Jacobi is slower but reliable there.
  if (!nearly_orthogonal(t)) {
    Eigen::JacobiSVD<Matrix> jac(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    sigma = jac.singularValues();
    u = jac.matrixU();
    v = jac.matrixV();
    t = u * v.transpose();
  }
  // Eigen orders singular values descending; flip everything to ascending.
  sigma.reverseInPlace();
  u.rowwise().reverseInPlace();
  v.rowwise().reverseInPlace();

  PolarForm out;
  out.orthogonal = std::move(t);
  out.det_sign = log_abs_det(out.orthogonal).sign < 0 ? -1 : 1;
  if (parts == PolarParts::All) {
    out.positive = (u * sigma.asDiagonal()) * u.transpose();
    out.positive = 0.5 * (out.positive + out.positive.transpose());
  }
  out.singular_values = std::move(sigma);
  out.left_frame = std::move(u);
  out.right_frame = std::move(v);

  const double largest = n > 0 ? out.singular_values(n - 1) : 0.0;
  out.min_singular = n > 0 ? out.singular_values(0) : 0.0;
  out.singular_tolerance = tol_sing.value_or(tolerance::kRelativeSingular * largest);
  out.is_singular = out.min_singular < out.singular_tolerance || largest == 0.0;
  return out;
}

PolarForm polar_decompose(const QuadraticCoupling& coupling, std::optional<double> tol_sing, PolarParts parts) {
  return polar_decompose(coupling.z(), tol_sing, parts);
}

}  // namespace freefid
