#include "freefid/logdet.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>

#include "freefid/errors.hpp"
#include "freefid/tolerances.hpp"

namespace freefid {

LogDet log_abs_det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "log_abs_det needs a square matrix");
  LogDet out;
  if (m.rows() == 0) return out;

  const Eigen::PartialPivLU<Matrix> lu(m);
  const Matrix& packed = lu.matrixLU();
  for (Index i = 0; i < packed.rows(); ++i) {
    const double pivot = packed(i, i);
    if (!(std::abs(pivot) >= tolerance::kPivotFloor)) {
      return {-std::numeric_limits<double>::infinity(), 0};
    }
    out.log_abs += std::log(std::abs(pivot));
    if (pivot < 0.0) out.sign = -out.sign;
  }
  // Permutation parity.
  if (lu.permutationP().determinant() < 0) out.sign = -out.sign;
  return out;
}

}  // namespace freefid
