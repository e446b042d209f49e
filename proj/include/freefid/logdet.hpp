#pragma once

#include "freefid/matrix.hpp"

namespace freefid {

/// log|det M| and sign(det M) from an LU factorization with partial
/// pivoting. sign is 0 and log_abs is -inf when any pivot magnitude falls
/// below tolerance::kPivotFloor.
struct LogDet {
  double log_abs = 0.0;
  int sign = 1;
};

LogDet log_abs_det(const Matrix& m);

}  // namespace freefid
