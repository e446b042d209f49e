#pragma once

#include "freefid/fidelity.hpp"

namespace freefid::detail {

// fidelity_det for factors already known to be orthogonal, with their
// determinant signs supplied by the caller.
FidelityResult fidelity_det_signed(const Matrix& t, int sign_t, const Matrix& t_tilde, int sign_t_tilde);

}  // namespace freefid::detail
