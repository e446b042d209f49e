#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "freefid/coupling.hpp"
#include "freefid/matrix.hpp"

namespace freefid {

/// Fermion-number parity of the ground state, read off from det T = (-1)^p.
struct ParityInfo {
  int minus_one_count = 0;  // p
  int parity_sign = 1;
};

/// G = (T - 1)(T + 1)^{-1}, the antisymmetric generator of the Gaussian
/// ground state exp(1/2 c^+ G c^+)|0>. t_values[nu] = tan(theta_nu / 2).
struct PairingMatrix {
  Matrix g;
  std::vector<double> t_values;
};

/// Paired-mode form of the ground state. Pair nu lives on the columns
/// (2 nu, 2 nu + 1) of mode_frame; with d_k^+ = sum_i U_ik c_i^+ its state is
///   cos(theta/2) |0> + sin(theta/2) d_{2nu+1}^+ d_{2nu}^+ |0>.
/// In the odd sector the last pair instead holds a single particle in its
/// first mode (an eigendirection of T with eigenvalue -1) and leaves the
/// second (+1) mode empty; its angle is reported as pi.
struct CanonicalGroundState {
  std::vector<double> angles;
  Matrix mode_frame;
  ParityInfo parity;
  std::vector<std::pair<double, double>> amplitudes;
  bool odd_sector = false;

  Index size() const noexcept { return mode_frame.rows(); }
};

ParityInfo parity_of(const Matrix& t);

/// Throws GNotDefined when -1 is in Sp(T) and IllConditioned when T + I is
/// numerically singular without a detected -1 eigenvalue.
PairingMatrix pairing_matrix(const Matrix& t);

/// Throws SingularCoupling when the polar factor is not unique.
CanonicalGroundState canonical_ground_state(const QuadraticCoupling& coupling,
                                            std::optional<double> tol_sing = std::nullopt);

/// Same, starting from an orthogonal factor.
CanonicalGroundState canonical_ground_state(const Matrix& t);

}  // namespace freefid
