#pragma once

#include <span>
#include <vector>

#include "freefid/coupling.hpp"

namespace freefid {

/// Fermions on the complete graph:
///   A(mu)_ij = 1 + (mu - 1) delta_ij,  B(gamma)_ij = gamma sign(j - i).
struct CompleteGraphParams {
  double mu = 0.0;
  double gamma = 0.0;
  int size = 2;
};

QuadraticCoupling complete_graph(const CompleteGraphParams& params);

/// Two modes, A = eps sigma^z, B = i Delta sigma^y; Z = [[eps, -Delta], [Delta, -eps]].
QuadraticCoupling two_mode_ex1(double eps, double delta);

/// Two modes, A = eps 1, B = i Delta sigma^y; T is a rotation by atan2(Delta, eps).
QuadraticCoupling two_mode_ex2(double eps, double delta);

/// Block-diagonal direct sum of two_mode_ex2 blocks (L = 2M).
QuadraticCoupling multimode_ex2(std::span<const double> eps, std::span<const double> delta);

/// Signed block angles atan2(Delta_nu, eps_nu) of the multimode family, the
/// parametrization in which fidelity_commuting applies.
std::vector<double> multimode_ex2_angles(std::span<const double> eps, std::span<const double> delta);

}  // namespace freefid
