#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "freefid/groundstate.hpp"
#include "freefid/matrix.hpp"

namespace freefid {

enum class FidelityMethod { Determinant, Angles, Perelomov, Commuting };

std::string_view to_string(FidelityMethod method) noexcept;

/// |<Psi_Z, Psi_Z~>| together with its logarithm. relative_det_sign is the
/// sign of det(T^T T~); a value of -1 means the two ground states sit in
/// different parity sectors and value is exactly 0.
struct FidelityResult {
  double value = 1.0;
  double log_value = 0.0;
  FidelityMethod method = FidelityMethod::Determinant;
  int relative_det_sign = 1;
};

/// F = 2^{-L/2} |det(T + T~)|^{1/2}, evaluated in log space.
FidelityResult fidelity_det(const Matrix& t, const Matrix& t_tilde);

/// F = prod_nu |cos(Theta_nu / 2)| over the rotation angles of T^T T~.
/// Throws NegativeRelativeDeterminant when det(T^T T~) = -1.
FidelityResult fidelity_angles(const Matrix& t, const Matrix& t_tilde);

/// prod_nu |cos((theta_nu - theta~_nu) / 2)| for commuting families.
double fidelity_commuting(std::span<const double> theta, std::span<const double> theta_tilde);

/// Overlap of the Gaussian states exp(1/2 c^+ G c^+)|0>:
///   |det(1 + G^T G~)|^{1/2} / (det(1 + G^T G)^{1/4} det(1 + G~^T G~)^{1/4}).
double fidelity_perelomov(const PairingMatrix& g, const PairingMatrix& g_tilde);

/// Second-order coefficient of S = -ln F, with K' from a central difference
/// of orthogonal_log(T(lambda)).
struct PerturbativeS {
  double s2 = 0.0;
  Matrix generator_derivative;  // K'
};

using OrthogonalFamily = std::function<Matrix(double)>;

/// S2 = -(1/16) Tr(K'^2), so that -ln F(lambda, lambda + d) ~ S2 d^2.
/// `step` is the finite-difference step for K'.
PerturbativeS perturbative_S(const OrthogonalFamily& t_of_lambda, double lambda,
                             double step = 1e-5);

/// Closed form of S2 for the multimode two-level family (A = eps_nu 1,
/// B = i Delta_nu sigma^y per block), given eps, eps', Delta and Delta'.
double s2_example2(std::span<const double> eps, std::span<const double> deps,
                   std::span<const double> delta, std::span<const double> ddelta);

}  // namespace freefid
