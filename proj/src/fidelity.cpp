#include "freefid/fidelity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "freefid/errors.hpp"
#include "freefid/logdet.hpp"
#include "freefid/orthogonal.hpp"
#include "fidelity_detail.hpp"

namespace freefid {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_pair(const Matrix& t, const Matrix& t_tilde) {
  if (t.rows() != t_tilde.rows() || t.cols() != t_tilde.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "orthogonal factors have different sizes");
  }
  require_orthogonal(t);
  require_orthogonal(t_tilde);
}

FidelityResult zero_fidelity(FidelityMethod method, int relative_sign) {
  return {0.0, kNegInf, method, relative_sign};
}

}  // namespace

std::string_view to_string(FidelityMethod method) noexcept {
  switch (method) {
    case FidelityMethod::Determinant: return "determinant";
    case FidelityMethod::Angles: return "angles";
    case FidelityMethod::Perelomov: return "perelomov";
    case FidelityMethod::Commuting: return "commuting";
  }
  return "unknown";
}

FidelityResult detail::fidelity_det_signed(const Matrix& t, int sign_t, const Matrix& t_tilde, int sign_t_tilde) {
  const int relative_sign = sign_t * sign_t_tilde;
  if (relative_sign < 0) return zero_fidelity(FidelityMethod::Determinant, relative_sign);

  // log|det((T + T~)/2)| = log|det(T + T~)| - L ln 2; halving is exact.
  const LogDet half_sum = log_abs_det(0.5 * (t + t_tilde));
  if (half_sum.sign == 0) return zero_fidelity(FidelityMethod::Determinant, relative_sign);

  FidelityResult out;
  out.method = FidelityMethod::Determinant;
  out.relative_det_sign = relative_sign;
  out.log_value = 0.5 * half_sum.log_abs;
  out.value = std::exp(out.log_value);
  return out;
}

FidelityResult fidelity_det(const Matrix& t, const Matrix& t_tilde) {
  require_pair(t, t_tilde);
  return detail::fidelity_det_signed(t, log_abs_det(t).sign, t_tilde, log_abs_det(t_tilde).sign);
}

FidelityResult fidelity_angles(const Matrix& t, const Matrix& t_tilde) {
  require_pair(t, t_tilde);
  const AngleSpectrum spectrum = orthogonal_angles(t.transpose() * t_tilde);
  if (spectrum.det_sign < 0) {
    throw Error(ErrorCode::NegativeRelativeDeterminant,
                "det(T^T T~) = -1; the fidelity is zero by parity (use fidelity_det)");
  }
  FidelityResult out;
  out.method = FidelityMethod::Angles;
  out.relative_det_sign = 1;
  for (double theta : spectrum.angles) {
    const double c = std::abs(std::cos(0.5 * theta));
    if (c == 0.0) return zero_fidelity(FidelityMethod::Angles, 1);
    out.log_value += std::log(c);
  }
  out.value = std::exp(out.log_value);
  return out;
}

double fidelity_commuting(std::span<const double> theta, std::span<const double> theta_tilde) {
  if (theta.size() != theta_tilde.size()) {
    throw Error(ErrorCode::LengthMismatch, "angle lists differ in length");
  }
  double product = 1.0;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    product *= std::cos(0.5 * (theta[k] - theta_tilde[k]));
  }
  return std::abs(product);
}

double fidelity_perelomov(const PairingMatrix& g, const PairingMatrix& g_tilde) {
  if (g.g.rows() != g_tilde.g.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "pairing matrices have different sizes");
  }
  const Index n = g.g.rows();
  const Matrix identity = Matrix::Identity(n, n);
  const LogDet cross = log_abs_det(identity + g.g.transpose() * g_tilde.g);
  if (cross.sign == 0) return 0.0;
  const LogDet self = log_abs_det(identity + g.g.transpose() * g.g);
  const LogDet other = log_abs_det(identity + g_tilde.g.transpose() * g_tilde.g);
  return std::exp(0.5 * cross.log_abs - 0.25 * self.log_abs - 0.25 * other.log_abs);
}

PerturbativeS perturbative_S(const OrthogonalFamily& t_of_lambda, double lambda, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::ConfigError, "finite-difference step must be positive");
  Matrix forward;
  Matrix backward;
  try {
    forward = orthogonal_log(t_of_lambda(lambda + step)).generator;
    backward = orthogonal_log(t_of_lambda(lambda - step)).generator;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NegativeDeterminant) {
      throw Error(ErrorCode::NonSpecialOrthogonal, "T(lambda) left SO(L) near lambda");
    }
    throw;
  }
  PerturbativeS out;
  out.generator_derivative = (forward - backward) / (2.0 * step);
  out.s2 = -(out.generator_derivative * out.generator_derivative).trace() / 16.0;
  return out;
}

double s2_example2(std::span<const double> eps, std::span<const double> deps,
                   std::span<const double> delta, std::span<const double> ddelta) {
  const std::size_t m = eps.size();
  if (deps.size() != m || delta.size() != m || ddelta.size() != m) {
    throw Error(ErrorCode::LengthMismatch, "s2_example2 inputs differ in length");
  }
  double sum = 0.0;
  for (std::size_t nu = 0; nu < m; ++nu) {
    const double e = eps[nu];
    const double d = delta[nu];
    const double norm2 = e * e + d * d;
    double theta_prime = 0.0;
    if (norm2 == 0.0) {
      theta_prime = 0.0;
    } else if (e != 0.0) {
      const double dz = ddelta[nu] / e - d * deps[nu] / (e * e);
      theta_prime = e * e / norm2 * dz;
    } else {
      // eps -> 0 limit of the same expression.
      theta_prime = (e * ddelta[nu] - d * deps[nu]) / norm2;
    }
    sum += theta_prime * theta_prime;
  }
  return sum / 8.0;
}

}  // namespace freefid
