#include "freefid/models.hpp"

#include <cmath>
#include <string>

#include "freefid/errors.hpp"

namespace freefid {

QuadraticCoupling complete_graph(const CompleteGraphParams& params) {
  const int n = params.size;
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::OddSize, "complete graph needs an even size >= 2, got " + std::to_string(n));
  }
  Matrix a = Matrix::Ones(n, n);
  a.diagonal().setConstant(params.mu);
  Matrix b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = params.gamma;
      b(j, i) = -params.gamma;
    }
  }
  return make_coupling(a, b);
}

QuadraticCoupling two_mode_ex1(double eps, double delta) {
  Matrix a(2, 2);
  a << eps, 0.0, 0.0, -eps;
  Matrix b(2, 2);
  b << 0.0, delta, -delta, 0.0;
  return make_coupling(a, b);
}

QuadraticCoupling two_mode_ex2(double eps, double delta) {
  const double e[] = {eps};
  const double d[] = {delta};
  return multimode_ex2(e, d);
}

QuadraticCoupling multimode_ex2(std::span<const double> eps, std::span<const double> delta) {
  if (eps.size() != delta.size()) {
    throw Error(ErrorCode::LengthMismatch, "eps and delta lists differ in length");
  }
  if (eps.empty()) throw Error(ErrorCode::LengthMismatch, "at least one mode pair is required");
  const Index n = 2 * static_cast<Index>(eps.size());
  Matrix a = Matrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n);
  for (std::size_t nu = 0; nu < eps.size(); ++nu) {
    const Index k = 2 * static_cast<Index>(nu);
    a(k, k) = eps[nu];
    a(k + 1, k + 1) = eps[nu];
    b(k, k + 1) = delta[nu];
    b(k + 1, k) = -delta[nu];
  }
  return make_coupling(a, b);
}

std::vector<double> multimode_ex2_angles(std::span<const double> eps, std::span<const double> delta) {
  if (eps.size() != delta.size()) {
    throw Error(ErrorCode::LengthMismatch, "eps and delta lists differ in length");
  }
  std::vector<double> out(eps.size());
  for (std::size_t nu = 0; nu < eps.size(); ++nu) out[nu] = std::atan2(delta[nu], eps[nu]);
  return out;
}

}  // namespace freefid
