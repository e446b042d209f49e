#include "freefid/groundstate.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <string>

#include "freefid/errors.hpp"
#include "freefid/orthogonal.hpp"
#include "freefid/polar.hpp"
#include "freefid/tolerances.hpp"

namespace freefid {

ParityInfo parity_of(const Matrix& t) {
  const AngleSpectrum spectrum = orthogonal_angles(t);
  return {spectrum.count_minus_one, spectrum.det_sign};
}

PairingMatrix pairing_matrix(const Matrix& t) {
  const AngleSpectrum spectrum = orthogonal_angles(t);
  if (spectrum.count_minus_one > 0) {
    throw Error(ErrorCode::GNotDefined, "-1 is an eigenvalue of T (multiplicity " +
                                            std::to_string(spectrum.count_minus_one) + ")");
  }
  const Index n = t.rows();
  const Matrix identity = Matrix::Identity(n, n);
  const Matrix shifted = t + identity;

  Eigen::JacobiSVD<Matrix> conditioning(shifted);
  if (conditioning.singularValues()(n - 1) < tolerance::kPairingConditioning) {
    throw Error(ErrorCode::IllConditioned, "T + I is numerically singular");
  }

  Matrix g = Eigen::PartialPivLU<Matrix>(shifted).solve(t - identity);
  const double defect = max_abs(g + g.transpose());
  if (defect > tolerance::kPairingAntisymmetry * std::max(1.0, max_abs(g))) {
    throw Error(ErrorCode::IllConditioned,
                "solved pairing matrix is not antisymmetric (defect " + describe(defect) + ")");
  }

  PairingMatrix out;
  out.g = 0.5 * (g - g.transpose());
  out.t_values.reserve(spectrum.angles.size());
  for (double theta : spectrum.angles) out.t_values.push_back(std::tan(0.5 * theta));
  return out;
}

CanonicalGroundState canonical_ground_state(const Matrix& t) {
  if (t.rows() % 2 != 0) throw Error(ErrorCode::OddSize, "canonical_ground_state needs an even size");
  const OrthogonalCanonicalForm form = orthogonal_canonical_form(t);
  constexpr double pi = std::numbers::pi;
  const Index n = t.rows();

  CanonicalGroundState out;
  out.parity.minus_one_count = form.count_minus_one;
  out.parity.parity_sign = form.count_minus_one % 2 == 0 ? 1 : -1;
  out.odd_sector = out.parity.parity_sign < 0;
  out.mode_frame.resize(n, n);

  Index col = 0;
  const Index pairs = static_cast<Index>(form.rotation_angles.size());
  out.mode_frame.leftCols(2 * pairs) = form.frame.leftCols(2 * pairs);
  out.angles = form.rotation_angles;
  col = 2 * pairs;

  // (+1, +1) couples: theta = 0.
  const int plus_pairs = form.count_plus_one / 2;
  for (int k = 0; k < plus_pairs; ++k) {
    out.mode_frame.col(col++) = form.frame.col(form.plus_one_column(2 * k));
    out.mode_frame.col(col++) = form.frame.col(form.plus_one_column(2 * k + 1));
    out.angles.push_back(0.0);
  }
  // (-1, -1) couples: theta = pi, i.e. both modes occupied.
  const int minus_pairs = form.count_minus_one / 2;
  for (int k = 0; k < minus_pairs; ++k) {
    out.mode_frame.col(col++) = form.frame.col(form.minus_one_column(2 * k));
    out.mode_frame.col(col++) = form.frame.col(form.minus_one_column(2 * k + 1));
    out.angles.push_back(pi);
  }
  if (out.odd_sector) {
    out.mode_frame.col(col++) = form.frame.col(form.minus_one_column(form.count_minus_one - 1));
    out.mode_frame.col(col++) = form.frame.col(form.plus_one_column(form.count_plus_one - 1));
    out.angles.push_back(pi);
  }

  out.amplitudes.reserve(out.angles.size());
  for (double theta : out.angles) {
    if (theta == pi) {
      out.amplitudes.emplace_back(0.0, 1.0);
    } else {
      out.amplitudes.emplace_back(std::cos(0.5 * theta), std::sin(0.5 * theta));
    }
  }
  return out;
}

CanonicalGroundState canonical_ground_state(const QuadraticCoupling& coupling,
                                            std::optional<double> tol_sing) {
  const PolarForm polar = polar_decompose(coupling, tol_sing);
  if (polar.is_singular) {
    throw Error(ErrorCode::SingularCoupling,
                "Z is singular (min singular value " + describe(polar.min_singular) + ")");
  }
  return canonical_ground_state(polar.orthogonal);
}

}  // namespace freefid
