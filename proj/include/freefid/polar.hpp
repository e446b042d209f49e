#pragma once

#include <optional>

#include "freefid/coupling.hpp"
#include "freefid/matrix.hpp"

namespace freefid {

/// Left polar decomposition Z = P T obtained from the SVD
/// Z = left_frame * diag(sigma) * right_frame^T.
///
/// P = sqrt(Z Z^T) carries the single-particle energies, T is the orthogonal
/// factor that fixes the ground state. Frames are ordered to match the
/// ascending singular_values.
struct PolarForm {
  Matrix positive;      // P
  Matrix orthogonal;    // T
  Vector singular_values;
  Matrix left_frame;
  Matrix right_frame;
  int det_sign = 1;     // sign of det T, the ground-state parity
  double min_singular = 0.0;
  double singular_tolerance = 0.0;
  bool is_singular = false;
};

/// What polar_decompose fills in; OrthogonalOnly leaves `positive` empty.
enum class PolarParts { All, OrthogonalOnly };

/// Never throws for a valid coupling. When Z is singular the SVD-selected T
/// is still returned and is_singular is set. The default tolerance is
/// tolerance::kRelativeSingular times the largest singular value.
PolarForm polar_decompose(const QuadraticCoupling& coupling,
                          std::optional<double> tol_sing = std::nullopt, PolarParts parts = PolarParts::All);

/// Same, on a bare square matrix (no parity of size required).
PolarForm polar_decompose(const Matrix& z, std::optional<double> tol_sing = std::nullopt,
                          PolarParts parts = PolarParts::All);

}  // namespace freefid
