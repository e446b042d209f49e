#include "freefid/coupling.hpp"

#include <string>

#include "freefid/errors.hpp"
#include "freefid/tolerances.hpp"

namespace freefid {

namespace {

void require_even_square(const Matrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " is not square");
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(ErrorCode::OddSize,
                "number of modes must be even and positive, got " + std::to_string(m.rows()));
  }
}

}  // namespace

QuadraticCoupling::QuadraticCoupling(Matrix a, Matrix b)
    : a_(std::move(a)), b_(std::move(b)), z_(a_ - b_) {}

QuadraticCoupling make_coupling(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "A and B must be square matrices of equal size");
  }
  require_even_square(a, "A");

  const double sym_defect = max_abs(a - a.transpose());
  if (sym_defect > tolerance::kSymmetry) {
    throw Error(ErrorCode::NotSymmetric, "A deviates from symmetry by " + describe(sym_defect));
  }
  const double anti_defect = max_abs(b + b.transpose());
  if (anti_defect > tolerance::kSymmetry) {
    throw Error(ErrorCode::NotAntisymmetric,
                "B deviates from antisymmetry by " + describe(anti_defect));
  }

  // Exact projection; a no-op for inputs that already satisfy the symmetry.
  Matrix a_sym = a;
  Matrix b_anti = b;
  if (sym_defect > 0.0) a_sym = 0.5 * (a + a.transpose());
  if (anti_defect > 0.0) b_anti = 0.5 * (b - b.transpose());
  return QuadraticCoupling(std::move(a_sym), std::move(b_anti));
}

QuadraticCoupling coupling_from_matrix(const Matrix& z) {
  require_even_square(z, "Z");
  Matrix a = 0.5 * (z + z.transpose());
  Matrix b = 0.5 * (z.transpose() - z);
  return QuadraticCoupling(std::move(a), std::move(b));
}

}  // namespace freefid
