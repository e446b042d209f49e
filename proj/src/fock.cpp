#include "freefid/fock.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <string>

#include "freefid/errors.hpp"
#include "freefid/tolerances.hpp"

namespace freefid::fock {

namespace {

using Basis = std::uint32_t;

void require_modes(Index modes) {
  if (modes < 0 || modes > tolerance::kMaxFockModes) {
    throw Error(ErrorCode::TooLarge, "Fock oracle supports at most " +
                                         std::to_string(tolerance::kMaxFockModes) + " modes, got " +
                                         std::to_string(modes));
  }
}

// Jordan-Wigner phase for acting with mode `i` on basis state n.
double jw_sign(Basis n, int i) {
  const Basis below = n & ((Basis{1} << i) - 1);
  return (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

// c_i^+ |n>: returns false when mode i is already occupied.
bool apply_create(int i, Basis n, Basis& out, double& sign) {
  if (n & (Basis{1} << i)) return false;
  sign *= jw_sign(n, i);
  out = n | (Basis{1} << i);
  return true;
}

bool apply_annihilate(int i, Basis n, Basis& out, double& sign) {
  if (!(n & (Basis{1} << i))) return false;
  sign *= jw_sign(n, i);
  out = n ^ (Basis{1} << i);
  return true;
}

void require_mode(int modes, int mode) {
  if (mode < 0 || mode >= modes) {
    throw Error(ErrorCode::ShapeMismatch, "mode index " + std::to_string(mode) + " out of range");
  }
}

// sum_{i<j} G_ij c_i^+ c_j^+ |v>, which equals 1/2 c^+ G c^+ for antisymmetric G.
FockVector apply_pair_operator(const Matrix& g, const FockVector& v) {
  FockVector out{v.modes, Vector::Zero(v.amplitudes.size())};
  for (Index n = 0; n < v.amplitudes.size(); ++n) {
    const double amp = v.amplitudes(n);
    if (amp == 0.0) continue;
    for (int i = 0; i < v.modes; ++i) {
      for (int j = i + 1; j < v.modes; ++j) {
        const double gij = g(i, j);
        if (gij == 0.0) continue;
        double sign = 1.0;
        Basis mid = 0;
        Basis end = 0;
        if (!apply_create(j, static_cast<Basis>(n), mid, sign)) continue;
        if (!apply_create(i, mid, end, sign)) continue;
        out.amplitudes(end) += sign * gij * amp;
      }
    }
  }
  return out;
}

}  // namespace

int basis_parity(Index n) { return std::popcount(static_cast<Basis>(n)) % 2 == 0 ? 1 : -1; }

FockVector vacuum(int modes) {
  require_modes(modes);
  FockVector v{modes, Vector::Zero(Index{1} << modes)};
  v.amplitudes(0) = 1.0;
  return v;
}

FockVector create(int mode, const FockVector& v) {
  require_mode(v.modes, mode);
  FockVector out{v.modes, Vector::Zero(v.amplitudes.size())};
  for (Index n = 0; n < v.amplitudes.size(); ++n) {
    double sign = 1.0;
    Basis m = 0;
    if (apply_create(mode, static_cast<Basis>(n), m, sign)) out.amplitudes(m) += sign * v.amplitudes(n);
  }
  return out;
}

FockVector annihilate(int mode, const FockVector& v) {
  require_mode(v.modes, mode);
  FockVector out{v.modes, Vector::Zero(v.amplitudes.size())};
  for (Index n = 0; n < v.amplitudes.size(); ++n) {
    double sign = 1.0;
    Basis m = 0;
    if (apply_annihilate(mode, static_cast<Basis>(n), m, sign)) out.amplitudes(m) += sign * v.amplitudes(n);
  }
  return out;
}

FockVector create_combination(const Vector& coeffs, const FockVector& v) {
  if (coeffs.size() != v.modes) throw Error(ErrorCode::ShapeMismatch, "coefficient count != modes");
  FockVector out{v.modes, Vector::Zero(v.amplitudes.size())};
  for (int i = 0; i < v.modes; ++i) {
    if (coeffs(i) == 0.0) continue;
    out.amplitudes += coeffs(i) * create(i, v).amplitudes;
  }
  return out;
}

Matrix annihilation_operator(int modes, int mode) {
  require_modes(modes);
  require_mode(modes, mode);
  const Index dim = Index{1} << modes;
  Matrix c = Matrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    double sign = 1.0;
    Basis m = 0;
    if (apply_annihilate(mode, static_cast<Basis>(n), m, sign)) c(m, n) = sign;
  }
  return c;
}

Matrix build_fock_hamiltonian(const QuadraticCoupling& coupling) {
  const Index modes = coupling.size();
  require_modes(modes);
  const Matrix& a = coupling.hopping();
  const Matrix& b = coupling.pairing();
  const int l = static_cast<int>(modes);
  const Index dim = Index{1} << l;
  Matrix h = Matrix::Zero(dim, dim);

  for (Index col = 0; col < dim; ++col) {
    const Basis n = static_cast<Basis>(col);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        Basis mid = 0;
        Basis end = 0;
        double sign = 1.0;
        // A_ij c_i^+ c_j
        if (a(i, j) != 0.0 && apply_annihilate(j, n, mid, sign) && apply_create(i, mid, end, sign)) {
          h(end, col) += a(i, j) * sign;
        }
        if (b(i, j) == 0.0) continue;
        // 1/2 B_ij c_i^+ c_j^+
        sign = 1.0;
        if (apply_create(j, n, mid, sign) && apply_create(i, mid, end, sign)) {
          h(end, col) += 0.5 * b(i, j) * sign;
        }
        // 1/2 B_ij c_j c_i
        sign = 1.0;
        if (apply_annihilate(i, n, mid, sign) && apply_annihilate(j, mid, end, sign)) {
          h(end, col) += 0.5 * b(i, j) * sign;
        }
      }
    }
  }
  return h;
}

ExactGroundState fock_ground_state(const Matrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, "Hamiltonian must be a nonempty square matrix");
  }
  const Index dim = hamiltonian.rows();
  const int modes = std::countr_zero(static_cast<std::uint64_t>(dim));
  if ((Index{1} << modes) != dim) throw Error(ErrorCode::ShapeMismatch, "dimension is not a power of two");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
  ExactGroundState out;
  out.energy = solver.eigenvalues()(0);
  out.gap = dim > 1 ? solver.eigenvalues()(1) - out.energy : 0.0;
  out.degenerate = dim > 1 && out.gap < tolerance::kDegenerateGap;
  out.vector = FockVector{modes, solver.eigenvectors().col(0)};

  double even_weight = 0.0;
  double odd_weight = 0.0;
  for (Index n = 0; n < dim; ++n) {
    const double w = out.vector.amplitudes(n) * out.vector.amplitudes(n);
    (basis_parity(n) > 0 ? even_weight : odd_weight) += w;
  }
  out.parity_sector = even_weight >= odd_weight ? 1 : -1;
  return out;
}

FockVector gaussian_state_from_G(const PairingMatrix& pairing) {
  const Matrix& g = pairing.g;
  if (g.rows() != g.cols()) throw Error(ErrorCode::ShapeMismatch, "G is not square");
  require_modes(g.rows());
  const int modes = static_cast<int>(g.rows());

  // The pair operator is nilpotent of order L/2 + 1.
  FockVector state = vacuum(modes);
  FockVector term = state;
  for (int k = 1; k <= modes / 2; ++k) {
    term = apply_pair_operator(g, term);
    term.amplitudes /= static_cast<double>(k);
    state.amplitudes += term.amplitudes;
  }
  state.amplitudes.normalize();
  return state;
}

FockVector state_from_angles(const CanonicalGroundState& gs) {
  const Index modes = gs.size();
  require_modes(modes);
  const int l = static_cast<int>(modes);
  const Matrix& u = gs.mode_frame;

  FockVector state = vacuum(l);
  const int pairs = static_cast<int>(gs.angles.size());
  for (int nu = 0; nu < pairs; ++nu) {
    const Index first = 2 * nu;
    const Index second = first + 1;
    if (gs.odd_sector && nu == pairs - 1) {
      state = create_combination(u.col(first), state);
      continue;
    }
    const auto [c, s] = gs.amplitudes[nu];
    if (s == 0.0) {
      state.amplitudes *= c;
      continue;
    }
    FockVector paired = create_combination(u.col(second), create_combination(u.col(first), state));
    state.amplitudes = c * state.amplitudes + s * paired.amplitudes;
  }
  return state;
}

double fock_overlap(const FockVector& v, const FockVector& w) {
  if (v.modes != w.modes || v.amplitudes.size() != w.amplitudes.size()) {
    throw Error(ErrorCode::ShapeMismatch, "Fock vectors live on different mode counts");
  }
  return std::abs(v.amplitudes.dot(w.amplitudes));
}

}  // namespace freefid::fock
