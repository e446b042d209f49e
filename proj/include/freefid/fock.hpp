#pragma once

#include "freefid/coupling.hpp"
#include "freefid/groundstate.hpp"
#include "freefid/matrix.hpp"

namespace freefid::fock {

// Dense brute-force Fock space for small L (verification only).
//
// Basis index n encodes occupations (n_1, ..., n_L) with mode 1 in the least
// significant bit. c_i carries the Jordan-Wigner phase (-1)^{sum_{j<i} n_j}.
// Mode indices in this API are 0-based.

struct FockVector {
  int modes = 0;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

struct ExactGroundState {
  double energy = 0.0;
  FockVector vector;
  int parity_sector = 1;
  double gap = 0.0;
  bool degenerate = false;
};

/// Vacuum |0...0> on `modes` modes. Throws TooLarge above
/// tolerance::kMaxFockModes.
FockVector vacuum(int modes);

/// c_i^+ |v> and c_i |v>.
FockVector create(int mode, const FockVector& v);
FockVector annihilate(int mode, const FockVector& v);

/// sum_i coeffs(i) c_i^+ |v>.
FockVector create_combination(const Vector& coeffs, const FockVector& v);

/// Dense 2^L x 2^L matrix of c_i.
Matrix annihilation_operator(int modes, int mode);

/// sum A_ij c_i^+ c_j + 1/2 sum B_ij (c_i^+ c_j^+ + c_j c_i).
Matrix build_fock_hamiltonian(const QuadraticCoupling& coupling);

/// Lowest eigenpair of a dense symmetric Hamiltonian.
ExactGroundState fock_ground_state(const Matrix& hamiltonian);

/// Normalized exp(1/2 sum_ij G_ij c_i^+ c_j^+)|0>.
FockVector gaussian_state_from_G(const PairingMatrix& pairing);

/// Product of paired states in the rotated mode basis, mapped back to the
/// original Fock basis.
FockVector state_from_angles(const CanonicalGroundState& state);

/// |<v, w>|.
double fock_overlap(const FockVector& v, const FockVector& w);

/// (-1)^{popcount(n)}.
int basis_parity(Index n);

}  // namespace freefid::fock
