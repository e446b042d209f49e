#pragma once

// Numerical thresholds shared by all modules. Functions that accept an
// explicit tolerance default to these values.
namespace freefid::tolerance {

// Maximum |A - A^T| (resp. |B + B^T|) that make_coupling silently repairs.
inline constexpr double kSymmetry = 1e-12;

// Maximum entry of Q Q^T - I accepted as orthogonal.
inline constexpr double kOrthogonality = 1e-8;

// Maximum entry of T T^T - I for an SVD-built polar factor; above it
// polar_decompose recomputes the SVD with the Jacobi method.
inline constexpr double kFrameDefect = 1e-10;

// Real Schur 1x1 blocks within this distance of +1 / -1 are classified as
// those eigenvalues; also the distance to -1 that counts as the branch cut.
inline constexpr double kUnitEigenvalue = 1e-8;

// Default singular threshold for polar_decompose, relative to the largest
// singular value.
inline constexpr double kRelativeSingular = 1e-12;

// Smallest |u_ii| of an LU factor treated as nonzero by log_abs_det.
inline constexpr double kPivotFloor = 1e-300;

// Smallest singular value of T + I below which G = (T - 1)/(T + 1) is
// considered ill-conditioned.
inline constexpr double kPairingConditioning = 1e-10;

// Maximum antisymmetry defect of the solved pairing matrix (relative to
// max(1, |G|_max)).
inline constexpr double kPairingAntisymmetry = 1e-8;

// Default step for the central difference of the orthogonal logarithm.
inline constexpr double kGeneratorStep = 1e-5;

// Exact-diagonalization ground states with E1 - E0 below this are flagged.
inline constexpr double kDegenerateGap = 1e-9;

// Largest mode count the dense Fock-space oracle will accept.
inline constexpr int kMaxFockModes = 12;

}  // namespace freefid::tolerance
