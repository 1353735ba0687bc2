#pragma once

namespace iqconc::tol {

// Normalization of states and basis vectors.
inline constexpr double kEpsNorm = 1e-12;
// Eigenvalue floor for positivity checks and eigenvalue sums.
inline constexpr double kEpsEig = 1e-10;
// Entrywise hermiticity.
inline constexpr double kEpsHerm = 1e-10;

// Cyclic Jacobi stops once the off-diagonal Frobenius norm drops below this
// (scaled by max(1, ||A||_F)).
inline constexpr double kJacobiOffDiag = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigenvalues below this contribute nothing to von Neumann entropy.
inline constexpr double kEntropyFloor = 1e-14;
// Measurement branches below this probability are not renormalized.
inline constexpr double kBranchCutoff = 1e-14;
// Density-matrix eigenvalues at or below this are treated as exact zeros when
// building the Wootters decomposition (roundoff rank deficiency).
inline constexpr double kRankFloor = 1e-14;
// Radicand clamp for closed-form yields near phi1 = 0.
inline constexpr double kRadicandClamp = 1e-14;

}  // namespace iqconc::tol
