#pragma once

#include "iqconc/qcore/canonical.hpp"
#include "iqconc/qcore/state.hpp"

namespace iqconc::qcore {

/// Singlet conversion probability across `side` | rest: twice the smallest
/// eigenvalue of the reduced state of `side`. Only single-qubit sides are
/// supported (UnsupportedPartitionError otherwise).
double scp(const PureState& state, const QubitSubset& side);

/// Pairwise E2 of a three-qubit pure state: min(scp({i}), scp({j})), which is
/// the entanglement of assistance under SCP for pure three-qubit states.
double e2_pair(const PureState& state, int i, int j);

/// Two-qubit concurrence from the spin-flip spectrum. Singular values of
/// tau = W^T (Y x Y) W, with W = eigenvectors scaled by sqrt(eigenvalue), are
/// the square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y).
double wootters_concurrence(const DensityMatrix& rho);

/// 4 * lambda0 * lambda4. Note this gives 2 for the GHZ state; the
/// conventional normalization (4 lambda0^2 lambda4^2) would give 1. Both
/// vanish on the W class.
double three_tangle(const CanonicalThreeQubit& c);

// Von Neumann entropy in bits; eigenvalues below tol::kEntropyFloor are skipped.
double von_neumann_entropy(const DensityMatrix& rho);

// H2(p) in bits, H2(0) = H2(1) = 0.
double binary_entropy(double p);

// Robustness of imaginarity, 1/2 ||rho - rho^T||_1 in the computational basis.
double roi(const DensityMatrix& rho);

}  // namespace iqconc::qcore
