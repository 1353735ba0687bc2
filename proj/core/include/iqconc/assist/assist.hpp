#pragma once

#include <vector>

#include "iqconc/assist/states.hpp"
#include "iqconc/bases/bases.hpp"
#include "iqconc/parallel.hpp"

namespace iqconc::assist {

// Entanglement of assistance of a pure three-qubit state under SCP; the same
// value as qcore::e2_pair.
double eoa_bound(const qcore::PureState& state, int i, int j);

struct AssistBranch {
  double probability = 0.0;
  double scp = 0.0;  // 0 for branches below tol::kBranchCutoff
};

struct AssistResult {
  double yield = 0.0;
  std::vector<AssistBranch> branches;  // in basis order
};

/// The helper measures its qubit in `basis`; each outcome leaves the other
/// two parties in a pure state whose SCP is averaged with the outcome
/// probabilities. Throws DomainError if the basis is not a verified qubit
/// basis or the helper index is not 0, 1 or 2.
AssistResult assisted_measurement(const qcore::PureState& state, int helper,
                                  const bases::ProjectiveBasis& basis);

inline double assisted_yield(const qcore::PureState& state, int helper,
                             const bases::ProjectiveBasis& basis) {
  return assisted_measurement(state, helper, basis).yield;
}

// arctan((sqrt(1 - l4^2) + l1) / l0): the best real basis for helper A
// concentrating B|C entanglement of a slice state.
double optimal_real_alpha(const SliceState& s);

// Average B|C entanglement of the (a, b) family when A measures
// complex_qubit_basis(alpha, beta).
double e2_im_closed(const SliceFamilyParam& p, double alpha, double beta);
double e2_re_closed(const SliceFamilyParam& p, double alpha);

struct BasisOptimum {
  double alpha = 0.0;
  double beta = 0.0;
  double yield = 0.0;
};

inline constexpr int kOptimizerGrid = 64;
inline constexpr double kOptimizerMinStep = 1e-6;

/// Deterministic search over parametric_qubit_basis(alpha, beta): a 64x64 grid
/// on [0, pi/2) x [0, pi), then compass refinement from the best grid point,
/// halving the step until it is below 1e-6. Grid ties go to the smallest
/// (alpha, beta) lexicographically, so the result does not depend on the
/// executor's worker count.
BasisOptimum optimize_qubit_basis(const qcore::PureState& state, int helper,
                                  const Executor& executor = Executor());

}  // namespace iqconc::assist
