#include "iqconc/assist/assist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/measures.hpp"

namespace iqconc::assist {

using qcore::PureState;

namespace {

constexpr double kPi = std::numbers::pi;

void check_helper(const PureState& state, int helper) {
  if (state.num_qubits() != 3) throw DomainError("assist: state must have 3 qubits");
  if (helper < 0 || helper > 2) throw DomainError("assist: helper must be 0, 1 or 2");
}

// Same as assisted_measurement without re-verifying the basis.
double yield_unchecked(const PureState& state, int helper,
                       const bases::ProjectiveBasis& basis) {
  double total = 0.0;
  for (const auto& element : basis.vectors()) {
    const auto branch = qcore::project_subsystem(state, {helper}, element);
    if (branch.post_state) total += branch.probability * qcore::scp(*branch.post_state, {0});
  }
  return total;
}

double objective(const PureState& state, int helper, double alpha, double beta) {
  return yield_unchecked(state, helper, bases::parametric_qubit_basis(alpha, beta));
}

}  // namespace

double eoa_bound(const PureState& state, int i, int j) { return qcore::e2_pair(state, i, j); }

AssistResult assisted_measurement(const PureState& state, int helper,
                                  const bases::ProjectiveBasis& basis) {
  check_helper(state, helper);
  if (basis.dim() != 2) throw DomainError("assist: helper basis must be a qubit basis");
  bases::require_valid_basis(basis);

  AssistResult result;
  for (const auto& element : basis.vectors()) {
    const auto branch = qcore::project_subsystem(state, {helper}, element);
    AssistBranch b{branch.probability, 0.0};
    if (branch.post_state) b.scp = qcore::scp(*branch.post_state, {0});
    result.yield += b.probability * b.scp;
    result.branches.push_back(b);
  }
  return result;
}

double optimal_real_alpha(const SliceState& s) {
  s.validate();
  return std::atan((std::sqrt(1.0 - s.lambda4 * s.lambda4) + s.lambda1) / s.lambda0);
}

double e2_im_closed(const SliceFamilyParam& p, double alpha, double beta) {
  p.validate();
  const double a2 = p.a * p.a;
  const double b2 = p.b * p.b;
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double cross = std::sin(2.0 * alpha) * std::cos(beta);
  return 2.0 * std::min(a2 * s * s, b2 * (1.0 + cross)) +
         2.0 * std::min(a2 * c * c, b2 * (1.0 - cross));
}

double e2_re_closed(const SliceFamilyParam& p, double alpha) {
  return e2_im_closed(p, alpha, 0.0);
}

BasisOptimum optimize_qubit_basis(const PureState& state, int helper,
                                  const Executor& executor) {
  check_helper(state, helper);
  constexpr int n = kOptimizerGrid;
  const double alpha_max = kPi / 2;
  const double beta_max = kPi;
  const double da = alpha_max / n;
  const double db = beta_max / n;

  std::vector<double> grid(static_cast<std::size_t>(n) * n);
  executor.for_each_index(grid.size(), [&](std::size_t k) {
    const int i = static_cast<int>(k / n);
    const int j = static_cast<int>(k % n);
    grid[k] = objective(state, helper, i * da, j * db);
  });

  std::size_t best_k = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (grid[k] > grid[best_k]) best_k = k;

  BasisOptimum best{static_cast<double>(best_k / n) * da,
                    static_cast<double>(best_k % n) * db, grid[best_k]};

  double step_a = da;
  double step_b = db;
  while (step_a >= kOptimizerMinStep || step_b >= kOptimizerMinStep) {
    const std::array<std::array<double, 2>, 4> moves{{{step_a, 0.0},
                                                      {-step_a, 0.0},
                                                      {0.0, step_b},
                                                      {0.0, -step_b}}};
    BasisOptimum candidate = best;
    for (const auto& [ma, mb] : moves) {
      const double a = std::clamp(best.alpha + ma, 0.0, alpha_max);
      const double b = std::clamp(best.beta + mb, 0.0, beta_max);
      const double y = objective(state, helper, a, b);
      if (y > candidate.yield) candidate = {a, b, y};
    }
    if (candidate.yield > best.yield) {
      best = candidate;
    } else {
      step_a *= 0.5;
      step_b *= 0.5;
    }
  }
  return best;
}

}  // namespace iqconc::assist
