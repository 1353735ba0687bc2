#pragma once

#include <optional>
#include <vector>

#include "iqconc/bases/bases.hpp"
#include "iqconc/qcore/state.hpp"

namespace iqconc::swap {

/// Schmidt weights of sqrt(phi0)|00> + sqrt(phi1)|11>, phi0 >= phi1 >= 0.
struct TwoQubitPhi {
  double phi0 = 1.0;
  double phi1 = 0.0;

  // phi1 in [0, 1/2]; phi0 = 1 - phi1.
  static TwoQubitPhi from_phi1(double phi1);
  void validate() const;
};

/// |phi>_{A1 B} (x) |phi>_{A2 C} (x) |phi>_{A3 D}, reindexed to the register
/// order (A1, A2, A3, B, C, D). Only indices of the form (x, x) are nonzero.
qcore::PureState network_state(const TwoQubitPhi& phi);

struct SwapOutcome {
  int index = 0;            // position in the measurement basis
  double probability = 0.0;
  std::optional<qcore::PureState> post_state;  // (B, C, D); empty if p < cutoff
  double e2 = 0.0;          // e2_pair(post_state, B, C); 0 for empty branches
};

/// Measures (A1, A2, A3) of network_state(phi) in an 8-element basis.
/// Throws DomainError unless the basis is a verified three-qubit basis.
std::vector<SwapOutcome> swap_measure(const TwoQubitPhi& phi,
                                      const bases::ProjectiveBasis& basis);

// sum_i p_i e2_i
double average_yield(const std::vector<SwapOutcome>& outcomes);

// 2 phi1^2 (phi1 + 3 phi0)
double yield_ghz_closed(double phi1);

// 1 - phi0^2 phi1 - sqrt(k^2 - 4 phi0^2 phi1^2 (2 - 3 phi0 phi1)),
// k = phi0^3 + phi1^3 + 3 phi0 phi1^2; radicand clamped to 0 within
// tol::kRadicandClamp.
double yield_gw_closed(double phi1);

inline constexpr double kCrossoverLow = 0.3;
inline constexpr double kCrossoverHigh = 0.45;

// Root of yield_gw_closed - yield_ghz_closed on (0.3, 0.45), bisected to an
// interval below 1e-8. NumericalError if the bracket has no sign change.
double crossover_phi1();

struct AdvantagePeak {
  double phi1 = 0.0;
  double advantage = 0.0;
};

// Golden-section maximum of yield_gw - yield_ghz on [0, crossover_phi1()].
AdvantagePeak max_advantage();

struct YieldCurvePoint {
  double phi1 = 0.0;
  double yield_ghz = 0.0;
  double yield_gw = 0.0;
  double advantage = 0.0;  // yield_gw - yield_ghz
};

// Closed-form yields at phi1 = from + k * step for every grid point <= to.
// Requires 0 <= from < to <= 1/2 and step > 0.
std::vector<YieldCurvePoint> sweep_yields(double from, double to, double step);

}  // namespace iqconc::swap
