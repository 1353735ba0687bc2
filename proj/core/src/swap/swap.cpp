#include "iqconc/swap/swap.hpp"

#include <cmath>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::swap {

using qcore::Complex;
using qcore::PureState;

namespace {

void check_phi1(double phi1, const char* who) {
  if (!(phi1 >= 0.0 && phi1 <= 0.5))
    throw DomainError(std::string(who) + ": phi1 outside [0, 1/2]");
}

double advantage_at(double phi1) { return yield_gw_closed(phi1) - yield_ghz_closed(phi1); }

}  // namespace

TwoQubitPhi TwoQubitPhi::from_phi1(double phi1) {
  check_phi1(phi1, "TwoQubitPhi");
  return {1.0 - phi1, phi1};
}

void TwoQubitPhi::validate() const {
  if (!(phi1 >= 0.0 && phi0 >= phi1))
    throw DomainError("TwoQubitPhi: need phi0 >= phi1 >= 0");
  if (std::abs(phi0 + phi1 - 1.0) > tol::kEpsNorm)
    throw DomainError("TwoQubitPhi: phi0 + phi1 != 1");
}

PureState network_state(const TwoQubitPhi& phi) {
  phi.validate();
  const double amp[2] = {std::sqrt(phi.phi0), std::sqrt(phi.phi1)};
  std::vector<Complex> v(64);
  for (std::size_t x = 0; x < 8; ++x)
    v[(x << 3) | x] = amp[(x >> 2) & 1] * amp[(x >> 1) & 1] * amp[x & 1];
  return PureState::normalized(std::move(v));
}

std::vector<SwapOutcome> swap_measure(const TwoQubitPhi& phi,
                                      const bases::ProjectiveBasis& basis) {
  if (basis.dim() != 8) throw DomainError("swap_measure: basis must act on three qubits");
  bases::require_valid_basis(basis);
  const PureState network = network_state(phi);
  const qcore::QubitSubset alice{0, 1, 2};

  std::vector<SwapOutcome> outcomes;
  outcomes.reserve(8);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto branch = qcore::project_subsystem(network, alice, basis[i]);
    SwapOutcome o;
    o.index = static_cast<int>(i);
    o.probability = branch.probability;
    if (branch.post_state) {
      o.e2 = qcore::e2_pair(*branch.post_state, 0, 1);
      o.post_state = std::move(branch.post_state);
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

double average_yield(const std::vector<SwapOutcome>& outcomes) {
  double total = 0.0;
  for (const auto& o : outcomes) total += o.probability * o.e2;
  return total;
}

double yield_ghz_closed(double phi1) {
  check_phi1(phi1, "yield_ghz_closed");
  const double phi0 = 1.0 - phi1;
  return 2.0 * phi1 * phi1 * (phi1 + 3.0 * phi0);
}

double yield_gw_closed(double phi1) {
  check_phi1(phi1, "yield_gw_closed");
  const double phi0 = 1.0 - phi1;
  const double k = phi0 * phi0 * phi0 + phi1 * phi1 * phi1 + 3.0 * phi0 * phi1 * phi1;
  double radicand = k * k - 4.0 * phi0 * phi0 * phi1 * phi1 * (2.0 - 3.0 * phi0 * phi1);
  if (radicand < 0.0 && radicand > -tol::kRadicandClamp) radicand = 0.0;
  return 1.0 - phi0 * phi0 * phi1 - std::sqrt(radicand);
}

double crossover_phi1() {
  double lo = kCrossoverLow;
  double hi = kCrossoverHigh;
  double f_lo = advantage_at(lo);
  if ((f_lo > 0.0) == (advantage_at(hi) > 0.0))
    throw NumericalError("crossover_phi1: no sign change in bracket");
  while (hi - lo >= 1e-8) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = advantage_at(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AdvantagePeak max_advantage() {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = crossover_phi1();
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = advantage_at(x1);
  double f2 = advantage_at(x2);
  while (hi - lo >= 1e-7) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = advantage_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = advantage_at(x1);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, advantage_at(x)};
}

std::vector<YieldCurvePoint> sweep_yields(double from, double to, double step) {
  if (!(from >= 0.0 && from < to && to <= 0.5))
    throw DomainError("sweep_yields: need 0 <= from < to <= 0.5");
  if (!(step > 0.0)) throw DomainError("sweep_yields: step must be positive");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<YieldCurvePoint> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double phi1 = std::min(from + static_cast<double>(k) * step, to);
    YieldCurvePoint p;
    p.phi1 = phi1;
    p.yield_ghz = yield_ghz_closed(phi1);
    p.yield_gw = yield_gw_closed(phi1);
    p.advantage = p.yield_gw - p.yield_ghz;
    points.push_back(p);
  }
  return points;
}

}  // namespace iqconc::swap
