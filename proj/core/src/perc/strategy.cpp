#include "iqconc/perc/strategy.hpp"

#include <cmath>
#include <numbers>

#include "iqconc/bases/bases.hpp"
#include "iqconc/errors.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::perc {

double p0_of_phi1(double phi1) {
  if (!(phi1 >= 0.0 && phi1 <= 0.5)) throw DomainError("p0_of_phi1: phi1 outside [0, 1/2]");
  const double phi0 = 1.0 - phi1;
  const double s = phi0 * phi0 * phi0 + phi1 * phi1 * phi1 + 3.0 * phi0 * phi1 * phi1;
  double radicand = s * s - 4.0 * phi0 * phi0 * phi1 * phi1 * (2.0 - 3.0 * phi0 * phi1);
  if (radicand < 0.0 && radicand > -tol::kRadicandClamp) radicand = 0.0;
  return 1.0 - phi0 * phi0 * phi1 - std::sqrt(radicand);
}

double phi1_percolation_threshold() {
  double lo = 0.1;
  double hi = 0.4;
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (p0_of_phi1(mid) < kTriangularSiteThreshold)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double honeycomb_bond_threshold() { return 1.0 - 2.0 * std::sin(std::numbers::pi / 18.0); }

StrategyReport strategy_report() {
  StrategyReport r;
  const double phi1 = phi1_percolation_threshold();
  r.p_ghz = honeycomb_bond_threshold();
  r.p_gw = 2.0 * phi1;
  r.s_ghz = qcore::binary_entropy(r.p_ghz / 2.0);
  r.s_gw = qcore::binary_entropy(phi1);
  r.bond_reduction_pct = 100.0 * (r.p_ghz - r.p_gw) / r.p_ghz;
  r.ebit_reduction_pct = 100.0 * (r.s_ghz - r.s_gw) / r.s_ghz;
  const auto gw = bases::gw_basis();
  const auto ghz = bases::ghz_basis();
  r.gw_avg_scp = bases::basis_average_scp(gw);
  r.gw_avg_roi = bases::basis_average_roi(gw);
  r.ghz_avg_scp = bases::basis_average_scp(ghz);
  r.ghz_avg_roi = bases::basis_average_roi(ghz);
  return r;
}

}  // namespace iqconc::perc
