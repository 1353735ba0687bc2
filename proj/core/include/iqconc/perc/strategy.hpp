#pragma once

namespace iqconc::perc {

// Occupation probability of a contracted triangular site when every bond of
// the honeycomb carries a two-qubit state with Schmidt weights (1 - phi1, phi1).
// phi1 in [0, 1/2].
double p0_of_phi1(double phi1);

/// phi1 at which p0_of_phi1 crosses the triangular site threshold 1/2,
/// bisected on (0.1, 0.4) to 1e-8.
double phi1_percolation_threshold();

inline constexpr double kTriangularSiteThreshold = 0.5;

// 1 - 2 sin(pi / 18)
double honeycomb_bond_threshold();

struct StrategyReport {
  double p_ghz = 0.0;
  double p_gw = 0.0;
  double s_ghz = 0.0;
  double s_gw = 0.0;
  double bond_reduction_pct = 0.0;
  double ebit_reduction_pct = 0.0;
  double gw_avg_scp = 0.0;
  double gw_avg_roi = 0.0;
  double ghz_avg_scp = 0.0;
  double ghz_avg_roi = 0.0;
};

StrategyReport strategy_report();

}  // namespace iqconc::perc
