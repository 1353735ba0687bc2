#pragma once

#include "iqconc/qcore/state.hpp"

namespace iqconc::bases {

/// GHZ-SLOCC class parameters for
///   sqrt(K) (cos d|000> + e^{i varphi} sin d |phiA phiB phiC>),
///   |phiX> = cos t_X |0> + sin t_X |1>,
/// written in the computational local bases.
struct SloccGhzParams {
  double delta = 0.0;   // (0, pi/4]
  double theta1 = 0.0;  // (0, pi/2]
  double theta2 = 0.0;
  double theta3 = 0.0;
  double varphi = 0.0;  // [0, 2 pi)
  double K = 1.0;       // (1 + 2 cos d sin d cos t1 cos t2 cos t3 cos varphi)^-1

  // Validates ranges and fills in K.
  static SloccGhzParams make(double delta, double theta1, double theta2,
                             double theta3, double varphi);
};

qcore::PureState slocc_ghz_state(const SloccGhzParams& p);

/// Outcome of checking the two-product decomposition of G1 and the local
/// filter that produces it from a rotated GHZ state.
///
/// With a2 = sec d [ (1 + 1/sqrt5)/2 |0> + 1/sqrt5 |1> ] the sum misses G1.
/// Negating the |1> component of a2 fixes it, and a1 is then orthogonal to
/// a2 (theta1 = pi/2, not cos theta1 = 2/sqrt5). `passed` uses the negated form.
struct G1DecompositionReport {
  double decomposition_residual = 0.0;          // corrected a2, max |amp - G1|
  double unflipped_decomposition_residual = 0.0;  // a2 with +|1> component
  double product_norm_residual = 0.0;           // max | ||x|| - 1 | over a1, a2, b1, b2
  double filter_cos_theta1 = 0.0;               // <a1|a2> with corrected a2
  double filter_residual = 0.0;                 // filter with that theta1
  double unflipped_filter_residual = 0.0;         // filter with cos theta1 = 2/sqrt5
  double reconstructed_e2 = 0.0;
  bool passed = false;
};

G1DecompositionReport verify_g1_slocc_decomposition();

}  // namespace iqconc::bases
