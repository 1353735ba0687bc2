#pragma once

#include "iqconc/qcore/canonical.hpp"
#include "iqconc/qcore/state.hpp"

namespace iqconc::assist {

using qcore::CanonicalThreeQubit;

// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
qcore::PureState canonical_to_state(const CanonicalThreeQubit& c);

/// l0|000> + l1|100> + l4|111>: GHZ-class with only the B|C concurrence
/// nonzero.
struct SliceState {
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double lambda4 = 0.0;

  // lambda0^2 + lambda1^2 + lambda4^2 = 1, lambda0 > 0, lambda4 > 0.
  void validate() const;
  CanonicalThreeQubit to_canonical() const;
};

qcore::PureState slice_to_state(const SliceState& s);

/// b|000> + b|100> + a|111> with a^2 + 2 b^2 = 1.
struct SliceFamilyParam {
  double a = 0.0;
  double b = 0.0;

  static SliceFamilyParam from_a(double a);
  void validate() const;
};

qcore::PureState family_to_state(const SliceFamilyParam& p);

/// sqrt(x1)|100> + sqrt(x2)|010> + sqrt(x3)|001>, x1 + x2 + x3 = 1.
struct GeneralizedW {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  void validate() const;
};

qcore::PureState generalized_w_to_state(const GeneralizedW& w);

}  // namespace iqconc::assist
