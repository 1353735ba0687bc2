#pragma once

namespace iqconc::qcore {

/// Parameters of the canonical three-qubit form
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>,
/// with all l_k >= 0, sum l_k^2 = 1 and phi in [0, pi].
struct CanonicalThreeQubit {
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double phi = 0.0;

  // Throws DomainError when an invariant fails.
  void validate() const;
};

}  // namespace iqconc::qcore
