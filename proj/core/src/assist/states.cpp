#include "iqconc/assist/states.hpp"

#include <cmath>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::assist {

using qcore::Complex;
using qcore::PureState;

PureState canonical_to_state(const CanonicalThreeQubit& c) {
  c.validate();
  std::vector<Complex> v(8);
  v[0b000] = c.lambda0;
  v[0b100] = std::polar(c.lambda1, c.phi);
  v[0b101] = c.lambda2;
  v[0b110] = c.lambda3;
  v[0b111] = c.lambda4;
  return PureState::from_amplitudes(std::move(v));
}

void SliceState::validate() const {
  if (!(lambda0 > 0.0 && lambda4 > 0.0 && lambda1 >= 0.0))
    throw DomainError("slice state needs lambda0 > 0, lambda4 > 0, lambda1 >= 0");
  const double sum = lambda0 * lambda0 + lambda1 * lambda1 + lambda4 * lambda4;
  if (std::abs(sum - 1.0) > tol::kEpsNorm)
    throw DomainError("slice state: lambda0^2 + lambda1^2 + lambda4^2 != 1");
}

CanonicalThreeQubit SliceState::to_canonical() const {
  validate();
  return {lambda0, lambda1, 0.0, 0.0, lambda4, 0.0};
}

PureState slice_to_state(const SliceState& s) { return canonical_to_state(s.to_canonical()); }

SliceFamilyParam SliceFamilyParam::from_a(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("slice family: a outside [0, 1]");
  SliceFamilyParam p{a, std::sqrt((1.0 - a * a) / 2.0)};
  return p;
}

void SliceFamilyParam::validate() const {
  if (!(a >= 0.0 && b >= 0.0)) throw DomainError("slice family: a, b must be non-negative");
  if (std::abs(a * a + 2.0 * b * b - 1.0) > tol::kEpsNorm)
    throw DomainError("slice family: a^2 + 2b^2 != 1");
}

PureState family_to_state(const SliceFamilyParam& p) {
  p.validate();
  std::vector<Complex> v(8);
  v[0b000] = p.b;
  v[0b100] = p.b;
  v[0b111] = p.a;
  return PureState::from_amplitudes(std::move(v));
}

void GeneralizedW::validate() const {
  if (!(x1 >= 0.0 && x2 >= 0.0 && x3 >= 0.0))
    throw DomainError("generalized W: weights must be non-negative");
  if (std::abs(x1 + x2 + x3 - 1.0) > tol::kEpsNorm)
    throw DomainError("generalized W: weights must sum to 1");
}

PureState generalized_w_to_state(const GeneralizedW& w) {
  w.validate();
  std::vector<Complex> v(8);
  v[0b100] = std::sqrt(w.x1);
  v[0b010] = std::sqrt(w.x2);
  v[0b001] = std::sqrt(w.x3);
  return PureState::from_amplitudes(std::move(v));
}

}  // namespace iqconc::assist
