#include "iqconc/bases/slocc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "iqconc/bases/bases.hpp"
#include "iqconc/errors.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::bases {
namespace {

using qcore::Complex;
using Qubit = std::array<Complex, 2>;
constexpr double kPi = std::numbers::pi;

std::vector<Complex> product3(const Qubit& a, const Qubit& b, const Qubit& c) {
  std::vector<Complex> v(8);
  for (int i = 0; i < 8; ++i) v[i] = a[(i >> 2) & 1] * b[(i >> 1) & 1] * c[i & 1];
  return v;
}

// Orthogonal complement with the sign convention {x0|0>+x1|1>, x1*|0>-x0*|1>}.
Qubit perp(const Qubit& x) { return {std::conj(x[1]), -std::conj(x[0])}; }

double norm(const Qubit& x) { return std::sqrt(std::norm(x[0]) + std::norm(x[1])); }

double max_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Normalizes `v`, aligns its global phase to `target`, returns max deviation.
double deviation_up_to_normalization(std::vector<Complex> v,
                                     const std::vector<Complex>& target) {
  const Complex overlap = qcore::inner(target, v);
  const double n = std::sqrt(qcore::norm_squared(v));
  if (n == 0.0 || std::abs(overlap) == 0.0) return INFINITY;
  const Complex phase = overlap / std::abs(overlap);
  for (auto& z : v) z /= phase * n;
  return max_deviation(v, target);
}

// (A (x) I (x) I) (|a1 b1 c1> + |a1p b1p c1p>)/sqrt2 with
// A = cos d |a1><a1| + sin d cos t |a1><a1p| + sin d sin t |a1p><a1p|.
std::vector<Complex> filtered_ghz(const Qubit& a1, const Qubit& b1, double cos_d,
                                  double sin_d, double cos_t, double sin_t) {
  const Qubit a1p = perp(a1);
  const Qubit b1p = perp(b1);
  // A|a1> = cos d |a1>;  A|a1p> = sin d (cos t |a1> + sin t |a1p>).
  Qubit a_first{cos_d * a1[0], cos_d * a1[1]};
  Qubit a_second{sin_d * (cos_t * a1[0] + sin_t * a1p[0]),
                 sin_d * (cos_t * a1[1] + sin_t * a1p[1])};
  auto v = product3(a_first, b1, b1);
  const auto w = product3(a_second, b1p, b1p);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) / std::sqrt(2.0);
  return v;
}

}  // namespace

SloccGhzParams SloccGhzParams::make(double delta, double theta1, double theta2,
                                    double theta3, double varphi) {
  if (!(delta > 0.0 && delta <= kPi / 4)) throw DomainError("slocc: delta outside (0, pi/4]");
  for (double t : {theta1, theta2, theta3})
    if (!(t > 0.0 && t <= kPi / 2)) throw DomainError("slocc: theta outside (0, pi/2]");
  if (!(varphi >= 0.0 && varphi < 2 * kPi)) throw DomainError("slocc: varphi outside [0, 2pi)");
  SloccGhzParams p{delta, theta1, theta2, theta3, varphi, 1.0};
  p.K = 1.0 / (1.0 + 2.0 * std::cos(delta) * std::sin(delta) * std::cos(theta1) *
                         std::cos(theta2) * std::cos(theta3) * std::cos(varphi));
  return p;
}

qcore::PureState slocc_ghz_state(const SloccGhzParams& p) {
  const Qubit zero{1.0, 0.0};
  auto phi = [](double t) { return Qubit{std::cos(t), std::sin(t)}; };
  auto v = product3(zero, zero, zero);
  const auto w = product3(phi(p.theta1), phi(p.theta2), phi(p.theta3));
  const Complex e = std::polar(std::sin(p.delta), p.varphi);
  const double k = std::sqrt(p.K);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * (std::cos(p.delta) * v[i] + e * w[i]);
  return qcore::PureState::from_amplitudes(std::move(v));
}

G1DecompositionReport verify_g1_slocc_decomposition() {
  const double s5 = std::sqrt(5.0);
  const double cos_d = std::sqrt((5.0 + s5) / 10.0);
  const double sin_d = std::sqrt((5.0 - s5) / 10.0);
  const double golden = (1.0 + s5) / 2.0;

  const Qubit a1{0.5 * (1.0 - 1.0 / s5) / sin_d, (1.0 / s5) / sin_d};
  const Qubit a2_plus{0.5 * (1.0 + 1.0 / s5) / cos_d, (1.0 / s5) / cos_d};
  const Qubit a2{a2_plus[0], -a2_plus[1]};
  const Qubit b1{1.0 / (s5 * cos_d), golden / (s5 * cos_d)};
  const Qubit b2{1.0 / (s5 * sin_d), (1.0 - golden) / (s5 * sin_d)};

  const std::vector<Complex> g1 = gw_basis()[0];

  auto combine = [&](const Qubit& second_a) {
    auto v = product3(a1, b1, b1);
    const auto w = product3(second_a, b2, b2);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cos_d * v[i] + sin_d * w[i];
    return v;
  };

  G1DecompositionReport r;
  const auto reconstructed = combine(a2);
  r.decomposition_residual = max_deviation(reconstructed, g1);
  r.unflipped_decomposition_residual = max_deviation(combine(a2_plus), g1);
  for (const Qubit& x : {a1, a2, b1, b2})
    r.product_norm_residual = std::max(r.product_norm_residual, std::abs(norm(x) - 1.0));

  r.filter_cos_theta1 = (std::conj(a1[0]) * a2[0] + std::conj(a1[1]) * a2[1]).real();
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - r.filter_cos_theta1 * r.filter_cos_theta1));
  r.filter_residual = deviation_up_to_normalization(
      filtered_ghz(a1, b1, cos_d, sin_d, r.filter_cos_theta1, sin_t), g1);
  r.unflipped_filter_residual = deviation_up_to_normalization(
      filtered_ghz(a1, b1, cos_d, sin_d, 2.0 / s5, 1.0 / s5), g1);

  r.reconstructed_e2 =
      qcore::e2_pair(qcore::PureState::normalized(reconstructed), 0, 1);

  constexpr double kTol = 1e-12;
  r.passed = r.decomposition_residual < kTol && r.product_norm_residual < kTol &&
             r.filter_residual < kTol &&
             std::abs(r.reconstructed_e2 - (1.0 - 1.0 / s5)) < kTol;
  return r;
}

}  // namespace iqconc::bases
