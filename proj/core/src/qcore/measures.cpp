#include "iqconc/qcore/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/eigen.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::qcore {

void CanonicalThreeQubit::validate() const {
  const double ls[] = {lambda0, lambda1, lambda2, lambda3, lambda4};
  double sum = 0.0;
  for (double l : ls) {
    if (!(l >= 0.0)) throw DomainError("canonical coefficients must be non-negative");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > tol::kEpsNorm)
    throw DomainError("canonical coefficients: sum of squares != 1");
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) throw DomainError("canonical phase outside [0, pi]");
}

double scp(const PureState& state, const QubitSubset& side) {
  if (side.size() != 1)
    throw UnsupportedPartitionError("scp: only single-qubit sides are supported");
  const auto eig = hermitian_eigenvalues(partial_trace(state, side).matrix());
  return std::clamp(2.0 * eig.front(), 0.0, 1.0);
}

double e2_pair(const PureState& state, int i, int j) {
  if (state.num_qubits() != 3) throw DomainError("e2_pair: state must have 3 qubits");
  if (i == j) throw DomainError("e2_pair: parties must differ");
  if (i < 0 || i > 2 || j < 0 || j > 2) throw DomainError("e2_pair: party index out of range");
  return std::min(scp(state, {i}), scp(state, {j}));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DomainError("wootters_concurrence: needs a two-qubit state");
  const auto eig = hermitian_eigensystem(rho.matrix());
  if (eig.values.front() < -tol::kEpsEig)
    throw DomainError("wootters_concurrence: input not positive semidefinite");

  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < 4; ++k)
    if (eig.values[k] > tol::kRankFloor) support.push_back(k);
  if (support.empty()) return 0.0;

  const std::size_t r = support.size();
  Matrix w(4, r);
  for (std::size_t c = 0; c < r; ++c) {
    const double scale = std::sqrt(eig.values[support[c]]);
    for (std::size_t k = 0; k < 4; ++k) w(k, c) = scale * eig.vectors(k, support[c]);
  }
  // (Y x Y) maps |00>,|01>,|10>,|11> to -|11>, |10>, |01>, -|00>.
  Matrix flipped(4, r);
  for (std::size_t c = 0; c < r; ++c) {
    flipped(0, c) = -w(3, c);
    flipped(1, c) = w(2, c);
    flipped(2, c) = w(1, c);
    flipped(3, c) = -w(0, c);
  }
  const Matrix tau = w.transpose() * flipped;
  auto sv = singular_values(tau);
  double c = sv[0];
  for (std::size_t k = 1; k < sv.size(); ++k) c -= sv[k];
  return std::clamp(c, 0.0, 1.0);
}

double three_tangle(const CanonicalThreeQubit& c) {
  c.validate();
  return 4.0 * c.lambda0 * c.lambda4;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double l : hermitian_eigenvalues(rho.matrix()))
    if (l > tol::kEntropyFloor) s -= l * std::log2(l);
  return std::max(0.0, s);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p outside [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double roi(const DensityMatrix& rho) {
  const Matrix diff = rho.matrix() - rho.matrix().transpose();
  double trace_norm = 0.0;
  for (double l : hermitian_eigenvalues(diff)) trace_norm += std::abs(l);
  return 0.5 * trace_norm;
}

}  // namespace iqconc::qcore
