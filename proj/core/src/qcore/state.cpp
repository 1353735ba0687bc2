#include "iqconc/qcore/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/eigen.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::qcore {
namespace {

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim))
    throw DomainError("state dimension must be a power of two >= 2, got " +
                      std::to_string(dim));
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits)
    throw CapacityError("state has " + std::to_string(n) + " qubits; at most " +
                        std::to_string(kMaxQubits) + " supported");
  return n;
}

// Bit position (from the LSB) of qubit q in an n-qubit index.
constexpr int bit_of(int q, int n) { return n - 1 - q; }

// Scatters the bits of `sub` (|positions| bits, MSB first) into the listed
// qubit positions of an n-qubit index.
std::size_t scatter(std::size_t sub, std::span<const int> positions, int n) {
  std::size_t full = 0;
  const int k = static_cast<int>(positions.size());
  for (int i = 0; i < k; ++i)
    if ((sub >> (k - 1 - i)) & 1u) full |= std::size_t{1} << bit_of(positions[i], n);
  return full;
}

}  // namespace

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
  const int n = qubits_for_dim(amplitudes.size());
  const double norm2 = norm_squared(amplitudes);
  if (std::abs(norm2 - 1.0) > tol::kEpsNorm)
    throw DomainError("state not normalized: |psi|^2 = " + std::to_string(norm2));
  return PureState(n, std::move(amplitudes));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const int n = qubits_for_dim(amplitudes.size());
  const double norm = std::sqrt(norm_squared(amplitudes));
  if (norm == 0.0) throw DomainError("cannot normalize the zero vector");
  for (auto& a : amplitudes) a /= norm;
  return PureState(n, std::move(amplitudes));
}

PureState PureState::basis_state(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw CapacityError("basis_state: qubit count out of range");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw DomainError("basis_state: index out of range");
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return PureState(num_qubits, std::move(a));
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DomainError("inner: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_squared(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
  const std::size_t d = m.rows();
  if (!m.is_square() || (d != 2 && d != 4 && d != 8))
    throw DomainError("density matrix must be 2x2, 4x4 or 8x8");
  if (m.hermiticity_residual() > tol::kEpsNorm)
    throw DomainError("density matrix not hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kEpsNorm)
    throw DomainError("density matrix trace " + std::to_string(tr.real()) + " != 1");
  const auto eig = hermitian_eigenvalues(m);
  if (eig.front() < -tol::kEpsEig)
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(eig.front()));
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  if (state.dim() > 8) throw CapacityError("density matrix limited to 3 qubits");
  return DensityMatrix(Matrix::outer(state.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return from_matrix(std::move(m));
}

QubitSubset::QubitSubset(std::initializer_list<int> indices)
    : QubitSubset(std::vector<int>(indices)) {}

QubitSubset::QubitSubset(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw DomainError("qubit subset must be nonempty");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw DomainError("qubit index must be non-negative");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw DomainError("qubit subset must be strictly increasing");
  }
}

bool QubitSubset::contains(int q) const {
  return std::binary_search(indices_.begin(), indices_.end(), q);
}

void QubitSubset::check_within(int num_qubits) const {
  if (indices_.back() >= num_qubits)
    throw DomainError("qubit index " + std::to_string(indices_.back()) +
                      " outside a " + std::to_string(num_qubits) + "-qubit register");
}

QubitSubset QubitSubset::complement(int num_qubits) const {
  check_within(num_qubits);
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q)
    if (!contains(q)) rest.push_back(q);
  return QubitSubset(std::move(rest));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.num_qubits() + b.num_qubits() > kMaxQubits)
    throw CapacityError("tensor_product: " +
                        std::to_string(a.num_qubits() + b.num_qubits()) +
                        " qubits exceeds the supported maximum");
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return PureState::normalized(std::move(out));
}

DensityMatrix partial_trace(const PureState& state, const QubitSubset& keep) {
  const int n = state.num_qubits();
  keep.check_within(n);
  if (static_cast<int>(keep.size()) == n)
    throw DomainError("partial_trace: keep must be a proper subset");
  if (keep.size() > 3) throw CapacityError("partial_trace: at most 3 kept qubits");
  const QubitSubset discard = keep.complement(n);

  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dd = std::size_t{1} << discard.size();
  Matrix rho(dk, dk);
  for (std::size_t e = 0; e < dd; ++e) {
    const std::size_t env = scatter(e, discard.indices(), n);
    for (std::size_t r = 0; r < dk; ++r) {
      const Complex ar = state[env | scatter(r, keep.indices(), n)];
      if (ar == Complex{}) continue;
      for (std::size_t c = 0; c < dk; ++c)
        rho(r, c) += ar * std::conj(state[env | scatter(c, keep.indices(), n)]);
    }
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

Branch project_subsystem(const PureState& state, const QubitSubset& measured,
                         std::span<const Complex> element) {
  const int n = state.num_qubits();
  measured.check_within(n);
  if (static_cast<int>(measured.size()) >= n)
    throw DomainError("project_subsystem: must leave at least one qubit unmeasured");
  const std::size_t dm = std::size_t{1} << measured.size();
  if (element.size() != dm)
    throw DomainError("project_subsystem: element dimension mismatch");
  const QubitSubset rest = measured.complement(n);
  const std::size_t dr = std::size_t{1} << rest.size();

  std::vector<Complex> residual(dr);
  for (std::size_t r = 0; r < dr; ++r) {
    const std::size_t base = scatter(r, rest.indices(), n);
    Complex acc{};
    for (std::size_t m = 0; m < dm; ++m)
      acc += std::conj(element[m]) * state[base | scatter(m, measured.indices(), n)];
    residual[r] = acc;
  }
  Branch branch;
  branch.probability = norm_squared(residual);
  if (branch.probability >= tol::kBranchCutoff)
    branch.post_state = PureState::normalized(std::move(residual));
  return branch;
}

}  // namespace iqconc::qcore
