#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "iqconc/qcore/matrix.hpp"

namespace iqconc::qcore {

inline constexpr int kMaxQubits = 6;

/// Normalized pure state on 1..6 qubits.
///
/// Qubit 0 is the leftmost ket label and the most significant bit of the
/// amplitude index: |abc> sits at index 4a + 2b + c.
class PureState {
 public:
  // Amplitudes must already be normalized within tol::kEpsNorm.
  static PureState from_amplitudes(std::vector<Complex> amplitudes);
  // Rescales to unit norm; throws DomainError on a zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);
  static PureState basis_state(int num_qubits, std::size_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  PureState(int n, std::vector<Complex> a) : num_qubits_(n), amplitudes_(std::move(a)) {}

  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

// <a|b>
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
inline Complex inner(const PureState& a, const PureState& b) {
  return inner(a.amplitudes(), b.amplitudes());
}
double norm_squared(std::span<const Complex> v);

/// Hermitian, unit-trace, positive semidefinite operator of dimension 2, 4 or 8.
class DensityMatrix {
 public:
  // Validates hermiticity and trace within tol::kEpsNorm, eigenvalues
  // >= -tol::kEpsEig.
  static DensityMatrix from_matrix(Matrix m);
  static DensityMatrix from_pure(const PureState& state);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

/// Ordered, strictly increasing, nonempty list of qubit positions.
class QubitSubset {
 public:
  QubitSubset(std::initializer_list<int> indices);
  explicit QubitSubset(std::vector<int> indices);

  std::span<const int> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int q) const;
  // Throws DomainError if any index is outside [0, num_qubits).
  void check_within(int num_qubits) const;
  // All qubits of an n-qubit register not in this subset, ascending.
  QubitSubset complement(int num_qubits) const;

 private:
  std::vector<int> indices_;
};

// Throws CapacityError if the combined register exceeds kMaxQubits.
PureState tensor_product(const PureState& a, const PureState& b);

// Tr_{rest}(|psi><psi|). Throws DomainError when `keep` covers every qubit,
// CapacityError when the kept block would exceed 8x8.
DensityMatrix partial_trace(const PureState& state, const QubitSubset& keep);

// One outcome of a projective measurement on part of a register.
struct Branch {
  double probability = 0.0;
  // Renormalized state of the unmeasured qubits (original relative order);
  // empty when probability < tol::kBranchCutoff.
  std::optional<PureState> post_state;
};

// Applies (<element| on `measured`) (x) I to `state`. `element` has dimension
// 2^|measured| and is indexed by the measured qubits in ascending order.
Branch project_subsystem(const PureState& state, const QubitSubset& measured,
                         std::span<const Complex> element);

}  // namespace iqconc::qcore
