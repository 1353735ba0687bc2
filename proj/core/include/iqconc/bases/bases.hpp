#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "iqconc/qcore/matrix.hpp"

namespace iqconc::bases {

using qcore::Complex;

/// Ordered measurement vectors on a 2^n-dimensional register.
///
/// Vectors are stored exactly as constructed (no normalization or phase
/// canonicalization) so that a defective basis can still be inspected by
/// verify_basis. The element order is part of the public contract: outcome
/// indices reported by the swap module follow it.
class ProjectiveBasis {
 public:
  // Throws DomainError unless dim is a power of two >= 2 and there are exactly
  // dim vectors of length dim.
  ProjectiveBasis(std::string label, std::size_t dim,
                  std::vector<std::vector<Complex>> vectors);

  const std::string& label() const { return label_; }
  std::size_t dim() const { return dim_; }
  int num_qubits() const;
  std::size_t size() const { return vectors_.size(); }
  const std::vector<Complex>& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<std::vector<Complex>>& vectors() const { return vectors_; }

 private:
  std::string label_;
  std::size_t dim_;
  std::vector<std::vector<Complex>> vectors_;
};

struct QubitBasisParams {
  double alpha = 0.0;
  double beta = 0.0;
};

// {cos a|0> + sin a|1>, sin a|0> - cos a|1>}, alpha in [0, pi/2).
ProjectiveBasis real_qubit_basis(double alpha);

// {cos a|0> + e^{ib} sin a|1>, e^{-ib} sin a|0> - cos a|1>},
// alpha in [0, pi/4], beta in [0, pi).
ProjectiveBasis complex_qubit_basis(double alpha, double beta);

// Same family without the range restrictions of the two constructors above;
// used by the basis optimizer, which searches alpha in [0, pi/2], beta in
// [0, pi].
ProjectiveBasis parametric_qubit_basis(double alpha, double beta);

/// Eight GHZ-type vectors, in this order:
///   (|000>+|111>), (|000>-|111>), (|001>+|110>), (|001>-|110>),
///   (|010>+|101>), (|010>-|101>), (|100>+|011>), (|100>-|011>), each /sqrt2.
ProjectiveBasis ghz_basis();

/// The GHZ-W basis: G1..G5 then W1..W3.
///
///   G_{m+1} = (|000> + a^m|110> + a^{2m}|101> + a^{3m}|011> + a^{4m}|111>)/sqrt5
///   W_{m+1} = (|100> + w^m|010> + w^{2m}|001>)/sqrt3
///
/// with a = exp(2 pi i/5) and w = exp(2 pi i/3), the principal roots.
ProjectiveBasis gw_basis();

struct BasisReport {
  double orthonormality_residual = 0.0;  // max |<v_i|v_j> - delta_ij|
  double completeness_residual = 0.0;    // max |(sum_i |v_i><v_i| - I)_rc|
  double tolerance = 0.0;
  bool passed = false;
};

BasisReport verify_basis(const ProjectiveBasis& basis, double tol);

// verify_basis at tol::kEpsNorm, throwing DomainError on failure.
void require_valid_basis(const ProjectiveBasis& basis);

// Mean of e2_pair(element, 0, 1) over the elements of a three-qubit basis.
double basis_average_scp(const ProjectiveBasis& basis);

// Mean robustness of imaginarity of the element projectors.
double basis_average_roi(const ProjectiveBasis& basis);

/// Parses a basis label:
///   "ghz", "gw", "pauli-x" (alpha=pi/4, beta=0), "hat" (alpha=pi/4, beta=pi/2),
///   "real:<alpha>", "complex:<alpha>,<beta>".
/// Throws DomainError for unknown labels or malformed numbers.
ProjectiveBasis basis_from_label(std::string_view label);

}  // namespace iqconc::bases
