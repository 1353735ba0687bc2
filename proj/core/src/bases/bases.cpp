#include "iqconc/bases/bases.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/qcore/state.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::bases {
namespace {

constexpr double kPi = std::numbers::pi;

// Exact-index root of unity: exp(2 pi i k / n) with k reduced mod n.
Complex root_of_unity(int n, int k) {
  const int r = ((k % n) + n) % n;
  return std::polar(1.0, 2.0 * kPi * r / n);
}

std::vector<Complex> ket(std::size_t dim,
                         std::initializer_list<std::pair<std::size_t, Complex>> terms,
                         double scale) {
  std::vector<Complex> v(dim);
  for (const auto& [index, amp] : terms) v[index] = amp * scale;
  return v;
}

double parse_number(std::string_view text, std::string_view label) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw DomainError("basis label '" + std::string(label) + "': bad number '" +
                      std::string(text) + "'");
  return value;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(std::string label, std::size_t dim,
                                 std::vector<std::vector<Complex>> vectors)
    : label_(std::move(label)), dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 2 || !std::has_single_bit(dim_))
    throw DomainError("basis dimension must be a power of two >= 2");
  if (vectors_.size() != dim_)
    throw DomainError("basis '" + label_ + "' must have exactly dim vectors");
  for (const auto& v : vectors_)
    if (v.size() != dim_) throw DomainError("basis '" + label_ + "': vector length mismatch");
}

int ProjectiveBasis::num_qubits() const { return std::countr_zero(dim_); }

ProjectiveBasis parametric_qubit_basis(double alpha, double beta) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const Complex e = std::polar(1.0, beta);
  return ProjectiveBasis("qubit", 2,
                         {{c, e * s}, {std::conj(e) * s, -c}});
}

ProjectiveBasis real_qubit_basis(double alpha) {
  if (!(alpha >= 0.0 && alpha < kPi / 2))
    throw DomainError("real_qubit_basis: alpha outside [0, pi/2)");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return ProjectiveBasis("real", 2, {{c, s}, {s, -c}});
}

ProjectiveBasis complex_qubit_basis(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= kPi / 4))
    throw DomainError("complex_qubit_basis: alpha outside [0, pi/4]");
  if (!(beta >= 0.0 && beta < kPi))
    throw DomainError("complex_qubit_basis: beta outside [0, pi)");
  auto b = parametric_qubit_basis(alpha, beta);
  return ProjectiveBasis("complex", 2, b.vectors());
}

ProjectiveBasis ghz_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<Complex>> v;
  for (std::size_t low : {0u, 1u, 2u, 4u}) {
    const std::size_t high = 7u - low;
    v.push_back(ket(8, {{low, 1.0}, {high, 1.0}}, h));
    v.push_back(ket(8, {{low, 1.0}, {high, -1.0}}, h));
  }
  return ProjectiveBasis("ghz", 8, std::move(v));
}

ProjectiveBasis gw_basis() {
  const double g = 1.0 / std::sqrt(5.0);
  const double w = 1.0 / std::sqrt(3.0);
  std::vector<std::vector<Complex>> v;
  for (int m = 0; m < 5; ++m)
    v.push_back(ket(8,
                    {{0b000, 1.0},
                     {0b110, root_of_unity(5, m)},
                     {0b101, root_of_unity(5, 2 * m)},
                     {0b011, root_of_unity(5, 3 * m)},
                     {0b111, root_of_unity(5, 4 * m)}},
                    g));
  for (int m = 0; m < 3; ++m)
    v.push_back(ket(8,
                    {{0b100, 1.0},
                     {0b010, root_of_unity(3, m)},
                     {0b001, root_of_unity(3, 2 * m)}},
                    w));
  return ProjectiveBasis("gw", 8, std::move(v));
}

BasisReport verify_basis(const ProjectiveBasis& basis, double tol) {
  if (!(tol > 0.0)) throw DomainError("verify_basis: tolerance must be positive");
  const std::size_t d = basis.dim();
  BasisReport report;
  report.tolerance = tol;
  qcore::Matrix sum(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex overlap = qcore::inner(basis[i], basis[j]);
      const double expected = (i == j) ? 1.0 : 0.0;
      report.orthonormality_residual =
          std::max(report.orthonormality_residual, std::abs(overlap - expected));
    }
    sum += qcore::Matrix::outer(basis[i]);
  }
  report.completeness_residual = qcore::max_abs_diff(sum, qcore::Matrix::identity(d));
  report.passed = report.orthonormality_residual < tol && report.completeness_residual < tol;
  return report;
}

void require_valid_basis(const ProjectiveBasis& basis) {
  const auto report = verify_basis(basis, tol::kEpsNorm);
  if (!report.passed)
    throw DomainError("basis '" + basis.label() + "' is not orthonormal and complete");
}

double basis_average_scp(const ProjectiveBasis& basis) {
  if (basis.num_qubits() != 3) throw DomainError("basis_average_scp: needs a 3-qubit basis");
  double total = 0.0;
  for (const auto& v : basis.vectors())
    total += qcore::e2_pair(qcore::PureState::from_amplitudes(v), 0, 1);
  return total / static_cast<double>(basis.size());
}

double basis_average_roi(const ProjectiveBasis& basis) {
  if (basis.dim() > 8) throw CapacityError("basis_average_roi: at most 3 qubits");
  double total = 0.0;
  for (const auto& v : basis.vectors())
    total += qcore::roi(qcore::DensityMatrix::from_pure(qcore::PureState::from_amplitudes(v)));
  return total / static_cast<double>(basis.size());
}

ProjectiveBasis basis_from_label(std::string_view label) {
  if (label == "ghz") return ghz_basis();
  if (label == "gw") return gw_basis();
  if (label == "pauli-x") {
    auto b = complex_qubit_basis(kPi / 4, 0.0);
    return ProjectiveBasis("pauli-x", 2, b.vectors());
  }
  if (label == "hat") {
    auto b = complex_qubit_basis(kPi / 4, kPi / 2);
    return ProjectiveBasis("hat", 2, b.vectors());
  }
  if (label.starts_with("real:")) {
    const double alpha = parse_number(label.substr(5), label);
    auto b = real_qubit_basis(alpha);
    return ProjectiveBasis(std::string(label), 2, b.vectors());
  }
  if (label.starts_with("complex:")) {
    const auto args = label.substr(8);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw DomainError("basis label '" + std::string(label) + "': expected complex:<alpha>,<beta>");
    const double alpha = parse_number(args.substr(0, comma), label);
    const double beta = parse_number(args.substr(comma + 1), label);
    auto b = complex_qubit_basis(alpha, beta);
    return ProjectiveBasis(std::string(label), 2, b.vectors());
  }
  throw DomainError("unknown basis label '" + std::string(label) + "'");
}

}  // namespace iqconc::bases
