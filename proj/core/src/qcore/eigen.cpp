#include "iqconc/qcore/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/tolerances.hpp"

namespace iqconc::qcore {
namespace {

// Unitary U = D(theta) * R(c, s) that diagonalizes the hermitian 2x2 block
// [[a, b], [conj(b), d]] as U^H M U:
//   U = [[c, s], [-s e^{-i theta}, c e^{-i theta}]],  b = |b| e^{i theta}.
struct Rotation {
  double c = 1.0;
  double s = 0.0;
  Complex phase{1.0, 0.0};  // e^{-i theta}
};

Rotation jacobi_rotation(double a, double d, Complex b) {
  const double mag = std::abs(b);
  Rotation rot;
  if (mag == 0.0) return rot;
  const double tau = (d - a) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  rot.c = 1.0 / std::sqrt(1.0 + t * t);
  rot.s = t * rot.c;
  rot.phase = std::conj(b) / mag;
  return rot;
}

// X <- X U on columns p, q.
void rotate_columns(Matrix& x, std::size_t p, std::size_t q, const Rotation& r) {
  for (std::size_t k = 0; k < x.rows(); ++k) {
    const Complex xp = x(k, p);
    const Complex xq = x(k, q);
    x(k, p) = r.c * xp - r.s * r.phase * xq;
    x(k, q) = r.s * xp + r.c * r.phase * xq;
  }
}

// X <- U^H X on rows p, q.
void rotate_rows(Matrix& x, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex pc = std::conj(r.phase);
  for (std::size_t k = 0; k < x.cols(); ++k) {
    const Complex xp = x(p, k);
    const Complex xq = x(q, k);
    x(p, k) = r.c * xp - r.s * pc * xq;
    x(q, k) = r.s * xp + r.c * pc * xq;
  }
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

void require_hermitian(const Matrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw DomainError("hermitian eigensolver: matrix must be square and nonempty");
  const double residual = m.hermiticity_residual();
  if (residual > tol::kEpsHerm)
    throw DomainError("hermitian eigensolver: input not hermitian (residual " +
                      std::to_string(residual) + ")");
}

HermitianEigensystem jacobi(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix a = m;
  // Symmetrize away sub-tolerance asymmetry so rotations stay unitary-exact.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  Matrix v = Matrix::identity(n);
  const double cutoff = tol::kJacobiOffDiag * std::max(1.0, a.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(a) >= cutoff) {
    if (++sweep > tol::kJacobiMaxSweeps)
      throw NumericalError("cyclic Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == Complex{}) continue;
        const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        rotate_columns(a, p, q, r);
        rotate_rows(a, p, q, r);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(v, p, q, r);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianEigensystem out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  require_hermitian(m);
  if (m.rows() == 1) return {m(0, 0).real()};
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - radius, mean + radius};
  }
  return jacobi(m).values;
}

HermitianEigensystem hermitian_eigensystem(const Matrix& m) {
  require_hermitian(m);
  return jacobi(m);
}

std::vector<double> singular_values(const Matrix& m) {
  Matrix g = m;
  const std::size_t n = g.cols();
  constexpr double kOrthogonality = 1e-15;
  for (int sweep = 0;; ++sweep) {
    if (sweep > tol::kJacobiMaxSweeps)
      throw NumericalError("one-sided Jacobi SVD did not converge");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < g.rows(); ++k) {
          alpha += std::norm(g(k, p));
          beta += std::norm(g(k, q));
          gamma += std::conj(g(k, p)) * g(k, q);
        }
        if (std::abs(gamma) <= kOrthogonality * std::sqrt(alpha * beta)) continue;
        rotated = true;
        rotate_columns(g, p, q, jacobi_rotation(alpha, beta, gamma));
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t k = 0; k < g.rows(); ++k) s += std::norm(g(k, c));
    sv[c] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace iqconc::qcore
