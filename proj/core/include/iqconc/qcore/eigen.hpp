#pragma once

#include <vector>

#include "iqconc/qcore/matrix.hpp"

namespace iqconc::qcore {

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Ascending eigenvalues of a hermitian matrix.
///
/// 2x2 inputs use the closed quadratic form; larger inputs use cyclic complex
/// Jacobi sweeps until the off-diagonal Frobenius norm falls below
/// tol::kJacobiOffDiag * max(1, ||A||_F).
///
/// Throws DomainError if `m` is not square or not hermitian within
/// tol::kEpsHerm, NumericalError if Jacobi does not converge within
/// tol::kJacobiMaxSweeps sweeps.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

// Eigenvalues and eigenvectors via cyclic Jacobi for every dimension.
HermitianEigensystem hermitian_eigensystem(const Matrix& m);

// Singular values (descending) by one-sided Jacobi orthogonalization of the
// columns. Absolute accuracy is O(eps * ||m||), so small singular values are
// not squared away the way they are through m^H m.
std::vector<double> singular_values(const Matrix& m);

}  // namespace iqconc::qcore
