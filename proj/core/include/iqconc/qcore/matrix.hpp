#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace iqconc::qcore {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sized for the 2x2 .. 8x8 operators this
// library works with; no expression templates, no aliasing tricks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  // |v><v|
  static Matrix outer(std::span<const Complex> v);
  static Matrix from_rows(std::size_t rows, std::size_t cols,
                          std::vector<Complex> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  // Largest |A_ij - conj(A_ji)|.
  double hermiticity_residual() const;
  bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Kronecker product, first factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace iqconc::qcore
