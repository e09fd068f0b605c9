#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "isocrystal/rational.hpp"

namespace isocrystal {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  // Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  // Throws kShapeMismatch unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);
  static Matrix diagonal(std::span<const Rational> diag);
  // Throws kShapeMismatch on ragged rows.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Rational> entries() const { return entries_; }

  Matrix transpose() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Exact inverse by Gauss-Jordan elimination. Throws kSingularMatrix.
Matrix mat_inverse(const Matrix& m);
Rational determinant(const Matrix& m);
// m^k for k >= 0 by repeated squaring.
Matrix mat_power(const Matrix& m, unsigned k);

}  // namespace isocrystal
