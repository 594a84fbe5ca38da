#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glevi/rational.hpp"

namespace glevi {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  /// Rows given as vectors of length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  Matrix& operator+=(const Matrix& other);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);

/// Stacks blocks vertically; all blocks must share a column count.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

std::string to_string(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. The result has the same shape as the input,
/// with zero rows at the bottom.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);

/// Inverse of a square matrix; throws ErrorKind::DimensionMismatch when singular.
Matrix inverse(const Matrix& m);

/// Some x with a*x = b, or nothing when the system is inconsistent. The
/// returned solution sets every free variable to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace glevi
