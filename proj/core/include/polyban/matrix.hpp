#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyban/rational.hpp"

namespace polyban {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<RatVec>& rows, std::size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<RatVec>& cols, std::size_t rows_if_empty = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  std::vector<RatVec> row_list() const;

  Matrix transpose() const;
  RatVec apply(const RatVec& x) const;
  /// x^T M for a row covector x.
  RatVec apply_left(const RatVec& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  bool is_zero() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product: (a ⊗ b)(i*b.rows + k, j*b.cols + l) = a(i,j) b(k,l).
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Vertical concatenation [a ; b].
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<RatVec>& vectors, std::size_t dim);

/// Basis (as columns) of { x : m x = 0 }.
std::vector<RatVec> null_space(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const Matrix& m, const RatVec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset of `vectors`, chosen
/// greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<RatVec>& vectors, std::size_t dim);

}  // namespace polyban
