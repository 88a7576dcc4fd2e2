#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "galois/number.hpp"

namespace galois {

using Vector = std::vector<Number>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Number>> rows);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Number& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Number& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vector operator*(const Vector& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  std::size_t rank() const;
  /// Reduced row echelon form; pivot column indices are appended to `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Throws ComputationError when singular or not square.
  Matrix inverse() const;
  /// Determinant of a 2x2 matrix.
  Number det2() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Number> data_;
};

/// Exact basis of the right null space; empty iff full column rank.
std::vector<Vector> kernel_basis(const Matrix& m);

/// A solution x of m x = b, or nothing when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace galois
