#pragma once

#include <cstddef>
#include <vector>

#include "eriordan/scalar.hpp"

namespace eriordan {

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);

/// Inverse of a square lower-triangular matrix by forward substitution.
/// Throws math_error on a zero diagonal entry.
Matrix lower_triangular_inverse(const Matrix& lower);

/// Applies a rational specialization z = v to every entry.
std::vector<std::vector<Rational>> eval_z(const Matrix& m, const Rational& v);

}  // namespace eriordan
