#include "eriordan/matrix.hpp"

#include "eriordan/error.hpp"

namespace eriordan {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw math_error("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != v.size()) throw math_error("matrix-vector length mismatch");
  std::vector<Scalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Matrix lower_triangular_inverse(const Matrix& lower) {
  const std::size_t n = lower.rows();
  if (lower.cols() != n) throw math_error("matrix is not square");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (lower(j, j).is_zero()) throw math_error("singular diagonal at row " + std::to_string(j));
    inv(j, j) = lower(j, j).inverse();
    for (std::size_t i = j + 1; i < n; ++i) {
      Scalar acc;
      for (std::size_t k = j; k < i; ++k)
        if (!lower(i, k).is_zero() && !inv(k, j).is_zero()) acc += lower(i, k) * inv(k, j);
      if (lower(i, i).is_zero()) throw math_error("singular diagonal at row " + std::to_string(i));
      inv(i, j) = -acc / lower(i, i);
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> eval_z(const Matrix& m, const Rational& v) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).eval_z(v);
  return out;
}

}  // namespace eriordan
