#include "eriordan/hankel.hpp"

#include <utility>

#include "eriordan/error.hpp"

namespace eriordan {

namespace {

void require_terms(const MomentSequence& seq, std::size_t n) {
  const std::size_t need = 2 * n + 1;
  if (seq.terms.size() < need)
    throw math_error("need " + std::to_string(need) + " terms, have " + std::to_string(seq.terms.size()));
}

PolyZ lcm(const PolyZ& a, const PolyZ& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return (a * b).exact_div(gcd(a, b)).monic();
}

Scalar bareiss_poly(std::vector<std::vector<PolyZ>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  PolyZ prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = PolyZ();
    }
    prev = m[k][k];
  }
  PolyZ det = m[n - 1][n - 1];
  return Scalar(sign < 0 ? -det : det);
}

}  // namespace

Matrix hankel_matrix(const MomentSequence& seq, std::size_t n) {
  require_terms(seq, n);
  Matrix h(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) h(i, j) = seq.terms[i + j];
  return h;
}

Scalar det_bareiss(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw math_error("determinant of a non-square matrix");
  std::vector<std::vector<PolyZ>> poly(n, std::vector<PolyZ>(n));
  Scalar cleared = 1;
  for (std::size_t j = 0; j < n; ++j) {
    PolyZ scale(1);
    for (std::size_t i = 0; i < n; ++i) scale = lcm(scale, m(i, j).den());
    for (std::size_t i = 0; i < n; ++i) poly[i][j] = m(i, j).num() * scale.exact_div(m(i, j).den());
    cleared *= Scalar(scale);
  }
  return bareiss_poly(std::move(poly)) / cleared;
}

Scalar det_gaussian(const Matrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw math_error("determinant of a non-square matrix");
  Matrix m = input;
  Scalar det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    const Scalar inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Scalar factor = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m(k, j).is_zero()) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

Scalar hankel_det(const MomentSequence& seq, std::size_t n) { return det_bareiss(hankel_matrix(seq, n)); }

std::vector<Scalar> hankel_transform(const MomentSequence& seq, std::size_t nmax) {
  require_terms(seq, nmax);
  std::vector<Scalar> h;
  h.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) h.push_back(hankel_det(seq, n));
  return h;
}

std::vector<Scalar> hankel_from_betas(const JacobiParams& j, std::size_t nmax) {
  if (nmax > j.beta.size())
    throw math_error("need beta_1..beta_" + std::to_string(nmax) + ", have " + std::to_string(j.beta.size()));
  std::vector<Scalar> h;
  for (std::size_t n = 0; n <= nmax; ++n) {
    Scalar v = j.a0.pow(static_cast<long>(n + 1));
    for (std::size_t k = 1; k <= n; ++k) v *= j.beta_at(k).pow(static_cast<long>(n - k + 1));
    h.push_back(v);
  }
  return h;
}

MomentSequence binomial_transform(const MomentSequence& seq) {
  MomentSequence out;
  const auto& a = seq.terms;
  for (std::size_t n = 0; n < a.size(); ++n) {
    Scalar acc;
    for (std::size_t k = 0; k <= n; ++k)
      if (!a[k].is_zero()) acc += Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * a[k];
    out.terms.push_back(acc);
  }
  return out;
}

}  // namespace eriordan
