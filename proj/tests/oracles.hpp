// Independent reference implementations used only by the tests. Nothing here
// calls the algorithms under test except the Scalar/Series value types.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "eriordan/expr.hpp"
#include "eriordan/matrix.hpp"
#include "eriordan/rational.hpp"
#include "eriordan/scalar.hpp"
#include "eriordan/series.hpp"

namespace oracle {

using eriordan::Integer;
using eriordan::Matrix;
using eriordan::PolyZ;
using eriordan::Rational;
using eriordan::Scalar;
using eriordan::Series;

inline Scalar P(std::string_view text) { return eriordan::expr::scalar_from_text(text); }
inline Series S(std::string_view text, std::size_t order) { return eriordan::expr::series_from_text(text, order); }
inline Scalar zs() { return Scalar::z(); }

inline Integer fact(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// S(n,k) by the triangular recurrence.
inline std::vector<std::vector<Integer>> stirling2_table(std::size_t nmax) {
  std::vector<std::vector<Integer>> s(nmax + 1, std::vector<Integer>(nmax + 1, 0));
  s[0][0] = 1;
  for (std::size_t n = 1; n <= nmax; ++n)
    for (std::size_t k = 1; k <= n; ++k) s[n][k] = Integer(k) * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

/// A(n,k), k = 1..n counting permutations with k ascending runs; A(0,0) = 1.
inline std::vector<std::vector<Integer>> eulerian_table(std::size_t nmax) {
  std::vector<std::vector<Integer>> a(nmax + 1, std::vector<Integer>(nmax + 2, 0));
  a[0][0] = 1;
  for (std::size_t n = 1; n <= nmax; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      a[n][k] = Integer(k) * a[n - 1][k] + Integer(n - k + 1) * a[n - 1][k - 1];
  return a;
}

inline Scalar poly_from_row(const std::vector<Integer>& row) {
  std::vector<Rational> c;
  for (const auto& v : row) c.emplace_back(v);
  return Scalar(PolyZ(c));
}

/// e_n(z) via e_{n+1} = z * sum_k C(n,k) e_k.
inline std::vector<Scalar> touchard(std::size_t nmax) {
  std::vector<Scalar> e{Scalar(1)};
  for (std::size_t n = 0; n < nmax; ++n) {
    Scalar s;
    for (std::size_t k = 0; k <= n; ++k) s += Scalar(choose(n, k)) * e[k];
    e.push_back(zs() * s);
  }
  return e;
}

inline std::vector<Scalar> eulerian_polys(std::size_t nmax) {
  const auto a = eulerian_table(nmax);
  std::vector<Scalar> out;
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(poly_from_row(a[n]));
  return out;
}

/// Determinant by permutation expansion (Leibniz formula).
inline Scalar det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = inversions % 2 ? Scalar(-1) : Scalar(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<Scalar> hankel_brute(const std::vector<Scalar>& a, std::size_t nmax) {
  std::vector<Scalar> h;
  for (std::size_t n = 0; n <= nmax; ++n) {
    Matrix m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = a.at(i + j);
    h.push_back(det_leibniz(m));
  }
  return h;
}

/// Naive truncated product of coefficient vectors.
inline std::vector<Scalar> conv(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// n!/k! [x^n] g f^k by repeated naive convolution.
inline Matrix er_entries(const std::vector<Scalar>& g, const std::vector<Scalar>& f) {
  const std::size_t n1 = g.size();
  Matrix m(n1, n1);
  std::vector<Scalar> col = g;
  for (std::size_t k = 0; k < n1; ++k) {
    for (std::size_t n = k; n < n1; ++n) m(n, k) = col[n] * Scalar(Rational(fact(n), fact(k)));
    col = conv(col, f);
  }
  return m;
}

/// Coefficients of sum_n a_n x^n / n!.
inline std::vector<Scalar> egf(const std::vector<Scalar>& a) {
  std::vector<Scalar> out;
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back(a[n] * Scalar(Rational(1, fact(n))));
  return out;
}

/// Dense product restricted to lower-triangular square matrices.
inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Random series with integer coefficients; f-like when `valuation_one`.
inline Series random_series(std::mt19937& rng, std::size_t order, bool valuation_one, bool with_z = false) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Scalar> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = Scalar(d(rng));
    if (with_z && k % 2 == 1) c[k] += Scalar(d(rng)) * zs();
  }
  if (valuation_one) {
    c[0] = 0;
    c[1] = std::uniform_int_distribution<long>(0, 1)(rng) ? Scalar(1) : Scalar(-2);
  } else {
    c[0] = std::uniform_int_distribution<long>(0, 1)(rng) ? Scalar(1) : Scalar(3);
  }
  return Series(c);
}

}  // namespace oracle
