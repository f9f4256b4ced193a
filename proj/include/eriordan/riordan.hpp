#pragma once

#include <cstddef>
#include <vector>

#include "eriordan/matrix.hpp"
#include "eriordan/orthopoly.hpp"
#include "eriordan/series.hpp"

namespace eriordan {

/// Exponential Riordan array [g, f] truncated to rows/columns 0..N.
///
/// Column k has e.g.f. g(x) f(x)^k / k!, i.e. entry (n, k) is
/// (n!/k!) [x^n] g f^k. The defining pair is kept so products and inverses
/// are computed on series rather than on matrices.
class ERArray {
 public:
  /// Throws math_error("not a valid exponential Riordan pair") unless
  /// f(0) = 0, f'(0) != 0, g(0) != 0 and the orders agree.
  ERArray(Series g, Series f);

  const Matrix& entries() const noexcept { return entries_; }
  const Scalar& operator()(std::size_t n, std::size_t k) const { return entries_(n, k); }
  const Series& g() const noexcept { return g_; }
  const Series& f() const noexcept { return f_; }
  std::size_t order() const noexcept { return g_.order(); }

  friend bool operator==(const ERArray& a, const ERArray& b) { return a.entries_ == b.entries_; }

 private:
  Series g_;
  Series f_;
  Matrix entries_;
};

inline ERArray er_build(const Series& g, const Series& f) { return ERArray(g, f); }

/// Group law [g, f] * [h, l] = [g (h o f), l o f].
ERArray er_mul(const ERArray& a, const ERArray& b);

/// [g, f]^{-1} = [1/(g o fbar), fbar].
ERArray er_inverse(const ERArray& a);

ERArray er_identity(std::size_t order);

/// A u, cross-checked against the e.g.f. route n! [x^n] g(x) U(f(x)).
std::vector<Scalar> er_apply(const ERArray& a, const std::vector<Scalar>& u);

/// Lower-Hessenberg P with D A = A P. Rows 0..N-1 are exact; row N would need
/// terms past the truncation order and is left zero.
struct ProductionMatrix {
  Matrix entries;
  std::size_t order = 0;

  std::size_t valid_rows() const noexcept { return order; }
  /// True when rows 0..N-1 of both matrices agree.
  bool agrees_with(const ProductionMatrix& other) const;
};

/// The series r, c with r(f(x)) = f'(x) and c(f(x)) = g'(x)/g(x), to order N-1.
struct ProductionSeries {
  Series c;
  Series r;
};

ProductionSeries production_series(const ERArray& a);

/// p(i, j) = (i!/j!) (c_{i-j} + j r_{i-j+1}), with c_{-1} = 0.
ProductionMatrix production_from_pair(const ERArray& a);

/// P = A^{-1} (D A) by forward substitution on the lower-triangular system.
ProductionMatrix production_direct(const ERArray& a);

/// Coefficients of e^{tw} (c(w) + t r(w)): coeff[n][k] = [t^k w^n], for
/// n <= N-1 and k <= N.
struct BivariateSeries {
  std::vector<std::vector<Scalar>> coeff;

  /// p(n, k) = n! [t^k w^n].
  ProductionMatrix to_production_matrix(std::size_t order) const;
};

BivariateSeries production_bivariate_gf(const ERArray& a);

/// Reads alpha_n = P(n, n) and beta_n = P(n, n-1) off a tridiagonal P.
/// Throws math_error naming the first offending entry otherwise.
JacobiParams extract_jacobi(const ProductionMatrix& p);

}  // namespace eriordan
