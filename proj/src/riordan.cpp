#include "eriordan/riordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "eriordan/error.hpp"

namespace eriordan {

namespace {

// n!/k! as a Scalar.
Scalar factorial_ratio(std::size_t n, std::size_t k) {
  return Scalar(Rational(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(k))));
}

Scalar inv_factorial(std::size_t n) { return Scalar(Rational(1, factorial(static_cast<unsigned>(n)))); }

}  // namespace

ERArray::ERArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
  if (g_.order() != f_.order() || g_.order() < 1 || g_[0].is_zero() || !f_[0].is_zero() || f_[1].is_zero())
    throw math_error("not a valid exponential Riordan pair");
  const std::size_t n = order();
  entries_ = Matrix(n + 1, n + 1);
  Series column = g_;  // g f^k
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t row = k; row <= n; ++row)
      if (!column[row].is_zero()) entries_(row, k) = factorial_ratio(row, k) * column[row];
    if (k < n) column = series_mul(column, f_);
  }
}

ERArray er_mul(const ERArray& a, const ERArray& b) {
  if (a.order() != b.order()) throw math_error("er_mul: order mismatch");
  return ERArray(series_mul(a.g(), series_compose(b.g(), a.f())), series_compose(b.f(), a.f()));
}

ERArray er_inverse(const ERArray& a) {
  const Series fbar = series_revert(a.f());
  const Series g_fbar = series_compose(a.g(), fbar);
  return ERArray(series_div(Series::one(a.order()), g_fbar), fbar);
}

ERArray er_identity(std::size_t order) { return ERArray(Series::one(order), Series::x(order)); }

std::vector<Scalar> er_apply(const ERArray& a, const std::vector<Scalar>& u) {
  const std::size_t n = a.order();
  if (u.size() != n + 1) throw math_error("er_apply: sequence length must be order + 1");
  std::vector<Scalar> by_matrix = a.entries() * u;

  Series egf(n);
  for (std::size_t k = 0; k <= n; ++k) egf[k] = u[k] * inv_factorial(k);
  const Series image = series_mul(a.g(), series_compose(egf, a.f()));
  for (std::size_t k = 0; k <= n; ++k)
    if (image[k] * Scalar(factorial(static_cast<unsigned>(k))) != by_matrix[k])
      throw std::logic_error("er_apply: matrix and e.g.f. routes disagree at index " + std::to_string(k));
  return by_matrix;
}

bool ProductionMatrix::agrees_with(const ProductionMatrix& other) const {
  if (order != other.order) return false;
  for (std::size_t i = 0; i < valid_rows(); ++i)
    for (std::size_t j = 0; j <= order; ++j)
      if (entries(i, j) != other.entries(i, j)) return false;
  return true;
}

ProductionSeries production_series(const ERArray& a) {
  const std::size_t n = a.order();
  const std::size_t w = n - 1;
  const Series fbar = series_revert(a.f()).truncated(w);
  const Series df = series_derivative(a.f());
  const Series dlog_g = series_div(series_derivative(a.g()), a.g().truncated(w));
  return {series_compose(dlog_g, fbar), series_compose(df, fbar)};
}

ProductionMatrix production_from_pair(const ERArray& a) {
  const std::size_t n = a.order();
  const auto [c, r] = production_series(a);
  ProductionMatrix p{Matrix(n + 1, n + 1), n};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i + 1; ++j) {
      Scalar v;
      if (j <= i) v += c[i - j];
      if (j >= 1) v += Scalar(static_cast<long>(j)) * r[i - j + 1];
      if (!v.is_zero()) p.entries(i, j) = factorial_ratio(i, j) * v;
    }
  return p;
}

ProductionMatrix production_direct(const ERArray& a) {
  const std::size_t n = a.order();
  const Matrix& m = a.entries();
  ProductionMatrix p{Matrix(n + 1, n + 1), n};
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i).is_zero()) throw math_error("singular diagonal at row " + std::to_string(i));
    const Scalar inv = m(i, i).inverse();
    for (std::size_t j = 0; j <= n; ++j) {
      // Row i of A P equals row i+1 of A.
      Scalar acc = m(i + 1, j);
      for (std::size_t k = 0; k < i; ++k)
        if (!m(i, k).is_zero() && !p.entries(k, j).is_zero()) acc -= m(i, k) * p.entries(k, j);
      if (!acc.is_zero()) p.entries(i, j) = acc * inv;
    }
  }
  return p;
}

ProductionMatrix BivariateSeries::to_production_matrix(std::size_t order) const {
  ProductionMatrix p{Matrix(order + 1, order + 1), order};
  for (std::size_t n = 0; n < coeff.size() && n <= order; ++n)
    for (std::size_t k = 0; k < coeff[n].size() && k <= order; ++k)
      if (!coeff[n][k].is_zero()) p.entries(n, k) = Scalar(factorial(static_cast<unsigned>(n))) * coeff[n][k];
  return p;
}

BivariateSeries production_bivariate_gf(const ERArray& a) {
  const std::size_t n = a.order();
  const auto [c, r] = production_series(a);
  const std::size_t wdeg = n - 1;
  // Dense arrays indexed [t-degree][w-degree].
  std::vector<std::vector<Scalar>> expo(n + 1, std::vector<Scalar>(wdeg + 1));
  for (std::size_t m = 0; m <= std::min(n, wdeg); ++m) expo[m][m] = inv_factorial(m);
  std::vector<std::vector<Scalar>> linear(2, std::vector<Scalar>(wdeg + 1));
  for (std::size_t j = 0; j <= wdeg; ++j) {
    linear[0][j] = c[j];
    linear[1][j] = r[j];
  }
  BivariateSeries out;
  out.coeff.assign(wdeg + 1, std::vector<Scalar>(n + 1));
  for (std::size_t ta = 0; ta <= n; ++ta)
    for (std::size_t wa = 0; wa <= wdeg; ++wa) {
      if (expo[ta][wa].is_zero()) continue;
      for (std::size_t tb = 0; tb < 2 && ta + tb <= n; ++tb)
        for (std::size_t wb = 0; wa + wb <= wdeg; ++wb)
          if (!linear[tb][wb].is_zero()) out.coeff[wa + wb][ta + tb] += expo[ta][wa] * linear[tb][wb];
    }
  return out;
}

JacobiParams extract_jacobi(const ProductionMatrix& p) {
  const std::size_t n = p.order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (!p.entries(i, j).is_zero())
        throw math_error("production matrix not tridiagonal: offending entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    if (!p.entries(i, i + 1).is_one()) throw math_error("not monic form");
  }
  JacobiParams j;
  for (std::size_t i = 0; i < n; ++i) j.alpha.push_back(p.entries(i, i));
  for (std::size_t i = 1; i < n; ++i) j.beta.push_back(p.entries(i, i - 1));
  return j;
}

}  // namespace eriordan
