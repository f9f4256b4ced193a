#include "eriordan/series.hpp"

#include <algorithm>

#include "eriordan/error.hpp"

namespace eriordan {

namespace {

void require_same_order(const Series& a, const Series& b, const char* what) {
  if (a.order() != b.order())
    throw math_error(std::string(what) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
}

}  // namespace

Series::Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw math_error("series needs at least one coefficient");
}

Series Series::constant(const Scalar& c, std::size_t order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::x(std::size_t order) {
  Series s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

std::size_t Series::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return c_.size();
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw math_error("cannot truncate to a higher order");
  return Series(std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series Series::padded(std::size_t order) const {
  Series s = *this;
  if (order + 1 > s.c_.size()) s.c_.resize(order + 1);
  return s;
}

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o, "series add");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o, "series sub");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series& Series::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Series::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool compound = c.is_polynomial() && cs.find_first_of("+-", 1) != std::string::npos;
    if (k == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += (compound ? "(" + cs + ")" : cs) + "*";
    out += k == 1 ? std::string("x") : "x^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order() + 1) + ")";
}

Series series_mul(const Series& a, const Series& b) {
  require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_div(const Series& a, const Series& b) {
  require_same_order(a, b, "series_div");
  const std::size_t v = b.valuation();
  if (v > b.order()) throw math_error("series division by zero");
  if (a.valuation() < v) throw math_error("series division needs unit or common factor");
  const std::size_t n = a.order() - v;
  std::vector<Scalar> num(a.coeffs().begin() + static_cast<std::ptrdiff_t>(v), a.coeffs().end());
  std::vector<Scalar> den(b.coeffs().begin() + static_cast<std::ptrdiff_t>(v), b.coeffs().end());
  const Scalar inv = den[0].inverse();
  Series q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar acc = num[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (!den[j].is_zero() && !q[k - j].is_zero()) acc -= den[j] * q[k - j];
    q[k] = acc * inv;
  }
  return q;
}

Series series_compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner, "series_compose");
  if (!inner[0].is_zero()) throw math_error("composition needs valuation >= 1");
  const std::size_t n = outer.order();
  // Horner: outer_0 + inner*(outer_1 + inner*(...)).
  Series acc = Series::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

Series series_revert(const Series& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) throw math_error("not revertible");
  const std::size_t n = f.order();
  Series y(n);
  y[1] = f[1].inverse();
  // y is exact through x^prec; each Newton step doubles that.
  std::size_t prec = 1;
  while (prec < n) {
    const std::size_t w = std::min(2 * prec, n);
    const Series ft = f.truncated(w);
    const Series yt = y.truncated(w);
    const Series residual = series_compose(ft, yt) - Series::x(w);
    const Series slope = series_compose(series_derivative(ft, w), yt);
    y = (yt - series_div(residual, slope)).padded(n);
    prec = w;
  }
  return y;
}

Series series_exp(const Series& a) {
  if (!a[0].is_zero()) throw math_error("series_exp needs zero constant term");
  const std::size_t n = a.order();
  Series b(n);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Scalar acc;
    for (std::size_t k = 1; k <= m; ++k)
      if (!a[k].is_zero() && !b[m - k].is_zero()) acc += Scalar(static_cast<long>(k)) * a[k] * b[m - k];
    b[m] = acc * Scalar(Rational(1, static_cast<long>(m)));
  }
  return b;
}

Series series_log(const Series& a) {
  if (!a[0].is_one()) throw math_error("series_log needs constant term 1");
  const std::size_t n = a.order();
  Series b(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Scalar acc;
    for (std::size_t k = 1; k < m; ++k)
      if (!b[k].is_zero() && !a[m - k].is_zero()) acc += Scalar(static_cast<long>(k)) * b[k] * a[m - k];
    b[m] = a[m] - acc * Scalar(Rational(1, static_cast<long>(m)));
  }
  return b;
}

Series series_derivative(const Series& a) {
  const std::size_t n = a.order();
  if (n == 0) return Series(0);
  Series d(n - 1);
  for (std::size_t k = 1; k <= n; ++k) d[k - 1] = a[k] * Scalar(static_cast<long>(k));
  return d;
}

Series series_derivative(const Series& a, std::size_t pad_to) { return series_derivative(a).padded(pad_to); }

Series series_pow(const Series& a, long e) {
  const std::size_t n = a.order();
  if (e < 0) return series_pow(series_div(Series::one(n), a), -e);
  Series result = Series::one(n), base = a;
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1u) result = series_mul(result, base);
    k >>= 1u;
    if (k) base = series_mul(base, base);
  }
  return result;
}

}  // namespace eriordan
