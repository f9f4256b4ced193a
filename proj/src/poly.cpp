#include "eriordan/poly.hpp"

#include <algorithm>

#include "eriordan/error.hpp"

namespace eriordan {

PolyZ::PolyZ(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyZ::PolyZ(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

PolyZ::PolyZ(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

PolyZ PolyZ::monomial(const Rational& c, std::size_t k) {
  PolyZ p;
  if (c.is_zero()) return p;
  p.c_.assign(k + 1, Rational());
  p.c_[k] = c;
  return p;
}

void PolyZ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(q);
  return PolyZ(std::move(out));
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<PolyZ, PolyZ> PolyZ::divmod(const PolyZ& divisor) const {
  if (divisor.is_zero()) throw math_error("scalar division by zero");
  if (degree() < divisor.degree()) return {PolyZ(), *this};
  const std::size_t dd = divisor.c_.size() - 1;
  const Rational inv_lead = Rational(1) / divisor.lead();
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - dd);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + dd] * inv_lead;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.c_[i];
  }
  rem.resize(dd);
  return {PolyZ(std::move(quo)), PolyZ(std::move(rem))};
}

PolyZ PolyZ::exact_div(const PolyZ& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw math_error("inexact polynomial division");
  return q;
}

PolyZ PolyZ::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * (Rational(1) / lead());
}

PolyZ PolyZ::pow(unsigned e) const {
  PolyZ result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Rational PolyZ::eval(const Rational& v) const {
  Rational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * v + c_[k];
  return acc;
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyZ gcd(PolyZ a, PolyZ b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return PolyZ(1);
    PolyZ r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace eriordan
