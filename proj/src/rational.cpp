#include "eriordan/rational.hpp"

#include <cctype>

#include "eriordan/error.hpp"

namespace eriordan {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw math_error("scalar division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw math_error("scalar division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto is_uint = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_uint(num) || !is_uint(den)) throw math_error("malformed rational '" + std::string(text) + "'");
  const Rational r{Integer(std::string(num)), Integer(std::string(den))};
  return negative ? -r : r;
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpq_class result(1), base(q_);
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return Rational(result);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace eriordan
