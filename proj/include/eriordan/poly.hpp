#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eriordan/rational.hpp"

namespace eriordan {

/// Dense univariate polynomial in z over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zero, so the
/// zero polynomial is the empty vector and equality is structural.
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyZ(long c) : PolyZ(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  PolyZ(std::initializer_list<Rational> ascending);
  explicit PolyZ(std::vector<Rational> ascending);

  /// The monomial c*z^k.
  static PolyZ monomial(const Rational& c, std::size_t k);
  static PolyZ z() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  const Rational& lead() const { return c_.back(); }

  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }
  PolyZ& operator*=(const Rational& s);

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(PolyZ a, const Rational& s) { return a *= s; }
  PolyZ operator-() const;

  friend bool operator==(const PolyZ&, const PolyZ&) = default;

  /// Quotient and remainder of Euclidean division; throws on a zero divisor.
  std::pair<PolyZ, PolyZ> divmod(const PolyZ& divisor) const;
  /// Exact quotient; throws math_error if the remainder is nonzero.
  PolyZ exact_div(const PolyZ& divisor) const;

  PolyZ monic() const;
  PolyZ pow(unsigned e) const;
  Rational eval(const Rational& v) const;

  /// Canonical text: descending degree, e.g. "z^3 + 3*z^2 + z", "1/2*z - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q; gcd(0, 0) = 0.
PolyZ gcd(PolyZ a, PolyZ b);

inline std::ostream& operator<<(std::ostream& os, const PolyZ& p) { return os << p.to_string(); }

}  // namespace eriordan
