#pragma once

#include <ostream>
#include <string>

#include "eriordan/poly.hpp"
#include "eriordan/rational.hpp"

namespace eriordan {

/// Element of Q(z), the universal coefficient domain.
///
/// Always kept canonical: gcd(num, den) = 1 and den monic, so two Scalars are
/// equal iff their numerators and denominators are equal.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& c) : num_(Rational(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(PolyZ p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(PolyZ num, PolyZ den);

  static Scalar z() { return Scalar(PolyZ::z()); }

  const PolyZ& num() const noexcept { return num_; }
  const PolyZ& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  /// Only meaningful when is_rational().
  Rational as_rational() const { return num_.coeff(0); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  Scalar pow(long e) const;
  Scalar inverse() const;

  /// num(v)/den(v); throws "pole at z = v" when den(v) = 0.
  Rational eval_z(const Rational& v) const;

  /// Canonical text; fractions render as "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();
  PolyZ num_;
  PolyZ den_;
};

enum class ArithOp { add, sub, mul, div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace eriordan
