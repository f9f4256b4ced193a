#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "eriordan/scalar.hpp"

namespace eriordan {

/// Truncated power series in x with Scalar coefficients.
///
/// Holds exactly order()+1 coefficients; terms beyond the order are unknown,
/// not zero. Binary operations require equal orders.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(std::size_t order = 0) : c_(order + 1) {}
  /// Takes coefficients of x^0..x^N; an empty vector is rejected.
  explicit Series(std::vector<Scalar> coeffs);

  static Series constant(const Scalar& c, std::size_t order);
  static Series one(std::size_t order) { return constant(1, order); }
  static Series x(std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Scalar& operator[](std::size_t k) const { return c_[k]; }
  Scalar& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }

  /// Index of the first nonzero coefficient; order()+1 if all are zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  /// Drops coefficients above `order` (which must not exceed the current order).
  Series truncated(std::size_t order) const;
  /// Extends with zero coefficients up to `order`. The caller vouches that
  /// the padded terms are meaningful or will be ignored.
  Series padded(std::size_t order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Scalar& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Scalar& s) { return a *= s; }
  friend Series operator*(const Scalar& s, Series a) { return a *= s; }
  Series operator-() const;

  friend bool operator==(const Series&, const Series&) = default;

  /// e.g. "1 + z*x + (z^2 + z)/2... " with x^k markers and an O() tail.
  std::string to_string() const;

 private:
  std::vector<Scalar> c_;
};

Series series_mul(const Series& a, const Series& b);

/// q with q*b = a. When b(0) = 0 the common factor x^v is cancelled first and
/// the quotient has order N - v.
Series series_div(const Series& a, const Series& b);

/// outer(inner(x)); inner must have zero constant term.
Series series_compose(const Series& outer, const Series& inner);

/// Compositional inverse by order-doubling Newton iteration.
Series series_revert(const Series& f);

Series series_exp(const Series& a);
Series series_log(const Series& a);

/// Term-wise derivative of order N-1.
Series series_derivative(const Series& a);
/// Derivative zero-padded back to `pad_to`.
Series series_derivative(const Series& a, std::size_t pad_to);

/// Integer power; negative exponents need a unit constant term.
Series series_pow(const Series& a, long e);

inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return series_div(a, b); }

inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

}  // namespace eriordan
