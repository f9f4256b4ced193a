#include "eriordan/scalar.hpp"

#include "eriordan/error.hpp"

namespace eriordan {

Scalar::Scalar(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw math_error("scalar division by zero");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyZ(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ *= Rational(1) / den_.lead();
      den_ = PolyZ(1);
    }
    return;
  }
  const PolyZ g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (!den_.lead().is_one()) {
    const Rational inv = Rational(1) / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = PolyZ(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  const PolyZ g1 = gcd(num_, o.den_);
  const PolyZ g2 = gcd(o.num_, den_);
  PolyZ n = num_.exact_div(g1) * o.num_.exact_div(g2);
  PolyZ d = den_.exact_div(g2) * o.den_.exact_div(g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.lead().is_one()) {
    const Rational inv = Rational(1) / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("scalar division by zero");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  const Rational inv = Rational(1) / r.den_.lead();
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

Rational Scalar::eval_z(const Rational& v) const {
  const Rational d = den_.eval(v);
  if (d.is_zero()) throw math_error("pole at z = " + v.to_string());
  return num_.eval(v) / d;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw math_error("unknown arithmetic op");
}

}  // namespace eriordan
