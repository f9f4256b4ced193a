#include <doctest.h>

#include <random>

#include "eriordan/error.hpp"
#include "eriordan/series.hpp"
#include "oracles.hpp"

using namespace eriordan;
using oracle::P;
using oracle::S;

namespace {

Series coeffs(std::initializer_list<const char*> c) {
  std::vector<Scalar> v;
  for (const char* s : c) v.push_back(P(s));
  return Series(v);
}

}  // namespace

TEST_CASE("series_mul examples") {
  CHECK(S("1+x", 4) * S("1-x", 4) == S("1-x^2", 4));
  CHECK(S("1/(1-x)", 6) * S("1-x", 6) == Series::one(6));
  CHECK(S("exp(x)", 6) * S("exp(-x)", 6) == Series::one(6));
  CHECK_THROWS_AS(S("x", 3) * S("x", 4), math_error);
}

TEST_CASE("series_div examples") {
  CHECK(S("x+x^2", 4) / S("1+x", 4) == S("x", 4));
  CHECK(S("x^2+x^3", 4) / S("x", 4) == S("x+x^2", 3));
  CHECK(S("1", 3) / S("1-x", 3) == coeffs({"1", "1", "1", "1"}));
  CHECK_THROWS_WITH(S("1", 3) / Series(3), "series division by zero");
  CHECK_THROWS_WITH(S("1+x", 3) / S("x+x^2", 3), "series division needs unit or common factor");
}

TEST_CASE("series_div of the Thm 2 f against a hand oracle") {
  const std::size_t N = 3;
  // Oracle: numerator/denominator coefficients written out from the exponential series.
  std::vector<Scalar> num, den;
  const Scalar z = Scalar::z();
  for (std::size_t n = 0; n <= N; ++n) {
    const Scalar inv_fact = Scalar(Rational(1, oracle::fact(n)));
    num.push_back((Scalar(1) - z.pow(n)) * inv_fact);
    den.push_back((z.pow(n) - z) * inv_fact);
  }
  // q = num/den by long division over Q(z).
  std::vector<Scalar> q(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Scalar acc = num[n];
    for (std::size_t k = 0; k < n; ++k) acc -= q[k] * den[n - k];
    q[n] = acc / den[0];
  }
  const Series got = S("exp(x)-exp(z*x)", N) / S("exp(z*x)-z*exp(x)", N);
  CHECK(got == Series(q));
  CHECK(got[0] == Scalar());
  CHECK(got[1] == Scalar(1));
  CHECK(got[2] == P("(z+1)/2"));
}

TEST_CASE("series_compose examples") {
  const Series g = S("exp(z*x)/(1-x)", 5);
  CHECK(series_compose(g, Series::x(5)) == g);
  CHECK(series_compose(S("exp(x)", 5), S("log(1+x)", 5)) == S("1+x", 5));
  CHECK(series_compose(S("exp(x)-1", 6), S("log(1+x)", 6)) == S("x", 6));
  CHECK_THROWS_WITH(series_compose(g, S("1+x", 5)), "composition needs valuation >= 1");
}

TEST_CASE("series_revert examples") {
  CHECK(series_revert(Series::x(6)) == Series::x(6));
  CHECK(series_revert(S("exp(x)-1", 6)) == coeffs({"0", "1", "-1/2", "1/3", "-1/4", "1/5", "-1/6"}));
  CHECK(series_revert(S("x/(1-x)", 5)) == coeffs({"0", "1", "-1", "1", "-1", "1"}));
  CHECK_THROWS_WITH(series_revert(S("x^2", 4)), "not revertible");
  CHECK_THROWS_WITH(series_revert(S("1+x", 4)), "not revertible");
}

TEST_CASE("series_exp and series_log examples") {
  CHECK(series_exp(Series(4)) == Series::one(4));
  CHECK(series_log(series_exp(S("x*z", 4))) == S("z*x", 4));
  CHECK(series_exp(S("z*(exp(x)-1)", 3)) == coeffs({"1", "z", "(z^2+z)/2", "(z^3+3*z^2+z)/6"}));
  CHECK_THROWS_AS(series_exp(S("1+x", 3)), math_error);
  CHECK_THROWS_AS(series_log(S("2+x", 3)), math_error);
}

TEST_CASE("series_derivative examples") {
  CHECK(series_derivative(S("x^2", 4)) == S("2*x", 3));
  CHECK(series_derivative(S("exp(x)-1", 5)) == S("exp(x)", 4));
  CHECK(series_derivative(S("x^2", 4), 4) == coeffs({"0", "2", "0", "0", "0"}));
}

TEST_CASE("to_string has an O() tail") {
  CHECK(S("1+z*x", 2).to_string().find("O(x^3)") != std::string::npos);
}

TEST_CASE("property: revert and compose are inverse on random f") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const Series f = oracle::random_series(rng, 7, true, trial % 3 == 0);
    const Series fb = series_revert(f);
    CHECK(series_compose(f, fb) == Series::x(7));
    CHECK(series_compose(fb, f) == Series::x(7));
  }
}

TEST_CASE("property: exp and log are inverse; log is a homomorphism") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    Series a = oracle::random_series(rng, 6, true, true);
    CHECK(series_log(series_exp(a)) == a);
    Series u = oracle::random_series(rng, 6, false);
    u *= u[0].inverse();
    Series v = oracle::random_series(rng, 6, false, true);
    v *= v[0].inverse();
    CHECK(series_log(u * v) == series_log(u) + series_log(v));
    CHECK(series_exp(series_log(u)) == u);
  }
}

TEST_CASE("property: Leibniz rule and quotient consistency") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = oracle::random_series(rng, 6, false, true);
    const Series b = oracle::random_series(rng, 6, false);
    const Series lhs = series_derivative(a * b);
    const Series rhs = series_derivative(a) * b.truncated(5) + a.truncated(5) * series_derivative(b);
    CHECK(lhs == rhs);
    CHECK((a * b) / b == a);
    CHECK(series_pow(b, -2) * series_pow(b, 2) == Series::one(6));
  }
}
