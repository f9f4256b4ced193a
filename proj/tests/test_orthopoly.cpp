#include <doctest.h>

#include <random>

#include "eriordan/error.hpp"
#include "eriordan/orthopoly.hpp"
#include "eriordan/riordan.hpp"
#include "oracles.hpp"

using namespace eriordan;
using oracle::P;
using oracle::S;

namespace {

JacobiParams params(std::size_t depth, auto alpha, auto beta) {
  JacobiParams j;
  for (std::size_t n = 0; n < depth; ++n) j.alpha.push_back(alpha(n));
  for (std::size_t n = 1; n < depth; ++n) j.beta.push_back(beta(n));
  return j;
}

Scalar L(long v) { return Scalar(v); }

JacobiParams thm1(std::size_t d) {
  return params(d, [](std::size_t n) { return oracle::zs() + L(n); }, [](std::size_t n) { return L(n) * oracle::zs(); });
}
JacobiParams thm2(std::size_t d) {
  return params(d, [](std::size_t n) { return L(n + 1) * oracle::zs() + L(n); },
                [](std::size_t n) { return L(n * n) * oracle::zs(); });
}

}  // namespace

TEST_CASE("coeff_array_from_jacobi examples") {
  const std::size_t N = 6;
  const Matrix c1 = coeff_array_from_jacobi(thm1(N), N);
  CHECK(c1.row(2)[0] == P("z^2"));
  CHECK(c1.row(2)[1] == P("-2*z-1"));
  CHECK(c1.row(2)[2] == Scalar(1));
  CHECK(c1 == ERArray(S("exp(-z*x)", N), S("log(1+x)", N)).entries());

  const JacobiParams ch = params(N, [](std::size_t n) { return L(-static_cast<long>(n) - 1); }, [](std::size_t n) { return L(n); });
  CHECK(coeff_array_from_jacobi(ch, N) == ERArray(S("exp(x)", N), S("log(1/(1-x))", N)).entries());

  const JacobiParams zero = params(4, [](std::size_t) { return Scalar(); }, [](std::size_t) { return Scalar(); });
  const Matrix cz = coeff_array_from_jacobi(zero, 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= 4; ++k) CHECK(cz(n, k) == Scalar(n == k ? 1 : 0));
  CHECK_THROWS_AS(coeff_array_from_jacobi(thm1(3), 4), math_error);
}

TEST_CASE("moments_from_jacobi examples") {
  const auto e = moments_from_jacobi(thm1(5), 5).terms;
  CHECK(e == std::vector<Scalar>{1, P("z"), P("z+z^2"), P("z+3*z^2+z^3"), P("z+7*z^2+6*z^3+z^4")});
  CHECK(moments_from_jacobi(thm2(4), 4).terms == std::vector<Scalar>{1, P("z"), P("z+z^2"), P("z+4*z^2+z^3")});
  const JacobiParams lag = params(5, [](std::size_t n) { return L(2 * n + 1); }, [](std::size_t n) { return L(n * n); });
  CHECK(moments_from_jacobi(lag, 5).terms == std::vector<Scalar>{1, 1, 2, 6, 24});
  CHECK(moments_from_jacobi(thm1(5), 10).terms == oracle::touchard(9));
  CHECK_THROWS_AS(moments_from_jacobi(thm1(3), 7), math_error);
}

TEST_CASE("jfraction_expand examples") {
  CHECK(jfraction_expand(thm1(6), 10).coeffs() == oracle::touchard(10));
  CHECK(jfraction_expand(thm2(6), 10).coeffs() == oracle::eulerian_polys(10));
  const JacobiParams zero = params(3, [](std::size_t) { return Scalar(); }, [](std::size_t) { return Scalar(); });
  CHECK(jfraction_expand(zero, 4) == Series::one(4));
}

TEST_CASE("jacobi_from_moments examples") {
  const JacobiRecovery r1 = jacobi_from_moments(MomentSequence{oracle::touchard(8)});
  CHECK_FALSE(r1.terminated);
  CHECK(r1.params == thm1(r1.depth));
  CHECK(r1.depth == 4);

  std::vector<Scalar> facts;
  for (long n = 0; n <= 9; ++n) facts.emplace_back(oracle::fact(n));
  const JacobiRecovery r2 = jacobi_from_moments(MomentSequence{facts});
  CHECK(r2.params == params(5, [](std::size_t n) { return L(2 * n + 1); }, [](std::size_t n) { return L(n * n); }));

  const Scalar c = P("z+2");
  const JacobiRecovery r3 = jacobi_from_moments(MomentSequence{{1, c, c * c, c * c * c}});
  CHECK(r3.terminated);
  CHECK(r3.depth == 1);
  CHECK(r3.params.alpha == std::vector<Scalar>{c});

  CHECK_THROWS_WITH(jacobi_from_moments(MomentSequence{{0, 1, 2}}), "leading moment a_0 is zero");
  CHECK_THROWS_WITH(jacobi_from_moments(MomentSequence{{1}}), "need at least 2 moments");
}

TEST_CASE("validate") {
  JacobiParams bad = thm1(3);
  bad.beta[1] = Scalar();
  CHECK_THROWS_AS(validate(bad), math_error);
  bad = thm1(3);
  bad.beta.pop_back();
  CHECK_THROWS_AS(validate(bad), math_error);
  CHECK_NOTHROW(validate(thm2(4)));
}

TEST_CASE("property: moments and Jacobi parameters round trip") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> a(-4, 4), b(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    JacobiParams j;
    j.a0 = Scalar(b(rng));
    for (int n = 0; n < 5; ++n) j.alpha.push_back(Scalar(a(rng)) + (trial % 2 ? Scalar(a(rng)) * oracle::zs() : Scalar()));
    for (int n = 1; n < 5; ++n) j.beta.push_back(Scalar(b(rng)));
    const MomentSequence m = moments_from_jacobi(j, 10);
    CHECK(m.terms == jfraction_expand(j, 9).coeffs());
    const JacobiRecovery r = jacobi_from_moments(m);
    CHECK(r.params == j);
  }
}
