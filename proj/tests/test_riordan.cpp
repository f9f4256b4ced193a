#include <doctest.h>

#include <random>

#include "eriordan/error.hpp"
#include "eriordan/riordan.hpp"
#include "eriordan/sequences.hpp"
#include "oracles.hpp"

using namespace eriordan;
using oracle::P;
using oracle::S;

namespace {

ERArray arr(const char* g, const char* f, std::size_t N) { return ERArray(S(g, N), S(f, N)); }

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Scalar> row_prefix(const Matrix& m, std::size_t i, std::size_t len) {
  std::vector<Scalar> r;
  for (std::size_t j = 0; j < len; ++j) r.push_back(m(i, j));
  return r;
}

}  // namespace

TEST_CASE("er_build examples") {
  const ERArray st = arr("1", "exp(x)-1", 5);
  const std::vector<std::vector<long>> expected{{1}, {0, 1}, {0, 1, 1}, {0, 1, 3, 1}, {0, 1, 7, 6, 1}, {0, 1, 15, 25, 10, 1}};
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= 5; ++k) CHECK(st(n, k) == Scalar(k <= n ? expected[n][k] : 0));
  CHECK(row_prefix(arr("1/(1-x)", "x", 5).entries(), 5, 6) == ints({120, 120, 60, 20, 5, 1}));
  CHECK(row_prefix(arr("1/(1-x)", "x/(1-x)", 5).entries(), 3, 4) == ints({6, 18, 9, 1}));
  CHECK(row_prefix(arr("exp(x)", "log(1/(1-x))", 5).entries(), 4, 5) == ints({1, 24, 29, 10, 1}));
  CHECK_THROWS_WITH(arr("0", "x", 3), "not a valid exponential Riordan pair");
  CHECK_THROWS_WITH(arr("1", "x^2", 3), "not a valid exponential Riordan pair");
  CHECK_THROWS_WITH(arr("1", "1+x", 3), "not a valid exponential Riordan pair");
}

TEST_CASE("er_build agrees with the naive oracle") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Series g = oracle::random_series(rng, 6, false, true);
    const Series f = oracle::random_series(rng, 6, true, true);
    CHECK(ERArray(g, f).entries() == oracle::er_entries(g.coeffs(), f.coeffs()));
  }
}

TEST_CASE("er_mul examples") {
  const std::size_t N = 7;
  CHECK(er_mul(arr("exp(x)", "x", N), arr("exp(x)", "x", N)) == arr("exp(2*x)", "x", N));
  CHECK(er_mul(arr("1", "exp(x)-1", N), arr("exp(z*x)", "x", N)) == arr("exp(z*(exp(x)-1))", "exp(x)-1", N));
  const ERArray a = arr("exp(z*x)/(1-x)", "x+x^2", N);
  CHECK(er_mul(a, er_identity(N)) == a);
  CHECK(er_mul(er_identity(N), a) == a);
  CHECK(er_mul(a, a).entries() == oracle::mul(a.entries(), a.entries()));
}

TEST_CASE("er_inverse examples") {
  const std::size_t N = 8;
  CHECK(er_inverse(arr("exp(z*(exp(x)-1))", "exp(x)-1", N)) == arr("exp(-z*x)", "log(1+x)", N));
  const ERArray lag_inv = er_inverse(arr("1/(1-x)", "x/(1-x)", N));
  CHECK(lag_inv == arr("1/(1+x)", "x/(1+x)", N));
  for (long n = 0; n <= static_cast<long>(N); ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(lag_inv(n, k) == Scalar(Rational(oracle::fact(n) * oracle::choose(n, k) * ((n - k) % 2 ? -1 : 1), oracle::fact(k))));
  CHECK(er_inverse(er_identity(N)) == er_identity(N));
}

TEST_CASE("er_apply examples") {
  const std::vector<Scalar> ones(6, Scalar(1));
  CHECK(er_apply(arr("1", "exp(x)-1", 5), ones) == ints({1, 1, 2, 5, 15, 52}));
  CHECK(er_apply(arr("1", "x/(1-x)", 5), ones) == ints({1, 1, 3, 13, 73, 501}));
  const std::vector<Scalar> u{P("z"), 2, P("1/3"), 0, 7, P("z^2")};
  CHECK(er_apply(er_identity(5), u) == u);
}

TEST_CASE("production matrix examples") {
  const std::size_t N = 6;
  const ProductionMatrix lag = production_from_pair(arr("1/(1-x)", "x/(1-x)", N));
  CHECK(row_prefix(lag.entries, 0, 2) == ints({1, 1}));
  CHECK(row_prefix(lag.entries, 1, 3) == ints({1, 3, 1}));
  CHECK(row_prefix(lag.entries, 2, 4) == ints({0, 4, 5, 1}));
  CHECK(row_prefix(lag.entries, 3, 5) == ints({0, 0, 9, 7, 1}));
  const ProductionMatrix ch = production_from_pair(er_inverse(arr("exp(x)", "log(1/(1-x))", N)));
  CHECK(row_prefix(ch.entries, 0, 2) == ints({-1, 1}));
  CHECK(row_prefix(ch.entries, 1, 3) == ints({1, -2, 1}));
  CHECK(row_prefix(ch.entries, 2, 4) == ints({0, 2, -3, 1}));

  // Identity gives the shift matrix.
  const ProductionMatrix id = production_from_pair(er_identity(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= N; ++j) CHECK(id.entries(i, j) == Scalar(j == i + 1 ? 1 : 0));

  // [1/(1-x), x]: p(i,j) = i!/j! for j <= i, plus the unit superdiagonal.
  const ERArray lah = arr("1/(1-x)", "x", N);
  const ProductionMatrix pl = production_from_pair(lah);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= i + 1; ++j) CHECK(pl.entries(i, j) == (j == i + 1 ? Scalar(1) : lah(i, j)));
  CHECK(row_prefix(pl.entries, 0, 2) == ints({1, 1}));
}

TEST_CASE("production series and bivariate gf") {
  const std::size_t N = 7;
  const ERArray t1 = arr("exp(z*(exp(x)-1))", "exp(x)-1", N);
  const auto [c1, r1] = production_series(t1);
  CHECK(c1 == S("z*(1+x)", N - 1));
  CHECK(r1 == S("1+x", N - 1));
  const ERArray lah = arr("1/(1-x)", "x", N);
  const auto [c2, r2] = production_series(lah);
  CHECK(c2 == S("1/(1-x)", N - 1));
  CHECK(r2 == S("1", N - 1));

  // phi(t,w) = e^{tw}(c(w) + t r(w)) checked coefficientwise: [w^n t^k] = c_{n-k}/k! + r_{n-k+1}/(k-1)!.
  const BivariateSeries phi = production_bivariate_gf(lah);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t k = 0; k <= n + 1 && k < phi.coeff[n].size(); ++k) {
      Scalar expect;
      if (k <= n) expect += c2[n - k] * Scalar(Rational(1, oracle::fact(k)));
      if (k >= 1 && n + 1 - k <= N - 1) expect += r2[n + 1 - k] * Scalar(Rational(1, oracle::fact(k - 1)));
      CHECK(phi.coeff[n][k] == expect);
    }
  CHECK(phi.to_production_matrix(N).agrees_with(production_from_pair(lah)));
}

TEST_CASE("extract_jacobi") {
  const std::size_t N = 8;
  const JacobiParams j1 = extract_jacobi(production_from_pair(arr("exp(z*(exp(x)-1))", "exp(x)-1", N)));
  REQUIRE(j1.depth() == N);
  for (std::size_t n = 0; n < N; ++n) CHECK(j1.alpha[n] == oracle::zs() + Scalar(static_cast<long>(n)));
  for (std::size_t n = 1; n < N; ++n) CHECK(j1.beta_at(n) == Scalar(static_cast<long>(n)) * oracle::zs());

  const JacobiParams j2 = extract_jacobi(production_from_pair(ERArray(named_pair(NamedPair::thm2, N).g, named_pair(NamedPair::thm2, N).f)));
  for (std::size_t n = 0; n < N; ++n) CHECK(j2.alpha[n] == P("(" + std::to_string(n + 1) + ")*z+" + std::to_string(n)));
  for (std::size_t n = 1; n < N; ++n) CHECK(j2.beta_at(n) == Scalar(static_cast<long>(n * n)) * oracle::zs());

  CHECK_THROWS_WITH(extract_jacobi(production_from_pair(arr("1/(1-x)", "x", N))),
                    "production matrix not tridiagonal: offending entry (2,0)");
  CHECK_THROWS_WITH(extract_jacobi(production_from_pair(arr("1", "2*x", N))), "not monic form");
}

TEST_CASE("property: group laws on random pairs") {
  std::mt19937 rng(17);
  const std::size_t N = 7;
  for (int trial = 0; trial < 6; ++trial) {
    const ERArray a(oracle::random_series(rng, N, false, true), oracle::random_series(rng, N, true));
    const ERArray b(oracle::random_series(rng, N, false), oracle::random_series(rng, N, true, true));
    const ERArray c(oracle::random_series(rng, N, false), oracle::random_series(rng, N, true));
    CHECK(er_mul(er_mul(a, b), c) == er_mul(a, er_mul(b, c)));
    CHECK(er_mul(a, er_inverse(a)) == er_identity(N));
    CHECK(er_mul(er_inverse(a), a) == er_identity(N));
    CHECK(er_mul(a, b).entries() == oracle::mul(a.entries(), b.entries()));
    CHECK(er_inverse(a).entries() == lower_triangular_inverse(a.entries()));
  }
}

TEST_CASE("property: production routes agree on random pairs") {
  std::mt19937 rng(23);
  const std::size_t N = 7;
  for (int trial = 0; trial < 8; ++trial) {
    const ERArray a(oracle::random_series(rng, N, false, trial % 2), oracle::random_series(rng, N, true, true));
    const ProductionMatrix p = production_from_pair(a);
    CHECK(p.agrees_with(production_direct(a)));
    CHECK(p.agrees_with(production_bivariate_gf(a).to_production_matrix(N)));
    // Oracle: row i+1 of A equals row i of A times P.
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k <= N; ++k) {
        Scalar s;
        for (std::size_t j = 0; j <= N; ++j) s += a(i, j) * p.entries(j, k);
        CHECK(s == a(i + 1, k));
      }
  }
}
