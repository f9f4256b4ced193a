#include "eriordan/sequences.hpp"

#include <array>

#include "eriordan/error.hpp"

namespace eriordan {

namespace {

void check_indices(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw math_error("index out of range: (" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Integer ipow(long base, long e) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Series geometric(const Scalar& c, std::size_t order) {
  // 1/(1 - c x)
  Series s(order);
  Scalar p = 1;
  for (std::size_t k = 0; k <= order; ++k, p *= c) s[k] = p;
  return s;
}

constexpr std::array<std::pair<NamedPair, const char*>, 9> kNames{{
    {NamedPair::thm1, "thm1"},
    {NamedPair::thm2, "thm2"},
    {NamedPair::stirling2, "stirling2"},
    {NamedPair::binomial, "binomial"},
    {NamedPair::lah_like, "lah_like"},
    {NamedPair::sets_of_lists, "sets_of_lists"},
    {NamedPair::laguerre, "laguerre"},
    {NamedPair::charlier, "charlier"},
    {NamedPair::thm2_z1, "thm2_z1"},
}};

}  // namespace

Integer stirling2(long n, long k) {
  check_indices(n, k);
  Integer acc = 0;
  for (long j = 0; j <= k; ++j) {
    const Integer term = binomial(k, j) * ipow(j, n);
    if ((k - j) % 2) acc -= term;
    else acc += term;
  }
  return acc / factorial(static_cast<unsigned>(k));
}

Integer eulerian(long n, long k) {
  check_indices(n, k);
  Integer acc = 0;
  for (long j = 0; j <= k; ++j) {
    const Integer term = ipow(k - j, n) * binomial(n + 1, j);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

IntTriangle stirling2_triangle(std::size_t nmax) {
  IntTriangle t;
  for (std::size_t n = 0; n <= nmax; ++n) {
    t.rows.emplace_back();
    for (std::size_t k = 0; k <= n; ++k) t.rows.back().push_back(stirling2(static_cast<long>(n), static_cast<long>(k)));
  }
  return t;
}

IntTriangle eulerian_triangle(std::size_t nmax) {
  IntTriangle t;
  for (std::size_t n = 0; n <= nmax; ++n) {
    t.rows.emplace_back();
    for (std::size_t k = 0; k <= n; ++k) t.rows.back().push_back(eulerian(static_cast<long>(n), static_cast<long>(k)));
  }
  return t;
}

PolyZ bell_poly(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.emplace_back(stirling2(static_cast<long>(n), static_cast<long>(k)));
  return PolyZ(std::move(c));
}

PolyZ eulerian_poly(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.emplace_back(eulerian(static_cast<long>(n), static_cast<long>(k)));
  return PolyZ(std::move(c));
}

Series exp_series(const Scalar& c, std::size_t order) {
  Series s(order);
  Scalar p = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    s[k] = p * Scalar(Rational(1, factorial(static_cast<unsigned>(k))));
    p *= c;
  }
  return s;
}

std::optional<NamedPair> named_pair_from_string(std::string_view name) {
  for (const auto& [p, s] : kNames)
    if (name == s) return p;
  return std::nullopt;
}

std::string to_string(NamedPair p) {
  for (const auto& [q, s] : kNames)
    if (q == p) return s;
  return "?";
}

const std::vector<NamedPair>& all_named_pairs() {
  static const std::vector<NamedPair> all = [] {
    std::vector<NamedPair> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

SeriesPair named_pair(NamedPair name, std::size_t order) {
  const Series one = Series::one(order);
  const Series x = Series::x(order);
  const Series ex = exp_series(1, order);
  const Series ex_minus_1 = ex - one;
  const Series inv_1mx = geometric(1, order);
  switch (name) {
    case NamedPair::thm1: return {series_exp(Scalar::z() * ex_minus_1), ex_minus_1};
    case NamedPair::thm2: {
      const Series ezx = exp_series(Scalar::z(), order);
      const Series den = ezx - Scalar::z() * ex;
      return {series_div((Scalar(1) - Scalar::z()) * ezx, den), series_div(ex - ezx, den)};
    }
    case NamedPair::stirling2: return {one, ex_minus_1};
    case NamedPair::binomial: return {ex, x};
    case NamedPair::lah_like: return {inv_1mx, x};
    case NamedPair::sets_of_lists: return {one, series_mul(x, inv_1mx)};
    case NamedPair::laguerre:
    case NamedPair::thm2_z1: return {inv_1mx, series_mul(x, inv_1mx)};
    case NamedPair::charlier: {
      // ln(1/(1-x)) = sum_{k>=1} x^k / k
      Series l(order);
      for (std::size_t k = 1; k <= order; ++k) l[k] = Scalar(Rational(1, static_cast<long>(k)));
      return {ex, l};
    }
  }
  throw math_error("unknown named pair");
}

SeriesPair named_pair(std::string_view name, std::size_t order) {
  const auto p = named_pair_from_string(name);
  if (!p) throw math_error("unknown named pair '" + std::string(name) + "'");
  return named_pair(*p, order);
}

}  // namespace eriordan
