#include "eriordan/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eriordan/error.hpp"
#include "eriordan/expr.hpp"
#include "eriordan/hankel.hpp"
#include "eriordan/orthopoly.hpp"
#include "eriordan/riordan.hpp"
#include "eriordan/sequences.hpp"
#include "eriordan/serialize.hpp"

namespace eriordan::verify {

namespace {

using Table = std::vector<std::vector<std::string>>;

Scalar S(const std::string& text) { return expr::scalar_from_text(text); }
Series E(const std::string& text, std::size_t order) { return expr::series_from_text(text, order); }
Scalar I(long v) { return Scalar(v); }
Scalar fact(std::size_t n) { return Scalar(factorial(static_cast<unsigned>(n))); }
Scalar choose(std::size_t n, std::size_t k) { return Scalar(binomial(static_cast<long>(n), static_cast<long>(k))); }

std::string join(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

std::string join_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " | " : "") + join(rows[i]);
  return s;
}

Check compare_seq(std::string name, const std::vector<Scalar>& actual, const std::vector<Scalar>& expected) {
  return {std::move(name), actual == expected, join(expected), join(actual)};
}

// Compares the first rows of `actual` against `expected`; entries past the end
// of an expected row must be zero.
Check compare_rows(std::string name, const Rows& actual, const std::vector<std::vector<Scalar>>& expected) {
  const std::size_t n = std::min(actual.rows.size(), expected.size());
  std::vector<std::vector<Scalar>> got(actual.rows.begin(), actual.rows.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::vector<Scalar>> want(expected.begin(), expected.begin() + static_cast<std::ptrdiff_t>(n));
  bool ok = n > 0;
  for (std::size_t i = 0; i < n && ok; ++i) {
    for (std::size_t k = 0; k < got[i].size(); ++k) {
      const Scalar w = k < want[i].size() ? want[i][k] : Scalar();
      if (got[i][k] != w) ok = false;
    }
    for (std::size_t k = got[i].size(); k < want[i].size(); ++k)
      if (!want[i][k].is_zero()) ok = false;
  }
  return {std::move(name), ok, join_rows(want), join_rows(got)};
}

std::vector<std::vector<Scalar>> table(const Table& t) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : t) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(S(e));
  }
  return out;
}

std::vector<std::vector<Scalar>> generate(std::size_t rows, const std::function<std::size_t(std::size_t)>& width,
                                          const std::function<Scalar(std::size_t, std::size_t)>& entry) {
  std::vector<std::vector<Scalar>> out(rows);
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t k = 0; k < width(n); ++k) out[n].push_back(entry(n, k));
  return out;
}

std::size_t triangle_width(std::size_t n) { return n + 1; }

// Tridiagonal pattern with the given diagonal/subdiagonal and unit superdiagonal.
std::vector<std::vector<Scalar>> tridiagonal(std::size_t order, const std::function<Scalar(std::size_t)>& alpha,
                                             const std::function<Scalar(std::size_t)>& beta) {
  return generate(order, [](std::size_t i) { return i + 2; }, [&](std::size_t i, std::size_t j) {
    if (j == i + 1) return I(1);
    if (j == i) return alpha(i);
    if (j + 1 == i) return beta(i);
    return Scalar();
  });
}

Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, "no error", e.what()};
  }
}

std::vector<Scalar> first_column(const ERArray& a) { return a.entries().column(0); }

std::vector<Scalar> hankel_closed_form(std::size_t nmax, const std::function<Scalar(std::size_t)>& base, int fact_power) {
  std::vector<Scalar> out;
  for (std::size_t n = 0; n <= nmax; ++n) {
    Scalar v = base(n).pow(static_cast<long>(n * (n + 1) / 2));
    for (std::size_t k = 1; k <= n; ++k) v *= fact(k).pow(fact_power);
    out.push_back(v);
  }
  return out;
}

Report production_checks(const std::string& tag, const ERArray& a, const Table& displayed,
                         const std::vector<std::vector<Scalar>>& pattern) {
  Report r;
  const ProductionMatrix pair = production_from_pair(a);
  r.checks.push_back(compare_rows(tag + ": production matrix matches displayed rows", rows_of(pair), table(displayed)));
  if (!pattern.empty())
    r.checks.push_back(compare_rows(tag + ": production matrix pattern rows 0..N-1", rows_of(pair), pattern));
  const ProductionMatrix direct = production_direct(a);
  r.checks.push_back({tag + ": production_direct agrees rows 0..N-1", pair.agrees_with(direct), "AGREE", join_rows(rows_of(direct).rows)});
  const ProductionMatrix from_gf = production_bivariate_gf(a).to_production_matrix(a.order());
  r.checks.push_back({tag + ": bivariate gf reproduces production matrix", pair.agrees_with(from_gf), "AGREE",
                      join_rows(rows_of(from_gf).rows)});
  return r;
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

void Report::print(std::ostream& os) const {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    if (!c.passed) os << "  expected: " << c.expected << "\n  actual:   " << c.actual << '\n';
    passed += c.passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
}

Report verify_thm1(std::size_t order) {
  const std::size_t N = order;
  Report r;
  const auto [g, f] = named_pair(NamedPair::thm1, N);
  const ERArray L(g, f);
  const Scalar z = Scalar::z();

  r.append(production_checks(
      "thm1", L,
      {{"z", "1"}, {"z", "z+1", "1"}, {"0", "2*z", "z+2", "1"}, {"0", "0", "3*z", "z+3", "1"},
       {"0", "0", "0", "4*z", "z+4", "1"}, {"0", "0", "0", "0", "5*z", "z+5", "1"}},
      tridiagonal(N, [&](std::size_t n) { return z + I(static_cast<long>(n)); },
                  [&](std::size_t n) { return I(static_cast<long>(n)) * z; })));

  r.checks.push_back(guarded("thm1: c(w) = z(1+w), r(w) = 1+w", [&] {
    const auto [c, rr] = production_series(L);
    const bool ok = c == E("z*(1+x)", N - 1) && rr == E("1+x", N - 1);
    return Check{"thm1: c(w) = z(1+w), r(w) = 1+w", ok, "z + z*x ; 1 + x", c.to_string() + " ; " + rr.to_string()};
  }));

  std::vector<Scalar> touchard;
  for (std::size_t n = 0; n <= N; ++n) touchard.emplace_back(bell_poly(n));
  r.checks.push_back(compare_seq("thm1: first column equals e_n(z)", first_column(L), touchard));

  r.checks.push_back(guarded("thm1: Jacobi parameters alpha_n = z+n, beta_n = n z", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    std::vector<Scalar> want_a, want_b;
    for (std::size_t n = 0; n < N; ++n) want_a.push_back(z + I(static_cast<long>(n)));
    for (std::size_t n = 1; n < N; ++n) want_b.push_back(I(static_cast<long>(n)) * z);
    return Check{"thm1: Jacobi parameters alpha_n = z+n, beta_n = n z", j.alpha == want_a && j.beta == want_b,
                 join(want_a) + " ; " + join(want_b), join(j.alpha) + " ; " + join(j.beta)};
  }));

  r.checks.push_back(guarded("thm1: moments of the recurrence equal e_n(z)", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    const MomentSequence m = moments_from_jacobi(j, N + 1);
    const Series jf = jfraction_expand(j, N);
    const bool ok = m.terms == touchard && jf.coeffs() == touchard;
    return Check{"thm1: moments of the recurrence equal e_n(z)", ok, join(touchard), join(m.terms)};
  }));

  r.checks.push_back(guarded("thm1: coefficient array from recurrence equals L^{-1}", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    const Rows coeffs = lower_rows_of(coeff_array_from_jacobi(j, N - 1));
    return compare_rows("thm1: coefficient array from recurrence equals L^{-1}", coeffs, rows_of(er_inverse(L)).rows);
  }));

  r.checks.push_back(guarded("thm1: Hankel transform of e_n(z) is z^C(n+1,2) prod k!", [&] {
    const std::size_t nmax = N / 2;
    const auto h = hankel_transform(MomentSequence{touchard}, nmax);
    return compare_seq("thm1: Hankel transform of e_n(z) is z^C(n+1,2) prod k!", h,
                       hankel_closed_form(nmax, [&](std::size_t) { return z; }, 1));
  }));

  r.checks.push_back(guarded("thm1: Hankel transform equals beta product", [&] {
    const std::size_t nmax = N / 2;
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    return compare_seq("thm1: Hankel transform equals beta product", hankel_transform(MomentSequence{touchard}, nmax),
                       hankel_from_betas(j, nmax));
  }));

  r.checks.push_back(guarded("thm1: Hankel of row sums is (z+1)^C(n+1,2) prod k!", [&] {
    const std::size_t nmax = N / 2;
    const auto sums = er_apply(L, std::vector<Scalar>(N + 1, I(1)));
    return compare_seq("thm1: Hankel of row sums is (z+1)^C(n+1,2) prod k!", hankel_transform(MomentSequence{sums}, nmax),
                       hankel_closed_form(nmax, [&](std::size_t) { return z + I(1); }, 1));
  }));

  r.checks.push_back(guarded("thm1: inverse equals [e^{-zx}, ln(1+x)]", [&] {
    const ERArray want(E("exp(-z*x)", N), E("log(1+x)", N));
    const ERArray got = er_inverse(L);
    return compare_rows("thm1: inverse equals [e^{-zx}, ln(1+x)]", rows_of(got), rows_of(want).rows);
  }));

  r.checks.push_back(guarded("thm1: L = [1, e^x-1] * [e^{zx}, x]", [&] {
    const ERArray prod = er_mul(ERArray(E("1", N), E("exp(x)-1", N)), ERArray(E("exp(z*x)", N), E("x", N)));
    return compare_rows("thm1: L = [1, e^x-1] * [e^{zx}, x]", rows_of(prod), rows_of(L).rows);
  }));

  r.checks.push_back(guarded("thm1: L(n,k) = sum_j S(n,j) C(j,k) z^(j-k)", [&] {
    const auto want = generate(N + 1, triangle_width, [&](std::size_t n, std::size_t k) {
      Scalar acc;
      for (std::size_t j = k; j <= n; ++j)
        acc += Scalar(stirling2(static_cast<long>(n), static_cast<long>(j))) * choose(j, k) * z.pow(static_cast<long>(j - k));
      return acc;
    });
    return compare_rows("thm1: L(n,k) = sum_j S(n,j) C(j,k) z^(j-k)", rows_of(L), want);
  }));
  return r;
}

Report verify_thm2(std::size_t order) {
  const std::size_t N = order;
  Report r;
  const auto [g, f] = named_pair(NamedPair::thm2, N);
  const ERArray L(g, f);
  const Scalar z = Scalar::z();

  r.append(production_checks(
      "thm2", L,
      {{"z", "1"}, {"z", "2*z+1", "1"}, {"0", "4*z", "3*z+2", "1"}, {"0", "0", "9*z", "4*z+3", "1"},
       {"0", "0", "0", "16*z", "5*z+4", "1"}, {"0", "0", "0", "0", "25*z", "6*z+5", "1"}},
      tridiagonal(N, [&](std::size_t n) { return I(static_cast<long>(n + 1)) * z + I(static_cast<long>(n)); },
                  [&](std::size_t n) { return I(static_cast<long>(n * n)) * z; })));

  r.checks.push_back(guarded("thm2: c(w) = z(1+w), r(w) = (1+w)(1+zw)", [&] {
    const auto [c, rr] = production_series(L);
    const bool ok = c == E("z*(1+x)", N - 1) && rr == E("(1+x)*(1+z*x)", N - 1);
    return Check{"thm2: c(w) = z(1+w), r(w) = (1+w)(1+zw)", ok, "z + z*x ; 1 + (z + 1)*x + z*x^2",
                 c.to_string() + " ; " + rr.to_string()};
  }));

  std::vector<Scalar> eu;
  for (std::size_t n = 0; n <= N; ++n) eu.emplace_back(eulerian_poly(n));
  r.checks.push_back(compare_seq("thm2: first column equals EU_n(z)", first_column(L), eu));

  r.checks.push_back(guarded("thm2: Jacobi parameters alpha_n = (n+1)z+n, beta_n = n^2 z", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    std::vector<Scalar> want_a, want_b;
    for (std::size_t n = 0; n < N; ++n) want_a.push_back(I(static_cast<long>(n + 1)) * z + I(static_cast<long>(n)));
    for (std::size_t n = 1; n < N; ++n) want_b.push_back(I(static_cast<long>(n * n)) * z);
    return Check{"thm2: Jacobi parameters alpha_n = (n+1)z+n, beta_n = n^2 z", j.alpha == want_a && j.beta == want_b,
                 join(want_a) + " ; " + join(want_b), join(j.alpha) + " ; " + join(j.beta)};
  }));

  r.checks.push_back(guarded("thm2: moments of the recurrence equal EU_n(z)", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    const MomentSequence m = moments_from_jacobi(j, N + 1);
    const Series jf = jfraction_expand(j, N);
    return Check{"thm2: moments of the recurrence equal EU_n(z)", m.terms == eu && jf.coeffs() == eu, join(eu),
                 join(m.terms)};
  }));

  r.checks.push_back(guarded("thm2: coefficient array from recurrence equals L^{-1}", [&] {
    const JacobiParams j = extract_jacobi(production_from_pair(L));
    return compare_rows("thm2: coefficient array from recurrence equals L^{-1}",
                        lower_rows_of(coeff_array_from_jacobi(j, N - 1)), rows_of(er_inverse(L)).rows);
  }));

  r.checks.push_back(guarded("thm2: Hankel transform of EU_n(z) is z^C(n+1,2) prod k!^2", [&] {
    const std::size_t nmax = N / 2;
    return compare_seq("thm2: Hankel transform of EU_n(z) is z^C(n+1,2) prod k!^2",
                       hankel_transform(MomentSequence{eu}, nmax),
                       hankel_closed_form(nmax, [&](std::size_t) { return z; }, 2));
  }));

  r.checks.push_back(guarded("thm2: inverse equals [1/(1+zx), ln((1+zx)/(1+x))/(z-1)]", [&] {
    const ERArray want(E("1/(1+z*x)", N), E("log((1+z*x)/(1+x))/(z-1)", N));
    return compare_rows("thm2: inverse equals [1/(1+zx), ln((1+zx)/(1+x))/(z-1)]", rows_of(er_inverse(L)),
                        rows_of(want).rows);
  }));

  r.checks.push_back(guarded("thm2: g(fbar(x)) = 1 + zx", [&] {
    const Series gf = series_compose(L.g(), series_revert(L.f()));
    const Series want = E("1+z*x", N);
    return Check{"thm2: g(fbar(x)) = 1 + zx", gf == want, want.to_string(), gf.to_string()};
  }));

  r.checks.push_back(guarded("thm2: z = 1 entries are (n!/k!) C(n,k)", [&] {
    const Rows at1 = specialize(rows_of(L), Rational(1));
    const auto want = generate(N + 1, triangle_width, [&](std::size_t n, std::size_t k) {
      return fact(n) / fact(k) * choose(n, k);
    });
    const auto laguerre = named_pair(NamedPair::thm2_z1, N);
    const bool same_as_named = at1 == rows_of(ERArray(laguerre.g, laguerre.f));
    Check c = compare_rows("thm2: z = 1 entries are (n!/k!) C(n,k)", at1, want);
    c.passed = c.passed && same_as_named;
    return c;
  }));

  r.checks.push_back(guarded("thm2: z = 1 inverse entries are (-1)^(n-k) (n!/k!) C(n,k)", [&] {
    const Rows at1 = specialize(rows_of(er_inverse(L)), Rational(1));
    const auto want = generate(N + 1, triangle_width, [&](std::size_t n, std::size_t k) {
      const Scalar v = fact(n) / fact(k) * choose(n, k);
      return (n - k) % 2 ? -v : v;
    });
    return compare_rows("thm2: z = 1 inverse entries are (-1)^(n-k) (n!/k!) C(n,k)", at1, want);
  }));
  return r;
}

Report verify_examples(std::size_t order) {
  const std::size_t N = order;
  Report r;
  auto array_of = [&](NamedPair p) {
    const auto [g, f] = named_pair(p, N);
    return ERArray(g, f);
  };

  const ERArray stirling = array_of(NamedPair::stirling2);
  r.checks.push_back(compare_rows(
      "stirling2: [1, e^x-1] rows 0..5 match displayed triangle", rows_of(stirling),
      table({{"1"}, {"0", "1"}, {"0", "1", "1"}, {"0", "1", "3", "1"}, {"0", "1", "7", "6", "1"},
             {"0", "1", "15", "25", "10", "1"}})));
  r.checks.push_back(compare_rows("stirling2: closed form S(n,k) equals array entries", rows_of(stirling),
                                  rows_of(stirling2_triangle(N)).rows));

  r.checks.push_back(compare_rows(
      "eulerian: A(n,k) rows 0..5 match displayed triangle", rows_of(eulerian_triangle(5)),
      table({{"1"}, {"0", "1"}, {"0", "1", "1"}, {"0", "1", "4", "1"}, {"0", "1", "11", "11", "1"},
             {"0", "1", "26", "66", "26", "1"}})));
  {
    std::vector<Scalar> sums, want;
    const IntTriangle t = eulerian_triangle(N);
    for (std::size_t n = 0; n <= N; ++n) {
      Integer s = 0;
      for (const auto& v : t.rows[n]) s += v;
      sums.emplace_back(s);
      want.push_back(fact(n));
    }
    r.checks.push_back(compare_seq("eulerian: row sums equal n!", sums, want));
  }

  const ERArray binom = array_of(NamedPair::binomial);
  r.checks.push_back(compare_rows("binomial: [e^x, x] is Pascal's triangle", rows_of(binom),
                                  generate(N + 1, triangle_width, [](std::size_t n, std::size_t k) { return choose(n, k); })));
  r.checks.push_back(guarded("binomial: [e^x, x]^3 = [e^{3x}, x]", [&] {
    const ERArray cube = er_mul(er_mul(binom, binom), binom);
    return compare_rows("binomial: [e^x, x]^3 = [e^{3x}, x]", rows_of(cube), rows_of(ERArray(E("exp(3*x)", N), E("x", N))).rows);
  }));

  const ERArray lah = array_of(NamedPair::lah_like);
  r.checks.push_back(compare_rows("[1/(1-x), x]: rows 0..5 match displayed array", rows_of(lah),
                                  table({{"1"}, {"1", "1"}, {"2", "2", "1"}, {"6", "6", "3", "1"},
                                         {"24", "24", "12", "4", "1"}, {"120", "120", "60", "20", "5", "1"}})));
  r.checks.push_back(guarded("[1/(1-x), x]: inverse is [1-x, x]", [&] {
    return compare_rows("[1/(1-x), x]: inverse is [1-x, x]", rows_of(er_inverse(lah)),
                        table({{"1"}, {"-1", "1"}, {"0", "-2", "1"}, {"0", "0", "-3", "1"}, {"0", "0", "0", "-4", "1"},
                               {"0", "0", "0", "0", "-5", "1"}}));
  }));
  // P = A plus a superdiagonal of ones; only row 0 agrees with "A without its first row".
  r.checks.push_back(guarded("[1/(1-x), x]: production matrix is the array with unit superdiagonal", [&] {
    const auto expected = generate(N, [](std::size_t i) { return i + 2; },
                                   [&](std::size_t i, std::size_t j) { return j == i + 1 ? Scalar(1) : lah(i, j); });
    Report sub = production_checks("[1/(1-x), x]", lah,
                                   {{"1", "1"}, {"1", "1", "1"}, {"2", "2", "1", "1"}, {"6", "6", "3", "1", "1"}}, expected);
    Check c = sub.checks.front();
    c.name = "[1/(1-x), x]: production matrix is the array with unit superdiagonal";
    c.passed = sub.all_passed();
    return c;
  }));

  const ERArray lists = array_of(NamedPair::sets_of_lists);
  r.checks.push_back(compare_rows("[1, x/(1-x)]: general term (n!/k!) C(n-1, n-k)", rows_of(lists),
                                  generate(N + 1, triangle_width, [](std::size_t n, std::size_t k) {
                                    if (n == 0) return Scalar(1);
                                    return fact(n) / fact(k) * choose(n - 1, n - k);
                                  })));
  r.checks.push_back(guarded("[1, x/(1-x)]: row sums 1, 1, 3, 13, 73, 501", [&] {
    auto sums = er_apply(lists, std::vector<Scalar>(N + 1, I(1)));
    sums.resize(std::min<std::size_t>(6, sums.size()));
    std::vector<Scalar> want{I(1), I(1), I(3), I(13), I(73), I(501)};
    want.resize(sums.size());
    return compare_seq("[1, x/(1-x)]: row sums 1, 1, 3, 13, 73, 501", sums, want);
  }));
  r.checks.push_back(guarded("[1, x/(1-x)]: inverse is [1, x/(1+x)] with row sums 1, 1, -1, 1, 1, -19, 151", [&] {
    const ERArray inv = er_inverse(lists);
    auto sums = er_apply(inv, std::vector<Scalar>(N + 1, I(1)));
    sums.resize(std::min<std::size_t>(7, sums.size()));
    std::vector<Scalar> want{I(1), I(1), I(-1), I(1), I(1), I(-19), I(151)};
    want.resize(sums.size());
    Check c = compare_seq("[1, x/(1-x)]: inverse is [1, x/(1+x)] with row sums 1, 1, -1, 1, 1, -19, 151", sums, want);
    c.passed = c.passed && inv == ERArray(E("1", N), E("x/(1+x)", N));
    return c;
  }));
  r.append(production_checks("[1, x/(1-x)]", lists,
                             {{"0", "1"}, {"0", "2", "1"}, {"0", "2", "4", "1"}, {"0", "0", "6", "6", "1"},
                              {"0", "0", "0", "12", "8", "1"}, {"0", "0", "0", "0", "20", "10", "1"}},
                             {}));

  const ERArray laguerre = array_of(NamedPair::laguerre);
  r.checks.push_back(compare_rows("[1/(1-x), x/(1-x)]: rows 0..5 match displayed array", rows_of(laguerre),
                                  table({{"1"}, {"1", "1"}, {"2", "4", "1"}, {"6", "18", "9", "1"},
                                         {"24", "96", "72", "16", "1"}, {"120", "600", "600", "200", "25", "1"}})));
  r.checks.push_back(guarded("[1/(1-x), x/(1-x)]: inverse is [1/(1+x), x/(1+x)] = (-1)^(n-k) (n!/k!) C(n,k)", [&] {
    const ERArray inv = er_inverse(laguerre);
    Check c = compare_rows("[1/(1-x), x/(1-x)]: inverse is [1/(1+x), x/(1+x)] = (-1)^(n-k) (n!/k!) C(n,k)", rows_of(inv),
                           generate(N + 1, triangle_width, [](std::size_t n, std::size_t k) {
                             const Scalar v = fact(n) / fact(k) * choose(n, k);
                             return (n - k) % 2 ? -v : v;
                           }));
    c.passed = c.passed && inv == ERArray(E("1/(1+x)", N), E("x/(1+x)", N));
    return c;
  }));
  r.append(production_checks("[1/(1-x), x/(1-x)]", laguerre,
                             {{"1", "1"}, {"1", "3", "1"}, {"0", "4", "5", "1"}, {"0", "0", "9", "7", "1"},
                              {"0", "0", "0", "16", "9", "1"}, {"0", "0", "0", "0", "25", "11", "1"}},
                             tridiagonal(N, [](std::size_t n) { return I(static_cast<long>(2 * n + 1)); },
                                         [](std::size_t n) { return I(static_cast<long>(n * n)); })));

  const ERArray charlier = array_of(NamedPair::charlier);
  r.checks.push_back(compare_rows("[e^x, ln(1/(1-x))]: rows 0..5 match displayed array", rows_of(charlier),
                                  table({{"1"}, {"1", "1"}, {"1", "3", "1"}, {"1", "8", "6", "1"},
                                         {"1", "24", "29", "10", "1"}, {"1", "89", "145", "75", "15", "1"}})));
  r.checks.push_back(guarded("[e^x, ln(1/(1-x))] = [e^x, x] * [1, ln(1/(1-x))]", [&] {
    const ERArray prod = er_mul(binom, ERArray(E("1", N), E("log(1/(1-x))", N)));
    return compare_rows("[e^x, ln(1/(1-x))] = [e^x, x] * [1, ln(1/(1-x))]", rows_of(prod), rows_of(charlier).rows);
  }));
  const ERArray charlier_inv = er_inverse(charlier);
  r.checks.push_back(guarded("[e^x, ln(1/(1-x))]: inverse is [e^{-(1-e^{-x})}, 1-e^{-x}]", [&] {
    return compare_rows("[e^x, ln(1/(1-x))]: inverse is [e^{-(1-e^{-x})}, 1-e^{-x}]", rows_of(charlier_inv),
                        rows_of(ERArray(E("exp(-(1-exp(-x)))", N), E("1-exp(-x)", N))).rows);
  }));
  r.checks.push_back(guarded("[e^x, ln(1/(1-x))]^{-1}: c(x) = x-1, r(x) = 1-x", [&] {
    const auto [c, rr] = production_series(charlier_inv);
    return Check{"[e^x, ln(1/(1-x))]^{-1}: c(x) = x-1, r(x) = 1-x", c == E("x-1", N - 1) && rr == E("1-x", N - 1),
                 "-1 + x ; 1 - x", c.to_string() + " ; " + rr.to_string()};
  }));
  r.append(production_checks("[e^x, ln(1/(1-x))]^{-1}", charlier_inv,
                             {{"-1", "1"}, {"1", "-2", "1"}, {"0", "2", "-3", "1"}, {"0", "0", "3", "-4", "1"},
                              {"0", "0", "0", "4", "-5", "1"}, {"0", "0", "0", "0", "5", "-6", "1"}},
                             tridiagonal(N, [](std::size_t n) { return I(-static_cast<long>(n + 1)); },
                                         [](std::size_t n) { return I(static_cast<long>(n)); })));
  return r;
}

Report verify_all(std::size_t order) {
  Report r = verify_examples(order);
  r.append(verify_thm1(order));
  r.append(verify_thm2(order));
  return r;
}

}  // namespace eriordan::verify
