#include <doctest.h>

#include <random>

#include "eriordan/error.hpp"
#include "eriordan/riordan.hpp"
#include "eriordan/serialize.hpp"
#include "oracles.hpp"

using namespace eriordan;
using oracle::P;
using oracle::S;

TEST_CASE("plain, latex and bfile emitters") {
  const Rows r = rows_of(ERArray(S("exp(x)", 2), S("x", 2)));
  CHECK(emit_rows(r, Format::plain) == "1\n1, 1\n1, 2, 1\n");
  CHECK(emit_rows(r, Format::bfile) == "0 0 1\n1 0 1\n1 1 1\n2 0 1\n2 1 2\n2 2 1\n");
  const std::string latex = emit_rows(r, Format::latex);
  CHECK(latex.find("\\begin{pmatrix}") != std::string::npos);
  CHECK(to_latex(P("1/(z-1)")) == "\\frac{1}{z - 1}");
  CHECK(emit_sequence({1, P("z")}, Format::plain) == "1\nz\n");
}

TEST_CASE("json emitters") {
  const Rows r = rows_of(ERArray(S("exp(z*x)", 2), S("x", 2)));
  CHECK(rows_to_json(r) == R"({"order":2,"rows":[["1"],["z","1"],["z^2","2*z","1"]]})");
  CHECK(rows_from_json(rows_to_json(r)) == r);
  CHECK_THROWS_AS(rows_from_json("{"), math_error);
}

TEST_CASE("specialize") {
  const Rows r = rows_of(ERArray(S("1/(1-z*x)", 3), S("x", 3)));
  CHECK(specialize(r, 2).rows[2][0] == Scalar(8));
  const Rows bad{1, {{P("1/(z-1)")}}};
  CHECK_THROWS_WITH(specialize(bad, 1), "pole at z = 1 (entry 0,0)");
}

TEST_CASE("production matrix rows stop at N-1") {
  const Rows r = rows_of(production_from_pair(ERArray(S("exp(x)", 4), S("x", 4))));
  CHECK(r.rows.size() == 4);
  CHECK(r.rows[3].size() == 5);
}

TEST_CASE("read_sequence") {
  CHECK(read_sequence(R"(["1","z",3])") == std::vector<Scalar>{1, P("z"), 3});
  CHECK(read_sequence("# comment\n0 1\n1 1\n2 2\n3 5\n") == std::vector<Scalar>{1, 1, 2, 5});
  CHECK_THROWS_AS(read_sequence("0 1\n2 2\n"), math_error);
  CHECK_THROWS_AS(read_sequence("a b\n"), math_error);
}

TEST_CASE("property: JSON round trip of rows and Jacobi parameters") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const ERArray a(oracle::random_series(rng, 5, false, true), oracle::random_series(rng, 5, true, true));
    const Rows r = rows_of(er_inverse(a));
    CHECK(rows_from_json(rows_to_json(r)) == r);
  }
  JacobiParams j;
  j.a0 = P("1/2");
  j.alpha = {P("z"), P("(z+1)/(z-3)")};
  j.beta = {P("-2*z^2")};
  CHECK(jacobi_from_json(jacobi_to_json(j)) == j);
}
