#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eriordan/poly.hpp"
#include "eriordan/rational.hpp"
#include "eriordan/series.hpp"

namespace eriordan {

/// Row n holds entries 0..n.
struct IntTriangle {
  std::vector<std::vector<Integer>> rows;

  friend bool operator==(const IntTriangle&, const IntTriangle&) = default;
};

/// S(n,k) = (1/k!) sum_j (-1)^{k-j} C(k,j) j^n.
Integer stirling2(long n, long k);
/// A(n,k) = sum_{j=0..k} (-1)^j (k-j)^n C(n+1, j), with 0^0 = 1.
Integer eulerian(long n, long k);

IntTriangle stirling2_triangle(std::size_t nmax);
IntTriangle eulerian_triangle(std::size_t nmax);

/// Touchard polynomial e_n(z) = sum_k S(n,k) z^k.
PolyZ bell_poly(std::size_t n);
/// EU_n(z) = sum_k A(n,k) z^k.
PolyZ eulerian_poly(std::size_t n);

/// e^{c x} to the given order.
Series exp_series(const Scalar& c, std::size_t order);

enum class NamedPair { thm1, thm2, stirling2, binomial, lah_like, sets_of_lists, laguerre, charlier, thm2_z1 };

std::optional<NamedPair> named_pair_from_string(std::string_view name);
std::string to_string(NamedPair p);
const std::vector<NamedPair>& all_named_pairs();

struct SeriesPair {
  Series g;
  Series f;
};

/// The defining (g, f) of every array the library knows by name, built from
/// series primitives (not from the expression parser).
SeriesPair named_pair(NamedPair name, std::size_t order);
/// Throws math_error("unknown named pair ...") for an unrecognized name.
SeriesPair named_pair(std::string_view name, std::size_t order);

}  // namespace eriordan
