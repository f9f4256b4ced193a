#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eriordan/rational.hpp"
#include "eriordan/scalar.hpp"
#include "eriordan/series.hpp"

namespace eriordan::expr {

enum class Kind { num, var_x, var_z, add, sub, mul, div, pow, neg, exp, log };

/// Half-open byte range [begin, end) of a node in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Expression tree for a closed-form generating function.
///
/// `value` is set for num, `exponent` for pow. Children: two for binary
/// nodes, one for pow/neg/exp/log, none for leaves.
struct Node {
  Kind kind = Kind::num;
  Rational value;
  long exponent = 0;
  std::vector<Node> children;
  Span span;

  /// Structural equality; spans are ignored.
  friend bool operator==(const Node& a, const Node& b) {
    return a.kind == b.kind && a.value == b.value && a.exponent == b.exponent && a.children == b.children;
  }
};

/// Parses the grammar
///
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | atom ('^' sint)?
///   atom    := rational | 'x' | 'z' | '(' expr ')' | ('exp'|'log'|'ln') '(' expr ')'
///   rational:= uint ('/' uint)?
///   sint    := '-'? uint | '(' '-'? uint ')'
///
/// A literal "p/q" is read as one rational unless it directly follows a '/'
/// operator, so "x/2/3" is (x/2)/3. Throws parse_error.
Node parse(std::string_view text);

/// Renders back to text accepted by parse(); parse(render(n)) == n.
std::string render(const Node& node);

/// Expands the expression as a truncated power series in x of the given order.
/// Errors from the series layer are rethrown as math_error naming the
/// offending sub-expression and its span.
Series eval_series(const Node& node, std::size_t order, std::string_view source = {});

/// Evaluates an x-free expression to a Scalar (used for parsing Scalar strings).
Scalar eval_scalar(const Node& node);

/// Convenience: parse + eval_series.
Series series_from_text(std::string_view text, std::size_t order);
/// Convenience: parse + eval_scalar.
Scalar scalar_from_text(std::string_view text);

}  // namespace eriordan::expr
