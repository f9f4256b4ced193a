#include "eriordan/expr.hpp"

#include <algorithm>
#include <cctype>

#include "eriordan/error.hpp"

namespace eriordan::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Node parse_all() {
    Node n = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw parse_error(pos_, "end of input");
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw parse_error(pos_, std::string("'") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  Integer read_uint() {
    if (!peek_digit()) throw parse_error(pos_, "unsigned integer");
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  static Node binary(Kind k, Node lhs, Node rhs) {
    Node n;
    n.kind = k;
    n.span = {lhs.span.begin, rhs.span.end};
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  Node parse_expr() {
    Node lhs = parse_term(false);
    for (;;) {
      if (accept('+')) lhs = binary(Kind::add, std::move(lhs), parse_term(false));
      else if (accept('-')) lhs = binary(Kind::sub, std::move(lhs), parse_term(false));
      else return lhs;
    }
  }

  Node parse_term(bool after_slash) {
    Node lhs = parse_factor(after_slash);
    for (;;) {
      if (accept('*')) lhs = binary(Kind::mul, std::move(lhs), parse_factor(false));
      else if (accept('/')) lhs = binary(Kind::div, std::move(lhs), parse_factor(true));
      else return lhs;
    }
  }

  Node parse_factor(bool after_slash) {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('-')) {
      Node n;
      n.kind = Kind::neg;
      n.children.push_back(parse_factor(after_slash));
      n.span = {start, n.children[0].span.end};
      return n;
    }
    Node base = parse_atom(after_slash);
    if (!accept('^')) return base;
    Node n;
    n.kind = Kind::pow;
    n.exponent = parse_sint();
    n.span = {base.span.begin, pos_};
    n.children.push_back(std::move(base));
    return n;
  }

  long parse_sint() {
    const bool paren = accept('(');
    const bool negative = accept('-');
    const std::size_t at = pos_;
    const Integer mag = read_uint();
    if (!mag.fits_slong_p()) throw parse_error(at, "exponent of machine size");
    if (paren) expect(')');
    const long v = mag.get_si();
    return negative ? -v : v;
  }

  Node parse_atom(bool after_slash) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) throw parse_error(pos_, "operand");
    Node n;
    if (peek_digit()) {
      Integer num = read_uint();
      Integer den = 1;
      // "p/q" is one literal unless we are the right operand of a division.
      if (!after_slash && peek('/')) {
        const std::size_t save = pos_;
        ++pos_;
        if (peek_digit()) den = read_uint();
        else pos_ = save;
      }
      if (den == 0) throw parse_error(start, "nonzero denominator");
      n.kind = Kind::num;
      n.value = Rational(num, den);
      n.span = {start, pos_};
      return n;
    }
    if (accept('(')) {
      n = parse_expr();
      expect(')');
      n.span = {start, pos_};
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string_view word = src_.substr(pos_, end - pos_);
      if (word == "x" || word == "z") {
        pos_ = end;
        n.kind = word == "x" ? Kind::var_x : Kind::var_z;
        n.span = {start, pos_};
        return n;
      }
      if (word == "exp" || word == "log" || word == "ln") {
        pos_ = end;
        expect('(');
        n.kind = word == "exp" ? Kind::exp : Kind::log;
        n.children.push_back(parse_expr());
        expect(')');
        n.span = {start, pos_};
        return n;
      }
      throw parse_error(start, "x, z, exp, log or ln");
    }
    throw parse_error(start, "operand");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::neg: return 3;
    case Kind::pow: return 4;
    case Kind::num: return n.value.is_integer() ? 5 : 2;
    default: return 5;
  }
}

std::string wrap_if(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

class SpannedError : public math_error {
 public:
  using math_error::math_error;
};

std::string describe(const Node& n, std::string_view source) {
  std::string text = n.span.end <= source.size() && n.span.begin < n.span.end
                         ? std::string(source.substr(n.span.begin, n.span.end - n.span.begin))
                         : render(n);
  return "'" + text + "' [" + std::to_string(n.span.begin) + "," + std::to_string(n.span.end) + ")";
}

Series align(const Series& s, std::size_t order) { return s.order() > order ? s.truncated(order) : s; }

Series eval_rec(const Node& n, std::size_t order, std::string_view source) {
  try {
    switch (n.kind) {
      case Kind::num: return Series::constant(n.value, order);
      case Kind::var_x: return Series::x(order);
      case Kind::var_z: return Series::constant(Scalar::z(), order);
      case Kind::add:
      case Kind::sub:
      case Kind::mul:
      case Kind::div: {
        Series a = eval_rec(n.children[0], order, source);
        Series b = eval_rec(n.children[1], order, source);
        const std::size_t o = std::min(a.order(), b.order());
        a = align(a, o);
        b = align(b, o);
        if (n.kind == Kind::add) return a + b;
        if (n.kind == Kind::sub) return a - b;
        if (n.kind == Kind::mul) return a * b;
        return series_div(a, b);
      }
      case Kind::pow: return series_pow(eval_rec(n.children[0], order, source), n.exponent);
      case Kind::neg: return -eval_rec(n.children[0], order, source);
      case Kind::exp: return series_exp(eval_rec(n.children[0], order, source));
      case Kind::log: return series_log(eval_rec(n.children[0], order, source));
    }
  } catch (const SpannedError&) {
    throw;
  } catch (const math_error& e) {
    throw SpannedError(std::string(e.what()) + " in " + describe(n, source));
  }
  throw math_error("unknown expression node");
}

}  // namespace

Node parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Node& n) {
  switch (n.kind) {
    case Kind::num: return n.value.to_string();
    case Kind::var_x: return "x";
    case Kind::var_z: return "z";
    case Kind::exp: return "exp(" + render(n.children[0]) + ")";
    case Kind::log: return "log(" + render(n.children[0]) + ")";
    case Kind::neg: {
      const Node& c = n.children[0];
      return "-" + wrap_if(precedence(c) < 3, render(c));
    }
    case Kind::pow: {
      const Node& c = n.children[0];
      const std::string e = n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent);
      return wrap_if(precedence(c) < 5, render(c)) + "^" + e;
    }
    default: break;
  }
  const Node& l = n.children[0];
  const Node& r = n.children[1];
  const int p = precedence(n);
  const char* op = n.kind == Kind::add ? " + " : n.kind == Kind::sub ? " - " : n.kind == Kind::mul ? "*" : "/";
  // Binaries parse left-associatively, so an equal-precedence right operand needs parentheses.
  const bool right_paren = precedence(r) <= p;
  const std::string rhs = wrap_if(right_paren, render(r));
  const std::string lhs = render(l);
  // "...2" followed by "/3" would be read back as the literal 2/3.
  const bool left_paren = precedence(l) < p || (n.kind == Kind::div && std::isdigit(static_cast<unsigned char>(lhs.back())) &&
                                                std::isdigit(static_cast<unsigned char>(rhs.front())));
  return wrap_if(left_paren, lhs) + op + rhs;
}

Series eval_series(const Node& node, std::size_t order, std::string_view source) {
  if (order < 1) throw math_error("series order must be at least 1");
  std::size_t working = order;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Series s = eval_rec(node, working, source);
    if (s.order() >= order) return s.truncated(order);
    // Valuation cancellation in a division cost precision; retry higher.
    working += order - s.order();
  }
  throw math_error("could not reach requested order for " + describe(node, source));
}

Scalar eval_scalar(const Node& n) {
  switch (n.kind) {
    case Kind::num: return n.value;
    case Kind::var_z: return Scalar::z();
    case Kind::var_x: throw math_error("x is not allowed in a scalar expression");
    case Kind::add: return eval_scalar(n.children[0]) + eval_scalar(n.children[1]);
    case Kind::sub: return eval_scalar(n.children[0]) - eval_scalar(n.children[1]);
    case Kind::mul: return eval_scalar(n.children[0]) * eval_scalar(n.children[1]);
    case Kind::div: return eval_scalar(n.children[0]) / eval_scalar(n.children[1]);
    case Kind::pow: return eval_scalar(n.children[0]).pow(n.exponent);
    case Kind::neg: return -eval_scalar(n.children[0]);
    case Kind::exp:
      if (eval_scalar(n.children[0]).is_zero()) return 1;
      throw math_error("exp of a nonzero scalar is not in Q(z)");
    case Kind::log:
      if (eval_scalar(n.children[0]).is_one()) return 0;
      throw math_error("log of a scalar other than 1 is not in Q(z)");
  }
  throw math_error("unknown expression node");
}

Series series_from_text(std::string_view text, std::size_t order) { return eval_series(parse(text), order, text); }

Scalar scalar_from_text(std::string_view text) { return eval_scalar(parse(text)); }

}  // namespace eriordan::expr
