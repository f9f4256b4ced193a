#include "eriordan/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "eriordan/error.hpp"
#include "eriordan/expr.hpp"
#include "eriordan/hankel.hpp"
#include "eriordan/orthopoly.hpp"
#include "eriordan/riordan.hpp"
#include "eriordan/sequences.hpp"
#include "eriordan/verify.hpp"

namespace eriordan::cli {

namespace {

/// Raised for a failed verification or disagreement; maps to exit code 1.
struct VerificationFailed {};

struct PairArgs {
  std::string g;
  std::string f;
  std::string name;

  bool given() const { return !name.empty() || !g.empty() || !f.empty(); }
};

void add_pair_options(CLI::App* sub, PairArgs& p, const std::string& suffix = "") {
  sub->add_option("--g" + suffix, p.g, "Expression for g(x)");
  sub->add_option("--f" + suffix, p.f, "Expression for f(x)");
  sub->add_option("--name" + suffix, p.name, "Named pair (thm1, thm2, stirling2, binomial, lah_like, sets_of_lists, "
                                               "laguerre, charlier, thm2_z1)");
}

SeriesPair resolve_pair(const PairArgs& p, std::size_t order) {
  if (!p.name.empty()) {
    if (!p.g.empty() || !p.f.empty()) throw math_error("give either --name or --g/--f, not both");
    return named_pair(p.name, order);
  }
  if (p.g.empty() || p.f.empty()) throw math_error("a pair needs both --g and --f (or --name)");
  return {expr::series_from_text(p.g, order), expr::series_from_text(p.f, order)};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw math_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Scalar> read_values(const std::string& in, const std::vector<std::string>& values) {
  if (!in.empty() && !values.empty()) throw math_error("give either --in or --values, not both");
  if (!in.empty()) return read_sequence(read_input(in));
  std::vector<Scalar> out;
  for (const auto& v : values) out.push_back(expr::scalar_from_text(v));
  return out;
}

class Driver {
 public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Rows& r) const { out_ << emit_rows(cfg.z_value ? specialize(r, *cfg.z_value) : r, cfg.format); }

  void emit(const std::vector<Scalar>& s) const {
    out_ << emit_sequence(cfg.z_value ? specialize(s, *cfg.z_value) : s, cfg.format);
  }

  void emit(JacobiParams j) const {
    if (cfg.z_value) {
      j.a0 = j.a0.eval_z(*cfg.z_value);
      j.alpha = specialize(j.alpha, *cfg.z_value);
      j.beta = specialize(j.beta, *cfg.z_value);
    }
    out_ << emit_jacobi(j, cfg.format);
  }

  ERArray array(const PairArgs& p) const {
    const auto [g, f] = resolve_pair(p, cfg.order);
    return ERArray(g, f);
  }

  void cmd_array(const PairArgs& p) const { emit(rows_of(array(p))); }
  void cmd_inverse(const PairArgs& p) const { emit(rows_of(er_inverse(array(p)))); }
  void cmd_multiply(const PairArgs& a, const PairArgs& b) const { emit(rows_of(er_mul(array(a), array(b)))); }

  void cmd_prodmat(const PairArgs& p, const std::string& method) const {
    const ERArray a = array(p);
    if (method == "direct") {
      emit(rows_of(production_direct(a)));
      return;
    }
    const ProductionMatrix pm = production_from_pair(a);
    emit(rows_of(pm));
    if (method == "both") {
      const bool agree = pm.agrees_with(production_direct(a));
      out_ << (agree ? "AGREE" : "DISAGREE") << " rows 0.." << cfg.order - 1 << '\n';
      if (!agree) throw VerificationFailed{};
    }
  }

  void cmd_jacobi(const PairArgs& p, const std::string& in, const std::vector<std::string>& values) const {
    if (!in.empty() || !values.empty()) {
      const JacobiRecovery rec = jacobi_from_moments(MomentSequence{read_values(in, values)});
      emit(rec.params);
      if (rec.terminated) err_ << "note: beta_" << rec.depth << " = 0, recurrence terminates at depth " << rec.depth << '\n';
      return;
    }
    emit(extract_jacobi(production_from_pair(array(p))));
  }

  void cmd_moments(const PairArgs& p, const std::string& in, std::size_t count) const {
    if (!in.empty()) {
      const JacobiParams j = jacobi_from_json(read_input(in));
      emit(moments_from_jacobi(j, count ? count : 2 * j.depth()).terms);
      return;
    }
    std::vector<Scalar> col = array(p).entries().column(0);
    if (count && count < col.size()) col.resize(count);
    emit(col);
  }

  void cmd_hankel(const PairArgs& p, const std::string& in, const std::vector<std::string>& values,
                  std::optional<std::size_t> nmax) const {
    std::vector<Scalar> seq = p.given() ? array(p).entries().column(0) : read_values(in, values);
    if (seq.empty()) throw math_error("empty sequence");
    const std::size_t n = nmax ? *nmax : (seq.size() - 1) / 2;
    emit(hankel_transform(MomentSequence{std::move(seq)}, n));
  }

  void cmd_binom(const std::string& in, const std::vector<std::string>& values) const {
    emit(binomial_transform(MomentSequence{read_values(in, values)}).terms);
  }

  void cmd_triangle(const std::string& kind) const {
    emit(rows_of(kind == "stirling2" ? stirling2_triangle(cfg.order) : eulerian_triangle(cfg.order)));
  }

  void cmd_poly(const std::string& kind, std::size_t n) const {
    emit(std::vector<Scalar>{Scalar(kind == "bell" ? bell_poly(n) : eulerian_poly(n))});
  }

  void cmd_verify(const std::string& target) const {
    verify::Report report = target == "thm1"       ? verify::verify_thm1(cfg.order)
                            : target == "thm2"     ? verify::verify_thm2(cfg.order)
                            : target == "examples" ? verify::verify_examples(cfg.order)
                                                   : verify::verify_all(cfg.order);
    report.print(out_);
    if (!report.all_passed()) throw VerificationFailed{};
  }

  RunConfig cfg;

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential Riordan arrays, production matrices and Hankel transforms", "eriordan"};
  app.require_subcommand(1);
  app.fallthrough();

  Driver driver(out, err);
  std::string format = "plain";
  std::string z_text;
  app.add_option("--order", driver.cfg.order, "Truncation order N")->check(CLI::Range(2, 64))->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "plain", "latex", "bfile"}))
      ->capture_default_str();
  app.add_option("--z", z_text, "Specialize results at z = P/Q");

  PairArgs left, right;
  std::string in, method = "pair", target, kind;
  std::vector<std::string> values;
  std::optional<std::size_t> nmax;
  std::size_t count = 0, degree = 0;

  auto* array = app.add_subcommand("array", "Build the array [g, f]");
  add_pair_options(array, left);
  auto* inverse = app.add_subcommand("inverse", "Inverse array [1/(g o fbar), fbar]");
  add_pair_options(inverse, left);
  auto* multiply = app.add_subcommand("multiply", "Product [g, f] * [g2, f2]");
  add_pair_options(multiply, left);
  add_pair_options(multiply, right, "2");
  auto* prodmat = app.add_subcommand("prodmat", "Production matrix, rows 0..N-1");
  add_pair_options(prodmat, left);
  prodmat->add_option("--method", method, "pair, direct or both")
      ->check(CLI::IsMember({"pair", "direct", "both"}))
      ->capture_default_str();
  auto* jacobi = app.add_subcommand("jacobi", "Recurrence coefficients from a pair or from moments");
  add_pair_options(jacobi, left);
  jacobi->add_option("--in", in, "Moment sequence file (b-file or JSON list)");
  jacobi->add_option("--values", values, "Inline moments");
  auto* moments = app.add_subcommand("moments", "Moments from a pair (first column) or a Jacobi JSON file");
  add_pair_options(moments, left);
  moments->add_option("--in", in, "Jacobi parameter JSON");
  moments->add_option("--count", count, "Number of moments");
  auto* hankel = app.add_subcommand("hankel", "Hankel transform");
  add_pair_options(hankel, left);
  hankel->add_option("--in", in, "Sequence file (b-file or JSON list)");
  hankel->add_option("--values", values, "Inline sequence terms");
  hankel->add_option("--nmax", nmax, "Largest n");
  auto* binom = app.add_subcommand("binom", "Binomial transform");
  binom->add_option("--in", in, "Sequence file (b-file or JSON list)");
  binom->add_option("--values", values, "Inline sequence terms");
  auto* triangle = app.add_subcommand("triangle", "Stirling or Eulerian triangle, rows 0..N");
  triangle->add_option("kind", kind)->required()->check(CLI::IsMember({"stirling2", "eulerian"}));
  auto* poly = app.add_subcommand("poly", "Touchard or Eulerian polynomial");
  poly->add_option("kind", kind)->required()->check(CLI::IsMember({"bell", "eulerian"}));
  poly->add_option("--n", degree, "Index n")->required();
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("target", target)->required()->check(CLI::IsMember({"thm1", "thm2", "examples", "all"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    driver.cfg.format = *format_from_string(format);
    if (!z_text.empty()) driver.cfg.z_value = Rational::parse(z_text);

    if (array->parsed()) driver.cmd_array(left);
    else if (inverse->parsed()) driver.cmd_inverse(left);
    else if (multiply->parsed()) driver.cmd_multiply(left, right);
    else if (prodmat->parsed()) driver.cmd_prodmat(left, method);
    else if (jacobi->parsed()) driver.cmd_jacobi(left, in, values);
    else if (moments->parsed()) driver.cmd_moments(left, in, count);
    else if (hankel->parsed()) driver.cmd_hankel(left, in, values, nmax);
    else if (binom->parsed()) driver.cmd_binom(in, values);
    else if (triangle->parsed()) driver.cmd_triangle(kind);
    else if (poly->parsed()) driver.cmd_poly(kind, degree);
    else if (verify->parsed()) driver.cmd_verify(target);
  } catch (const VerificationFailed&) {
    return kVerifyFailed;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const math_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace eriordan::cli
