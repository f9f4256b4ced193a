#include "eriordan/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "eriordan/error.hpp"
#include "eriordan/expr.hpp"

namespace eriordan {

using nlohmann::json;

namespace {

json strings_of(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.to_string());
  return arr;
}

std::vector<Scalar> scalars_of(const json& arr) {
  if (!arr.is_array()) throw math_error("expected a JSON array of scalar strings");
  std::vector<Scalar> out;
  for (const auto& e : arr) {
    if (e.is_string()) out.push_back(expr::scalar_from_text(e.get<std::string>()));
    else if (e.is_number_integer()) out.emplace_back(Integer(e.dump()));
    else throw math_error("expected a scalar string, got " + e.dump());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw math_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string latex_poly(const PolyZ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool negative = c[k].sign() < 0;
    const Rational mag = negative ? -c[k] : c[k];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += latex_rational(mag);
      continue;
    }
    if (!mag.is_one()) out += latex_rational(mag) + " ";
    out += k == 1 ? std::string("z") : "z^{" + std::to_string(k) + "}";
  }
  return out;
}

}  // namespace

std::optional<Format> format_from_string(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "plain") return Format::plain;
  if (s == "latex") return Format::latex;
  if (s == "bfile") return Format::bfile;
  return std::nullopt;
}

Rows rows_of(const ERArray& a) { return lower_rows_of(a.entries()); }

Rows lower_rows_of(const Matrix& m) {
  Rows r{m.rows() - 1, {}};
  for (std::size_t n = 0; n < m.rows(); ++n) {
    r.rows.emplace_back();
    for (std::size_t k = 0; k <= n; ++k) r.rows.back().push_back(m(n, k));
  }
  return r;
}

Rows rows_of(const ProductionMatrix& p) {
  Rows r{p.order, {}};
  for (std::size_t i = 0; i < p.valid_rows(); ++i) {
    r.rows.emplace_back();
    for (std::size_t j = 0; j <= i + 1 && j <= p.order; ++j) r.rows.back().push_back(p.entries(i, j));
  }
  return r;
}

Rows rows_of(const IntTriangle& t) {
  Rows r{t.rows.empty() ? 0 : t.rows.size() - 1, {}};
  for (const auto& row : t.rows) {
    r.rows.emplace_back();
    for (const auto& v : row) r.rows.back().emplace_back(v);
  }
  return r;
}

Rows specialize(const Rows& r, const Rational& v) {
  Rows out{r.order, {}};
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    out.rows.emplace_back();
    for (std::size_t k = 0; k < r.rows[n].size(); ++k) {
      try {
        out.rows.back().emplace_back(r.rows[n][k].eval_z(v));
      } catch (const math_error& e) {
        throw math_error(std::string(e.what()) + " (entry " + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return out;
}

std::vector<Scalar> specialize(const std::vector<Scalar>& s, const Rational& v) {
  std::vector<Scalar> out;
  for (std::size_t n = 0; n < s.size(); ++n) {
    try {
      out.emplace_back(s[n].eval_z(v));
    } catch (const math_error& e) {
      throw math_error(std::string(e.what()) + " (entry " + std::to_string(n) + ")");
    }
  }
  return out;
}

std::string to_latex(const Scalar& s) {
  if (s.is_polynomial()) return latex_poly(s.num());
  return "\\frac{" + latex_poly(s.num()) + "}{" + latex_poly(s.den()) + "}";
}

std::string rows_to_json(const Rows& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(strings_of(row));
  json j;
  j["order"] = r.order;
  j["rows"] = std::move(rows);
  return j.dump();
}

Rows rows_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("order") || !j.contains("rows"))
    throw math_error("triangle JSON needs \"order\" and \"rows\"");
  Rows r;
  r.order = j.at("order").get<std::size_t>();
  for (const auto& row : j.at("rows")) r.rows.push_back(scalars_of(row));
  return r;
}

std::string emit_rows(const Rows& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: os << rows_to_json(r) << '\n'; break;
    case Format::plain:
      for (const auto& row : r.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? ", " : "") << row[k];
        os << '\n';
      }
      break;
    case Format::latex: {
      std::size_t width = 0;
      for (const auto& row : r.rows) width = std::max(width, row.size());
      os << "\\begin{pmatrix}\n";
      for (std::size_t n = 0; n < r.rows.size(); ++n) {
        for (std::size_t k = 0; k < width; ++k) {
          if (k) os << " & ";
          os << (k < r.rows[n].size() ? to_latex(r.rows[n][k]) : "0");
        }
        os << (n + 1 < r.rows.size() ? " \\\\\n" : "\n");
      }
      os << "\\end{pmatrix}\n";
      break;
    }
    case Format::bfile:
      for (std::size_t n = 0; n < r.rows.size(); ++n)
        for (std::size_t k = 0; k < r.rows[n].size(); ++k) os << n << ' ' << k << ' ' << r.rows[n][k] << '\n';
      break;
  }
  return os.str();
}

std::string emit_sequence(const std::vector<Scalar>& s, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: os << strings_of(s).dump() << '\n'; break;
    case Format::plain:
      for (const auto& v : s) os << v << '\n';
      break;
    case Format::latex:
      for (std::size_t n = 0; n < s.size(); ++n) os << (n ? ",\\ " : "") << to_latex(s[n]);
      os << '\n';
      break;
    case Format::bfile:
      for (std::size_t n = 0; n < s.size(); ++n) os << n << ' ' << s[n] << '\n';
      break;
  }
  return os.str();
}

std::string jacobi_to_json(const JacobiParams& j) {
  json out;
  out["a0"] = j.a0.to_string();
  out["alpha"] = strings_of(j.alpha);
  out["beta"] = strings_of(j.beta);
  return out.dump();
}

JacobiParams jacobi_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
    throw math_error("Jacobi JSON needs \"alpha\" and \"beta\"");
  JacobiParams p;
  p.a0 = j.contains("a0") ? scalars_of(json::array({j.at("a0")})).front() : Scalar(1);
  p.alpha = scalars_of(j.at("alpha"));
  p.beta = scalars_of(j.at("beta"));
  validate(p);
  return p;
}

std::string emit_jacobi(const JacobiParams& j, Format f) {
  if (f == Format::json) return jacobi_to_json(j) + '\n';
  std::ostringstream os;
  os << "a0: " << (f == Format::latex ? to_latex(j.a0) : j.a0.to_string()) << '\n';
  for (std::size_t n = 0; n < j.alpha.size(); ++n) {
    os << "alpha_" << n << ": " << (f == Format::latex ? to_latex(j.alpha[n]) : j.alpha[n].to_string()) << '\n';
    if (n < j.beta.size())
      os << "beta_" << n + 1 << ": " << (f == Format::latex ? to_latex(j.beta[n]) : j.beta[n].to_string()) << '\n';
  }
  return os.str();
}

std::vector<Scalar> read_sequence(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return scalars_of(parse_json(text));

  std::vector<Scalar> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long expected_index = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string index, value;
    if (!(fields >> index >> value))
      throw math_error("b-file line " + std::to_string(lineno) + ": expected \"n value\"");
    long n = 0;
    try {
      n = std::stol(index);
    } catch (const std::exception&) {
      throw math_error("b-file line " + std::to_string(lineno) + ": bad index '" + index + "'");
    }
    if (expected_index >= 0 && n != expected_index)
      throw math_error("b-file line " + std::to_string(lineno) + ": index " + std::to_string(n) + " is not consecutive");
    expected_index = n + 1;
    out.emplace_back(Rational::parse(value));
  }
  return out;
}

}  // namespace eriordan
