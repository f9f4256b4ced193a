#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eriordan/orthopoly.hpp"
#include "eriordan/riordan.hpp"
#include "eriordan/scalar.hpp"
#include "eriordan/sequences.hpp"

namespace eriordan {

enum class Format { json, plain, latex, bfile };

std::optional<Format> format_from_string(std::string_view s);

/// Ragged rows of Scalars: the common shape of triangles and production
/// matrices on the wire.
struct Rows {
  std::size_t order = 0;
  std::vector<std::vector<Scalar>> rows;

  friend bool operator==(const Rows&, const Rows&) = default;
};

/// Row n, entries 0..n.
Rows rows_of(const ERArray& a);
/// Row n, entries 0..n of a lower-triangular matrix.
Rows lower_rows_of(const Matrix& m);
/// Rows 0..N-1, entries 0..i+1.
Rows rows_of(const ProductionMatrix& p);
Rows rows_of(const IntTriangle& t);

/// Replaces every entry by its value at z = v. Throws math_error naming the
/// first entry with a pole, e.g. "pole at z = 1 (entry 2,1)".
Rows specialize(const Rows& r, const Rational& v);
std::vector<Scalar> specialize(const std::vector<Scalar>& s, const Rational& v);

/// LaTeX for one Scalar, e.g. "\frac{1}{2} z^{2} - 1".
std::string to_latex(const Scalar& s);

/// {"order":N,"rows":[["1"],["0","1"],...]}
std::string rows_to_json(const Rows& r);
Rows rows_from_json(std::string_view text);

/// json: {"order":..,"rows":..}; plain: one row per line, entries joined by
/// ", "; latex: pmatrix; bfile: "n k value" triples.
std::string emit_rows(const Rows& r, Format f);

/// json: ["1","z"]; plain: one value per line; latex: comma list; bfile: "n value".
std::string emit_sequence(const std::vector<Scalar>& s, Format f);

/// {"a0":"1","alpha":[...],"beta":[...]}
std::string jacobi_to_json(const JacobiParams& j);
JacobiParams jacobi_from_json(std::string_view text);
std::string emit_jacobi(const JacobiParams& j, Format f);

/// Reads a sequence from a JSON list of Scalar strings or from b-file lines
/// "n value" ('#' comments and blank lines skipped; indices must be
/// consecutive).
std::vector<Scalar> read_sequence(std::string_view text);

}  // namespace eriordan
