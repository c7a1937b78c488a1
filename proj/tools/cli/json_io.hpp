#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "latext/lattice.hpp"

namespace latext::cli {

using Json = nlohmann::ordered_json;

/// An input matrix is either entirely exact or entirely binary64.
using AnyMatrix = std::variant<QuadMatrix, RealMatrix>;

/// A lattice document: {"ambient_dim": n, "columns": [...]} or {"gram": [...]}.
struct LatticeDoc {
  bool is_gram = false;
  AnyMatrix matrix;  // basis (columns) or Gram matrix

  bool exact() const { return std::holds_alternative<QuadMatrix>(matrix); }
};

/// "p/q" or "p"; throws invalid input on anything else.
Rational parse_rational(const std::string& text);

/// Exact value of a decimal literal such as "0.125", "-3", "1e-2" or "2/7".
Rational parse_decimal(const std::string& text);

QuadScalar parse_exact_entry(const Json& entry);

/// Columns given as a list of column vectors.
AnyMatrix parse_columns(const Json& columns, std::optional<std::size_t> ambient_dim);
AnyMatrix parse_rows(const Json& rows);
IntMatrix parse_integer_columns(const Json& columns, std::optional<std::size_t> ambient_dim);
Vec<QuadScalar> parse_exact_vector(const Json& v);
Vec<double> parse_real_vector(const Json& v);

LatticeDoc parse_lattice(const Json& doc);
Json lattice_json(const LatticeDoc& doc);

/// Standalone scalars: rationals as "p/q" strings, irrationals as
/// {"a", "b", "d"}, binary64 as numbers.
Json scalar_json(const QuadScalar& x);
Json scalar_json(double x);
Json scalar_json(const Rational& x);

/// Matrix and vector entries: integers as numbers, otherwise as scalar_json.
Json entry_json(const QuadScalar& x);
Json entry_json(double x);
Json entry_json(const Integer& x);

template <class T>
Json vector_json(const Vec<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(entry_json(x));
  return out;
}

/// Row-major rows.
template <class T>
Json rows_json(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T>
Json columns_json(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(vector_json(m.column(j)));
  return out;
}

Json facts_json(const std::vector<Fact>& facts);

/// "key: value" lines for --format text.
std::string render_text(const Json& doc);

}  // namespace latext::cli
