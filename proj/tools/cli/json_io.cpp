#include "json_io.hpp"

#include <regex>
#include <sstream>

namespace latext::cli {
namespace {

const std::regex kRational(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
const std::regex kDecimal(R"(^([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?$)");

bool is_float_entry(const Json& e) { return e.is_number_float(); }

void check_matrix_shape(const Json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) fail_input(std::string(what) + " must be a nonempty array");
  for (const auto& r : rows)
    if (!r.is_array() || r.empty()) fail_input(std::string(what) + " entries must be nonempty arrays");
}

// true for binary64 entries, false for exact; mixing is rejected
bool detect_kind(const Json& rows) {
  bool any_float = false, any_exact = false;
  for (const auto& r : rows)
    for (const auto& e : r) (is_float_entry(e) ? any_float : any_exact) = true;
  if (any_float && any_exact) fail_input("matrix mixes exact and float entries");
  return any_float;
}

double parse_real_entry(const Json& e) {
  if (!e.is_number_float()) fail_input("expected a float entry");
  return e.get<double>();
}

Integer parse_integer(const Json& e) {
  if (e.is_number_integer()) {
    if (e.is_number_unsigned()) return Integer(std::to_string(e.get<std::uint64_t>()), 10);
    return Integer(std::to_string(e.get<std::int64_t>()), 10);
  }
  if (e.is_string()) {
    Rational r = parse_rational(e.get<std::string>());
    if (r.get_den() != 1) fail_input("expected an integer, got " + e.get<std::string>());
    return r.get_num();
  }
  fail_input("expected an integer entry");
}

Rational parse_rational_json(const Json& e) {
  if (e.is_number_integer()) return Rational(parse_integer(e));
  if (e.is_string()) return parse_rational(e.get<std::string>());
  fail_input("expected an integer or \"p/q\" string");
}

template <class T, class Parse>
Matrix<T> build_columns(const Json& columns, Parse parse) {
  std::vector<Vec<T>> cols;
  for (const auto& c : columns) {
    Vec<T> v;
    for (const auto& e : c) v.push_back(parse(e));
    cols.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(cols);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!std::regex_match(text, kRational)) fail_input("not a rational: \"" + text + "\"");
  std::string t = text.front() == '+' ? text.substr(1) : text;
  auto slash = t.find('/');
  if (slash != std::string::npos && Integer(t.substr(slash + 1), 10) == 0)
    fail_input("zero denominator: \"" + text + "\"");
  Rational r(t, 10);
  r.canonicalize();
  return r;
}

Rational parse_decimal(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text);
  std::smatch m;
  if (!std::regex_match(text, m, kDecimal) || (m[2].length() == 0 && m[3].length() == 0))
    fail_input("not a decimal number: \"" + text + "\"");
  std::string digits = m[2].str() + m[3].str();
  Rational r(Integer(digits.empty() ? "0" : digits, 10));
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  exponent -= static_cast<long>(m[3].length());
  if (exponent < -4000 || exponent > 4000) fail_input("decimal exponent out of range");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) {
    r *= p;
  } else {
    r /= p;
  }
  r.canonicalize();
  return m[1] == "-" ? Rational(-r) : r;
}

QuadScalar parse_exact_entry(const Json& e) {
  if (e.is_number_integer() || e.is_string()) return QuadScalar(parse_rational_json(e));
  if (e.is_object()) {
    for (const auto& [k, _] : e.items())
      if (k != "a" && k != "b" && k != "d") fail_input("unknown quadratic scalar field \"" + k + "\"");
    Rational a = e.contains("a") ? parse_rational_json(e.at("a")) : Rational(0);
    Rational b = e.contains("b") ? parse_rational_json(e.at("b")) : Rational(0);
    if (!e.contains("d")) fail_input("quadratic scalar needs \"d\"");
    Integer d = parse_integer(e.at("d"));
    return QuadScalar(a, b, d);
  }
  fail_input("unsupported matrix entry " + e.dump());
}

AnyMatrix parse_columns(const Json& columns, std::optional<std::size_t> ambient_dim) {
  check_matrix_shape(columns, "columns");
  for (const auto& c : columns)
    if (ambient_dim && c.size() != *ambient_dim) fail_input("column length differs from ambient_dim");
  if (detect_kind(columns)) return build_columns<double>(columns, parse_real_entry);
  return build_columns<QuadScalar>(columns, parse_exact_entry);
}

AnyMatrix parse_rows(const Json& rows) {
  AnyMatrix m = parse_columns(rows, std::nullopt);
  return std::visit([](const auto& x) -> AnyMatrix { return x.transpose(); }, m);
}

IntMatrix parse_integer_columns(const Json& columns, std::optional<std::size_t> ambient_dim) {
  check_matrix_shape(columns, "columns");
  for (const auto& c : columns)
    if (ambient_dim && c.size() != *ambient_dim) fail_input("column length differs from ambient_dim");
  return build_columns<Integer>(columns, parse_integer);
}

Vec<QuadScalar> parse_exact_vector(const Json& v) {
  if (!v.is_array() || v.empty()) fail_input("expected a nonempty vector");
  Vec<QuadScalar> out;
  for (const auto& e : v) {
    if (is_float_entry(e)) fail_input("vector mixes exact and float entries");
    out.push_back(parse_exact_entry(e));
  }
  return out;
}

Vec<double> parse_real_vector(const Json& v) {
  if (!v.is_array() || v.empty()) fail_input("expected a nonempty vector");
  Vec<double> out;
  for (const auto& e : v) {
    if (e.is_number_float()) {
      out.push_back(e.get<double>());
    } else if (e.is_number_integer()) {
      out.push_back(e.get<double>());
    } else {
      fail_input("expected numeric vector entries");
    }
  }
  return out;
}

LatticeDoc parse_lattice(const Json& doc) {
  if (!doc.is_object()) fail_input("lattice document must be an object");
  LatticeDoc out;
  if (doc.contains("gram")) {
    if (doc.contains("columns")) fail_input("give either \"gram\" or \"columns\", not both");
    out.is_gram = true;
    out.matrix = parse_rows(doc.at("gram"));
    std::visit([](const auto& g) {
      if (g.rows() != g.cols()) fail_input("Gram matrix must be square");
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (compare(g(i, j), g(j, i), 0.0) != 0) fail_input("Gram matrix must be symmetric");
    }, out.matrix);
    return out;
  }
  if (!doc.contains("columns")) fail_input("lattice needs \"columns\" or \"gram\"");
  std::optional<std::size_t> n;
  if (doc.contains("ambient_dim")) {
    const Json& a = doc.at("ambient_dim");
    if (!a.is_number_unsigned() || a.get<std::size_t>() == 0)
      fail_input("ambient_dim must be a positive integer");
    n = a.get<std::size_t>();
  }
  out.matrix = parse_columns(doc.at("columns"), n);
  return out;
}

Json lattice_json(const LatticeDoc& doc) {
  return std::visit([&](const auto& m) {
    Json out = Json::object();
    if (doc.is_gram) {
      out["gram"] = rows_json(m);
    } else {
      out["ambient_dim"] = m.rows();
      out["columns"] = columns_json(m);
    }
    return out;
  }, doc.matrix);
}

Json scalar_json(const Rational& x) { return x.get_str(); }

Json scalar_json(const QuadScalar& x) {
  if (x.is_rational()) return x.rational_part().get_str();
  Json out = Json::object();
  out["a"] = x.rational_part().get_str();
  out["b"] = x.radical_part().get_str();
  out["d"] = x.radicand();
  return out;
}

Json scalar_json(double x) { return x; }

Json entry_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json entry_json(const QuadScalar& x) {
  if (x.is_rational() && x.rational_part().get_den() == 1) return entry_json(x.rational_part().get_num());
  return scalar_json(x);
}

Json entry_json(double x) { return x; }

Json facts_json(const std::vector<Fact>& facts) {
  Json out = Json::array();
  for (const auto& f : facts) {
    Json j = Json::object();
    j["name"] = f.name;
    j["value"] = f.value;
    if (!f.exact.empty()) j["exact"] = f.exact;
    if (f.holds.has_value()) j["holds"] = *f.holds;
    out.push_back(std::move(j));
  }
  return out;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  if (!doc.is_object()) {
    out << doc.dump() << '\n';
    return out.str();
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "facts" && value.is_array()) {
      out << "facts:\n";
      for (const auto& f : value) {
        out << "  " << f.value("name", "") << " = " << f.at("value").dump();
        if (f.contains("exact")) out << " (" << f.at("exact").get<std::string>() << ")";
        if (f.contains("holds")) out << (f.at("holds").get<bool>() ? " ok" : " FAILED");
        out << '\n';
      }
      continue;
    }
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace latext::cli
