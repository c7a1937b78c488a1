#include <cmath>
#include <functional>
#include <map>

#include "cli.hpp"
#include "latext/extensions.hpp"
#include "latext/numfield.hpp"
#include "latext/planar.hpp"

namespace latext::cli {
namespace {

std::optional<std::size_t> ambient_dim_of(const Json& input) {
  if (!input.contains("ambient_dim")) return std::nullopt;
  const Json& a = input.at("ambient_dim");
  if (!a.is_number_unsigned() || a.get<std::size_t>() == 0)
    fail_input("ambient_dim must be a positive integer");
  return a.get<std::size_t>();
}

const Json& field(const Json& input, const char* name) {
  if (!input.is_object() || !input.contains(name))
    fail_input(std::string("input needs \"") + name + "\"");
  return input.at(name);
}

template <LatticeScalar T>
Vec<T> parse_vector(const Json& v) {
  if constexpr (is_exact_v<T>) {
    return parse_exact_vector(v);
  } else {
    return parse_real_vector(v);
  }
}

Rational exact_alpha(const Options& options) { return parse_decimal(options.alpha); }

// Calls fn(lattice) for an embedded basis, rejecting Gram-only input.
template <class Fn>
Json with_basis(const Json& input, double tol, const char* command, Fn fn) {
  LatticeDoc doc = parse_lattice(input);
  if (doc.is_gram) fail_input(std::string(command) + " needs an embedded basis, not a Gram matrix");
  return std::visit([&](const auto& basis) {
    using T = std::decay_t<decltype(basis(0, 0))>;
    return fn(Lattice<T>(basis, tol));
  }, doc.matrix);
}

// Calls fn(gram, lattice-or-null) for either kind of lattice document.
template <class Fn>
Json with_gram(const Json& input, double tol, Fn fn) {
  LatticeDoc doc = parse_lattice(input);
  return std::visit([&](const auto& m) {
    using T = std::decay_t<decltype(m(0, 0))>;
    if (doc.is_gram) return fn(m, static_cast<const Lattice<T>*>(nullptr));
    Lattice<T> lattice(m, tol);
    return fn(lattice.gram(), &lattice);
  }, doc.matrix);
}

void require_rank2(std::size_t rank, const char* command) {
  if (rank != 2) fail_input(std::string(command) + ": lattice must have rank 2");
}

template <LatticeScalar T>
Json det_json(const Lattice<T>& lattice) {
  if constexpr (is_exact_v<T>) {
    const QuadScalar& d2 = lattice.det_squared();
    if (d2.is_rational()) return scalar_json(QuadScalar::sqrt_of(d2.rational_part()));
    return lattice.det();
  } else {
    return lattice.det();
  }
}

template <LatticeScalar T>
Json report_json(const ExtensionReport<T>& r) {
  Json out = Json::object();
  out["det"] = det_json(r.result);
  out["basis"] = rows_json(r.result.basis());
  out["new_vectors"] = rows_json(r.new_vectors);
  out["facts"] = facts_json(r.facts);
  out["verified"] = r.verified();
  return out;
}

Json order_json(OrderKind kind, const Integer& order) {
  switch (kind) {
    case OrderKind::kFinite: return entry_json(order);
    case OrderKind::kInfinite: return "infinite";
    default: return "unknown";
  }
}

template <LatticeScalar T>
Json equal_covering_json(const EqualCovering<T>& e) {
  Json out = Json::object();
  out["extension"] = e.extension;
  if (e.extension) {
    out["alpha"] = scalar_json(e.alpha);
    out["alpha_value"] = e.alpha_value;
    out["beta_squared"] = scalar_json(e.beta_squared);
    out["beta"] = e.beta;
    out["generator"] = vector_json(e.generator);
  }
  out["mu"] = e.mu.mu;
  out["mu_squared"] = scalar_json(e.mu.mu_squared);
  out["facts"] = facts_json(e.facts);
  return out;
}

Json cmd_reduce(const Json& input, const Options& o) {
  return with_gram(input, o.tol, [](const auto& gram, const auto* lattice) {
    require_rank2(gram.rows(), "reduce");
    Json out = Json::object();
    if (lattice) {
      auto mb = gauss_reduce(*lattice);
      using T = std::decay_t<decltype(gram(0, 0))>;
      out["basis"] = rows_json(Matrix<T>::from_columns({mb.x, mb.y}));
      out["gram"] = rows_json(mb.reduced.gram);
      out["transform"] = rows_json(mb.reduced.transform);
      out["cos_theta"] = mb.cos_theta;
      out["theta"] = mb.theta;
    } else {
      auto r = gauss_reduce_gram(gram);
      out["gram"] = rows_json(r.gram);
      out["transform"] = rows_json(r.transform);
    }
    return out;
  });
}

Json cmd_minima(const Json& input, const Options& o) {
  return with_gram(input, o.tol, [&](const auto& gram, const auto* lattice) {
    auto sm = successive_minima_gram(gram, 0, o.tol);
    Json out = Json::object();
    out["minima"] = sm.values;
    Json sq = Json::array(), coords = Json::array(), vectors = Json::array();
    for (const auto& s : sm.squared) sq.push_back(scalar_json(s));
    for (const auto& c : sm.coordinates) {
      coords.push_back(vector_json(c));
      if (lattice) vectors.push_back(vector_json(lattice->point(c)));
    }
    out["minima_squared"] = sq;
    out["coordinates"] = coords;
    if (lattice) out["vectors"] = vectors;
    return out;
  });
}

Json cmd_cvp(const Json& input, const Options& o) {
  return with_gram(input, o.tol, [&](const auto& gram, const auto* lattice) {
    using T = std::decay_t<decltype(gram(0, 0))>;
    ClosestVector<T> cv;
    if (lattice) {
      cv = closest_vector(*lattice, parse_vector<T>(field(input, "target")), o.tol);
    } else {
      cv = closest_vector_coordinates(gram, parse_vector<T>(field(input, "center")), o.tol);
    }
    Json out = Json::object();
    out["coordinates"] = vector_json(cv.coordinates);
    if (lattice) out["vector"] = vector_json(cv.vector);
    out["distance_squared"] = scalar_json(cv.distance_squared);
    out["distance"] = cv.distance;
    return out;
  });
}

Json cmd_cover(const Json& input, const Options& o) {
  return with_gram(input, o.tol, [](const auto& gram, const auto*) {
    require_rank2(gram.rows(), "cover");
    auto cr = covering_radius_gram(gram);
    Json out = Json::object();
    out["mu"] = cr.mu;
    out["mu_squared"] = scalar_json(cr.mu_squared);
    return out;
  });
}

Json cmd_deepholes(const Json& input, const Options& o) {
  return with_basis(input, o.tol, "deepholes", [&](const auto& lattice) {
    require_rank2(lattice.rank(), "deepholes");
    auto r = deep_holes_2d(lattice, o.tol);
    using T = std::decay_t<decltype(r.mu.mu_squared)>;
    Json out = Json::object();
    out["z1"] = vector_json(r.z1);
    out["z2"] = vector_json(r.z2);
    out["multiplicity_two"] = r.multiplicity_two;
    out["z1_coordinates"] = vector_json(r.z1_coordinates);
    out["z1_input_coordinates"] = vector_json(r.z1_input_coordinates);
    if constexpr (is_exact_v<T>) out["order"] = order_json(r.order_kind, r.order);
    out["mu"] = r.mu.mu;
    out["mu_squared"] = scalar_json(r.mu.mu_squared);
    return out;
  });
}

Json cmd_order(const Json& input, const Options& o) {
  return with_gram(input, o.tol, [](const auto& gram, const auto*) -> Json {
    using T = std::decay_t<decltype(gram(0, 0))>;
    if constexpr (!is_exact_v<T>) {
      fail_input("order needs exact input");
    } else {
      require_rank2(gram.rows(), "order");
      DeepHoleOrder h = deep_hole_order(GramLattice(gram));
      Json out = Json::object();
      out["order"] = order_json(h.kind, h.order);
      return out;
    }
  });
}

Json cmd_classify(const Json& input, const Options& o) {
  return with_basis(input, o.tol, "classify", [&](const auto& lattice) {
    require_rank2(lattice.rank(), "classify");
    auto c = classify_planar(lattice, o.tol);
    Json out = Json::object();
    out["well_rounded"] = c.well_rounded;
    out["semistable"] = c.semistable;
    out["rectangular"] = c.rectangular;
    out["equal_covering_extension"] = c.equal_covering_extension;
    out["a"] = scalar_json(c.a);
    out["b_squared"] = scalar_json(c.b_squared);
    out["b"] = c.b;
    return out;
  });
}

Json cmd_extend_det(const Json& input, const Options&) {
  IntMatrix b = parse_integer_columns(field(input, "columns"), ambient_dim_of(input));
  return report_json(small_det_extension(b));
}

Json cmd_extend_vector(const Json& input, const Options& o) {
  IntMatrix b = parse_integer_columns(field(input, "columns"), ambient_dim_of(input));
  ShortExtension s = short_extension_vector(b, o.tol);
  Json out = report_json(s.report);
  out["y"] = vector_json(s.y);
  return out;
}

Json cmd_extend_ambient(const Json& input, const Options& o) {
  AnyMatrix a = parse_columns(field(input, "columns"), ambient_dim_of(input));
  std::size_t n = std::visit([](const auto& m) { return m.rows(); }, a);
  IntMatrix x = parse_integer_columns(field(input, "coordinates"), n);
  return std::visit([&](const auto& m) { return report_json(ambient_extension(m, x, o.tol)); }, a);
}

Json cmd_extend_sm(const Json& input, const Options& o) {
  return with_basis(input, o.tol, "extend-sm", [&](const auto& lattice) {
    using T = std::decay_t<decltype(lattice.basis()(0, 0))>;
    AnyMatrix sub = parse_columns(field(input, "sublattice"), lattice.ambient_dim());
    Matrix<T> s;
    if constexpr (is_exact_v<T>) {
      if (!std::holds_alternative<QuadMatrix>(sub))
        fail_input("exact lattice needs an exact sublattice");
      s = std::get<QuadMatrix>(sub);
    } else {
      s = std::visit([](const auto& m) { return to_real(m); }, sub);
    }
    return report_json(sm_extension(lattice, s, o.tol));
  });
}

Json cmd_extend_cover(const Json& input, const Options& o) {
  if (input.contains("columns") || input.contains("gram")) {
    return with_basis(input, o.tol, "extend-cover", [&](const auto& lattice) {
      return equal_covering_json(equal_covering_classify(lattice, o.tol));
    });
  }
  ExactLattice lattice = lambda_alpha(exact_alpha(o));
  Json out = Json::object();
  out["basis"] = rows_json(lattice.basis());
  Json c = equal_covering_json(equal_covering_classify(lattice, o.tol));
  out.update(c);
  return out;
}

Json cmd_extend_orth(const Json& input, const Options& o) {
  Rational alpha = exact_alpha(o);
  return with_basis(input, o.tol, "extend-orth", [&](const auto& lattice) {
    using T = std::decay_t<decltype(lattice.basis()(0, 0))>;
    std::optional<Vec<T>> direction;
    if (input.contains("direction")) direction = parse_vector<T>(input.at("direction"));
    return report_json(orthogonal_mu_extension(lattice, alpha, direction, o.tol));
  });
}

Json cmd_numfield(const Json& input, const Options& o) {
  std::optional<long> d = o.d;
  if (!d && input.contains("D")) {
    if (!input.at("D").is_number_integer()) fail_input("\"D\" must be an integer");
    d = input.at("D").get<long>();
  }
  if (!d) fail_input("numfield needs --D");
  OmegaClassification c = classify_omega(*d);
  Json out = Json::object();
  out["D"] = *d;
  out["basis"] = rows_json(ring_lattice(*d).basis());
  out["extension"] = c.extension;
  if (c.extension) {
    out["generator"] = vector_json(c.generator);
    out["expected_mu_squared"] = scalar_json(c.expected_mu_squared);
  }
  out["mu"] = c.geometric.mu.mu;
  out["mu_squared"] = scalar_json(c.geometric.mu.mu_squared);
  out["facts"] = facts_json(c.facts);
  out["verified"] = c.verified();
  return out;
}

std::pair<double, double> similarity_point(const Json& doc, double tol) {
  return with_gram(doc, tol, [](const auto& gram, const auto*) {
    require_rank2(gram.rows(), "plot-domain");
    auto r = gauss_reduce_gram(gram);
    double l1 = to_double(r.gram(0, 0));
    double a = to_double(r.gram(0, 1)) / l1;
    double det = to_double(r.gram(0, 0) * r.gram(1, 1) - r.gram(0, 1) * r.gram(0, 1));
    return Json::array({a, std::sqrt(std::max(det, 0.0)) / l1});
  }).get<std::pair<double, double>>();
}

Json cmd_plot_domain(const Json& input, const Options& o) {
  std::vector<Json> docs;
  if (input.contains("lattices")) {
    if (!input.at("lattices").is_array()) fail_input("\"lattices\" must be an array");
    for (const auto& d : input.at("lattices")) docs.push_back(d);
  } else if (input.contains("columns") || input.contains("gram")) {
    docs.push_back(input);
  }
  Json points = Json::array();
  for (const auto& d : docs) {
    auto [a, b] = similarity_point(d, o.tol);
    points.push_back(Json{{"a", a}, {"b", b}});
  }
  Json out = Json::object();
  out["domain"] = "0 <= a <= 1/2, a^2 + b^2 >= 1";
  out["points"] = points;
  return out;
}

using Handler = std::function<Json(const Json&, const Options&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"reduce", cmd_reduce},
      {"minima", cmd_minima},
      {"cvp", cmd_cvp},
      {"cover", cmd_cover},
      {"deepholes", cmd_deepholes},
      {"order", cmd_order},
      {"classify", cmd_classify},
      {"extend-det", cmd_extend_det},
      {"extend-vector", cmd_extend_vector},
      {"extend-ambient", cmd_extend_ambient},
      {"extend-sm", cmd_extend_sm},
      {"extend-cover", cmd_extend_cover},
      {"extend-orth", cmd_extend_orth},
      {"numfield", cmd_numfield},
      {"plot-domain", cmd_plot_domain},
  };
  return table;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& commands() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"reduce", "Lagrange-Gauss reduction of a rank-2 lattice or Gram matrix"},
      {"minima", "successive minima and attaining vectors"},
      {"cvp", "closest vector to \"target\" (basis) or \"center\" (Gram coordinates)"},
      {"cover", "covering radius of a rank-2 lattice"},
      {"deepholes", "deep holes of a rank-2 lattice"},
      {"order", "order of the deep hole modulo the lattice"},
      {"classify", "well-rounded / semistable / rectangular tests and similarity point"},
      {"extend-det", "small-determinant extension in Z^n"},
      {"extend-vector", "short completing vector for n x (n-1) integer input"},
      {"extend-ambient", "small-determinant extension inside the lattice spanned by \"columns\""},
      {"extend-sm", "extension of \"sublattice\" keeping its successive minima"},
      {"extend-cover", "equal covering extension: classify input, or build from --alpha"},
      {"extend-orth", "orthogonal extension with the same covering radius"},
      {"numfield", "ring of integers of Q(sqrt(D)) as an equal covering extension"},
      {"plot-domain", "similarity domain with markers for the given lattices"},
  };
  return list;
}

Json execute(const std::string& command, const Json& input, const Options& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) fail_input("unknown command " + command);
  if (!input.is_object()) fail_input("input must be a JSON object");
  return it->second(input, options);
}

}  // namespace latext::cli
