#include "latext/extensions.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace latext {

namespace {

Integer floor_rational(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Shortens each column of `extra` against span(s) by rounding its projection
// coordinates; the lattice [s | extra] is unchanged.
void size_reduce(IntMatrix& extra, const IntMatrix& s) {
  RatMatrix sr = to_rational(s);
  RatMatrix g = gram_of(sr);
  for (std::size_t j = 0; j < extra.cols(); ++j) {
    Vec<Rational> w(extra.rows());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = extra(i, j);
    Vec<Rational> c = solve(g, sr.transpose() * w);
    for (std::size_t t = 0; t < c.size(); ++t) {
      Integer q = floor_rational(c[t] + Rational(1, 2));
      if (q == 0) continue;
      for (std::size_t i = 0; i < extra.rows(); ++i) extra(i, j) -= q * s(i, t);
    }
  }
}

template <LatticeScalar T>
bool contains(const Lattice<T>& lattice, const Matrix<T>& vectors, double tol) {
  try {
    sublattice_coordinates(lattice, vectors, tol);
    return true;
  } catch (const LatticeError&) {
    return false;
  }
}

template <LatticeScalar T>
Fact exact_check(std::string name, bool holds, const T& value) {
  if constexpr (is_exact_v<T>) {
    return check_fact(std::move(name), holds, value.to_double(), value.to_string());
  } else {
    return check_fact(std::move(name), holds, value);
  }
}

// sqrt(a) >= isqrt(a 4^k) / 2^k
Rational sqrt_lower(const Integer& a) {
  constexpr unsigned long kBits = 80;
  Integer scaled = a;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * kBits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kBits);
  Rational out(root, den);
  out.canonicalize();
  return out;
}

}  // namespace

ExtensionReport<QuadScalar> small_det_extension(const IntMatrix& b) {
  const std::size_t n = b.rows(), m = b.cols();
  if (m == 0 || m >= n) fail_input("small_det_extension: need 0 < m < n columns");
  Integer g = plucker_gcd(b);
  if (g == 0) fail_input("rank-deficient basis");
  IntMatrix s = saturation(b);
  IntMatrix extra = complete_to_unimodular(s).select_columns(m, n - m);
  size_reduce(extra, s);
  IntMatrix omega = b.concat_columns(extra);
  Integer det = abs(integer_determinant(omega));

  ExactLattice parent = exact_lattice(b);
  ExactLattice result = exact_lattice(omega);
  ExtensionReport<QuadScalar> report{parent, result, integer_cast<QuadScalar>(extra), {}};
  report.facts.push_back(value_fact("det", QuadScalar(det)));
  report.facts.push_back(value_fact("plucker_gcd", QuadScalar(g)));
  report.facts.push_back(exact_check("det_equals_plucker_gcd", det == g, QuadScalar(det)));
  report.facts.push_back(
      check_fact("is_extension", is_extension(result, integer_cast<QuadScalar>(b))));
  Integer inner = index(exact_lattice(s), integer_cast<QuadScalar>(b));
  report.facts.push_back(exact_check("saturation_index", inner == g, QuadScalar(inner)));
  return report;
}

ShortExtension short_extension_vector(const IntMatrix& b, double tol) {
  const std::size_t n = b.rows(), m = b.cols();
  if (m + 1 != n) fail_input("short_extension_vector: need n x (n-1) input");
  if (m > kMaxEnumerationRank) fail_input("short_extension_vector: rank too large");
  Integer g = plucker_gcd(b);
  if (g == 0) fail_input("rank-deficient basis");
  IntMatrix s = saturation(b);
  IntMatrix extra = complete_to_unimodular(s).select_columns(m, 1);
  size_reduce(extra, s);
  Vec<Integer> z = extra.column(0);

  QuadMatrix bq = integer_cast<QuadScalar>(b);
  QuadMatrix gram = gram_of(bq);
  Vec<QuadScalar> center = solve(gram, bq.transpose() * integer_cast<QuadScalar>(z));
  ClosestVector<QuadScalar> cv = closest_vector_coordinates(gram, center, tol);
  Vec<Integer> y = z;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) y[i] -= cv.coordinates[j] * b(i, j);

  Integer y2 = 0;
  for (const auto& v : y) y2 += v * v;
  Integer det2 = integer_determinant(gram_of(b));
  Rational gcd_term(g * g, det2);
  gcd_term.canonicalize();
  Rational excess = Rational(y2) - gcd_term;

  bool holds = false;
  double mu_hat_squared = 0.0;
  std::string mu_exact;
  if (m <= 2) {
    QuadScalar mu2 = m == 1 ? gram(0, 0) / QuadScalar(4) : covering_radius_gram(gram).mu_squared;
    holds = QuadScalar(excess) <= mu2;
    mu_hat_squared = mu2.to_double();
    mu_exact = mu2.to_string();
  } else {
    // Jarnik: mu <= (1/2) sum lambda_i, certified with lower bounds on the roots
    SuccessiveMinima<QuadScalar> minima = successive_minima_gram(gram, 0, tol);
    Rational lower = 0;
    double sum = 0.0;
    for (const auto& l2 : minima.squared) {
      lower += sqrt_lower(l2.rational_part().get_num());
      sum += std::sqrt(l2.to_double());
    }
    holds = sgn(excess) <= 0 || lower * lower >= Rational(4) * excess;
    mu_hat_squared = 0.25 * sum * sum;
  }

  IntMatrix omega = b.concat_columns(IntMatrix::from_columns({y}));
  Integer det = abs(integer_determinant(omega));
  ExactLattice result = exact_lattice(omega);
  ShortExtension out{y, {exact_lattice(b), result, integer_cast<QuadScalar>(IntMatrix::from_columns({y})), {}}};
  auto& facts = out.report.facts;
  facts.push_back(value_fact("y_norm_squared", QuadScalar(y2)));
  facts.push_back(value_fact("gcd_term", QuadScalar(gcd_term)));
  Fact mu_fact = value_fact("mu_hat_squared", mu_hat_squared);
  mu_fact.exact = mu_exact;
  facts.push_back(mu_fact);
  facts.push_back(value_fact("bound_squared", gcd_term.get_d() + mu_hat_squared));
  facts.push_back(check_fact("norm_bound", holds, y2.get_d()));
  facts.push_back(exact_check("det_equals_plucker_gcd", det == g, QuadScalar(det)));
  facts.push_back(check_fact("is_extension", is_extension(result, bq)));
  return out;
}

template <LatticeScalar T>
ExtensionReport<T> ambient_extension(const Matrix<T>& a, const IntMatrix& x, double tol) {
  if (a.rows() != a.cols()) fail_input("ambient basis must be square");
  if (x.rows() != a.cols()) fail_input("coordinate matrix has the wrong number of rows");
  Lattice<T> ambient(a, tol);
  ExtensionReport<QuadScalar> inner = small_det_extension(x);
  IntMatrix omega = inner.result.basis().map([](const QuadScalar& v) {
    return v.rational_part().get_num();
  });
  Matrix<T> parent_basis = a * integer_cast<T>(x);
  Matrix<T> result_basis = a * integer_cast<T>(omega);
  Lattice<T> parent(parent_basis, tol);
  Lattice<T> result(result_basis, tol);
  ExtensionReport<T> report{parent, result,
                            a * inner.new_vectors.map([](const QuadScalar& v) {
                              return from_integer<T>(v.rational_part().get_num());
                            }),
                            {}};
  Integer det_omega = abs(integer_determinant(omega));
  T expected = ambient.det_squared() * from_integer<T>(det_omega * det_omega);
  T got = result.det_squared();
  report.facts.push_back(value_fact("det", result.det()));
  report.facts.push_back(value_fact("det_omega", det_omega.get_d()));
  report.facts.push_back(exact_check("det_product", compare(got, expected, tol) == 0, got));
  report.facts.push_back(check_fact("is_extension", is_extension(result, parent_basis, tol)));
  report.facts.push_back(check_fact("in_lattice", contains(ambient, result_basis, tol)));
  return report;
}

double cone_radius(double lambda_k, double v) {
  return lambda_k * (v * v + std::sqrt(1.0 - v * v)) / std::sqrt(1.0 - v * v * v * v);
}

ConeParams solve_v_star(double lambda_k, double mu) {
  if (!(lambda_k > 0) || !(mu > 0) || !std::isfinite(lambda_k) || !std::isfinite(mu))
    fail_input("solve_v_star: lambda_k and mu must be positive");
  using LD = long double;
  const LD lam = lambda_k, mu_l = mu;
  auto relation = [&](LD v) {
    LD c = std::sqrt(1.0L - v * v);
    return mu_l * (c - v) - lam * v * (v * v + c) / std::sqrt(1.0L - v * v * v * v);
  };
  // relation(0) = mu > 0, relation(1/sqrt 2) < 0, strictly decreasing between
  LD lo = 0.0L, hi = std::sqrt(0.5L);
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    LD mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (relation(mid) > 0 ? lo : hi) = mid;
  }
  LD v = std::abs(relation(lo)) <= std::abs(relation(hi)) ? lo : hi;

  const LD ratio = (mu_l * mu_l) / (lam * lam);
  auto polynomial = [&](LD t) {
    LD t2 = t * t, t4 = t2 * t2;
    LD lhs = ratio * (1 - t4) - t2 * (t4 - t2 + 1);
    LD rhs = 2 * ratio * t * (1 - t4) + 2 * t4;
    return lhs * lhs - rhs * rhs * (1 - t2);
  };

  ConeParams out;
  out.lambda_k = lambda_k;
  out.mu = mu;
  out.v_star = static_cast<double>(v);
  out.theta = std::acos(out.v_star);
  out.r_theta = cone_radius(lambda_k, out.v_star);
  out.search_bound = out.r_theta + 2.0 * mu;
  out.residual = static_cast<double>(std::abs(relation(v)));
  out.polynomial_residual = static_cast<double>(std::abs(polynomial(v)));
  LD scale = (1 + ratio) * (1 + ratio);
  out.polynomial_consistent = out.polynomial_residual <= 1e-9 * static_cast<double>(scale);

  // smallest sign change of the squared polynomial on (0, 1)
  out.smallest_polynomial_root = std::numeric_limits<double>::quiet_NaN();
  constexpr int kSteps = 100000;
  LD prev_t = 0.0L, prev = polynomial(0.0L);
  for (int i = 1; i < kSteps; ++i) {
    LD t = static_cast<LD>(i) / kSteps;
    LD cur = polynomial(t);
    if (cur == 0 || (cur < 0) != (prev < 0)) {
      LD a = prev_t, b = t;
      if (cur != 0) {
        for (int it = 0; it < 200; ++it) {
          LD mid = 0.5L * (a + b);
          if (mid <= a || mid >= b) break;
          ((polynomial(mid) < 0) == (prev < 0) ? a : b) = mid;
        }
      }
      out.smallest_polynomial_root = static_cast<double>(cur == 0 ? t : 0.5L * (a + b));
      break;
    }
    prev_t = t;
    prev = cur;
  }
  out.smallest_root_agrees = std::abs(out.smallest_polynomial_root - out.v_star) <= 1e-9;
  return out;
}

template <LatticeScalar T>
bool cone_membership(const Vec<T>& x, const Matrix<T>& v, double theta) {
  if (x.size() != v.rows()) fail_input("cone_membership: dimension mismatch");
  double x2 = to_double(norm2(x));
  if (!(x2 > 0)) fail_input("cone_membership: zero vector");
  Vec<T> px = orthogonal_projection(v) * x;
  double p2 = to_double(norm2(px));
  double c = std::cos(theta);
  return p2 <= x2 * c * c * (1.0 + 1e-12);
}

template <LatticeScalar T>
ExtensionReport<T> sm_extension(const Lattice<T>& lattice, const Matrix<T>& sub, double tol) {
  const std::size_t n = lattice.ambient_dim();
  if (lattice.rank() != n) fail_input("sm_extension: lattice must have full rank");
  if (n > kMaxEnumerationRank) fail_input("sm_extension: rank too large");
  const std::size_t k = sub.cols();
  if (k == 0 || k >= n) fail_input("sm_extension: need 1 <= k < n");
  IntMatrix sub_coords = sublattice_coordinates(lattice, sub, tol);
  if (rank_of(to_rational(sub_coords)) != k)
    fail_input("sublattice generators are linearly dependent");

  Lattice<T> lk(sub, tol);
  SuccessiveMinima<T> mk = successive_minima(lk, 0, tol);
  const double lambda_k = mk.values[k - 1];
  const double mu_hat = n == 2 ? covering_radius_2d(lattice).mu : jarnik_upper(lattice);
  ConeParams cone = solve_v_star(lambda_k, mu_hat);

  const double bound = cone.search_bound;
  const double bound2 = bound * bound * (1.0 + 1e-12);
  auto as_scalar = [](double v) {
    if constexpr (is_exact_v<T>) {
      return QuadScalar(Rational(v));
    } else {
      return v;
    }
  };

  std::vector<Vec<Integer>> base = sub_coords.columns();
  auto independent_of_sub = [&](const Vec<Integer>& c) {
    auto cols = base;
    cols.push_back(c);
    return independent(cols);
  };
  auto extended = [&](const Vec<Integer>& c) {
    Vec<T> x = lattice.point(c);
    return std::make_pair(x, Lattice<T>(sub.concat_columns(Matrix<T>::from_columns({x})), tol));
  };
  // minima survive iff every point using x is at least lambda_k long; a
  // binary64 pass settles all but near-ties, which are redone exactly
  auto preserves_exact = [&](const Matrix<T>& gram) {
    for (const auto& p : points_in_ball(gram, mk.squared[k - 1], tol))
      if (p.coordinates[k] != 0 && compare(p.norm_squared, mk.squared[k - 1], tol) < 0) return false;
    return true;
  };
  const double lambda2 = to_double(mk.squared[k - 1]);
  auto preserves = [&](const Vec<Integer>& c) {
    Matrix<T> gram = gram_of(sub.concat_columns(Matrix<T>::from_columns({lattice.point(c)})));
    if constexpr (!is_exact_v<T>) {
      return preserves_exact(gram);
    } else {
      bool near = false;
      for (const auto& p : points_in_ball(to_real(gram), lambda2 * (1.0 + 1e-9), tol)) {
        if (p.coordinates[k] == 0) continue;
        if (p.norm_squared < lambda2 * (1.0 - 1e-9)) return false;
        near = true;
      }
      return !near || preserves_exact(gram);
    }
  };

  // The answer is the first candidate in (norm, lex) order that is either a
  // cone point or keeps the first k minima.  Nothing shorter than lambda_k
  // qualifies (r_theta >= lambda_k), so scan closed shells outward from
  // lambda_k and stop at the first shell with a hit.
  const double r2 = cone.r_theta * cone.r_theta * (1.0 - 1e-12);
  const double step = std::max(mu_hat / 2.0, (bound - lambda_k) / 16.0);
  std::vector<LatticePoint<T>> points;
  std::ptrdiff_t chosen = -1;
  std::ptrdiff_t cone_index = -1;
  std::vector<const LatticePoint<T>*> candidates;
  double inner2 = to_double(mk.squared[k - 1]);
  double radius = lambda_k;
  double radius2 = std::min(bound2, inner2 * (1.0 + 1e-9));
  std::optional<T> checked;
  for (;;) {
    points = points_in_shell(lattice.gram(), inner2, as_scalar(radius2), tol);
    candidates.clear();
    for (const auto& p : points) {
      Vec<Integer> c = p.coordinates;
      if (!sign_canonical(c) || c != p.coordinates) continue;
      if (independent_of_sub(c)) candidates.push_back(&p);
    }
    for (std::size_t i = 0; i < candidates.size() && chosen < 0; ++i) {
      const double c2 = to_double(candidates[i]->norm_squared);
      if (checked && compare(candidates[i]->norm_squared, *checked, tol) <= 0) continue;
      if (c2 >= r2 && cone_membership(lattice.point(candidates[i]->coordinates), sub, cone.theta)) {
        cone_index = chosen = static_cast<std::ptrdiff_t>(i);
        break;
      }
      if (compare(candidates[i]->norm_squared, mk.squared[k - 1], tol) < 0) continue;
      if (preserves(candidates[i]->coordinates))
        chosen = static_cast<std::ptrdiff_t>(i);
    }
    if (chosen >= 0 || radius2 >= bound2) break;
    checked = as_scalar(radius2);
    inner2 = radius2;
    radius += step;
    radius2 = std::min(bound2, radius * radius);
  }
  if (chosen < 0) fail_infeasible("no candidate within bound");

  auto [x, result] = extended(candidates[chosen]->coordinates);
  SuccessiveMinima<T> mr = successive_minima(result, 0, tol);
  ExtensionReport<T> report{lk, result, Matrix<T>::from_columns({x}), {}};
  auto& facts = report.facts;
  facts.push_back(value_fact("lambda_k", lambda_k));
  facts.push_back(value_fact("mu_hat", mu_hat));
  facts.push_back(value_fact("v_star", cone.v_star));
  facts.push_back(value_fact("theta", cone.theta));
  facts.push_back(value_fact("r_theta", cone.r_theta));
  facts.push_back(value_fact("search_bound", bound));
  facts.push_back(value_fact("cone_candidate_norm",
                             cone_index < 0 ? 0.0
                                            : sqrt_value(candidates[cone_index]->norm_squared)));
  facts.push_back(check_fact("v_star_residual", cone.residual < 1e-12, cone.residual));
  facts.push_back(check_fact("polynomial_consistent", cone.polynomial_consistent,
                             cone.polynomial_residual));
  facts.push_back(check_fact("smallest_root_agrees", cone.smallest_root_agrees,
                             cone.smallest_polynomial_root));
  bool kept = true;
  for (std::size_t j = 0; j < k; ++j) kept = kept && compare(mr.squared[j], mk.squared[j], tol) == 0;
  facts.push_back(check_fact("minima_preserved", kept));
  const double next = mr.values[k];
  facts.push_back(check_fact("lambda_next_within_bound", next <= bound * (1.0 + 1e-12), next));
  facts.push_back(check_fact("in_lattice", contains(lattice, result.basis(), tol)));
  return report;
}

ExactLattice lambda_alpha(const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) fail_input("lambda_alpha: alpha must lie in (0, 1)");
  QuadScalar h = QuadScalar::sqrt_of(alpha - alpha * alpha);
  QuadScalar a(alpha);
  return ExactLattice(QuadMatrix::from_columns({{a, h}, {a - QuadScalar(1), h}}));
}

RealLattice lambda_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 1)) fail_input("lambda_alpha: alpha must lie in (0, 1)");
  double h = std::sqrt(alpha - alpha * alpha);
  return RealLattice(RealMatrix::from_columns({{alpha, h}, {alpha - 1.0, h}}));
}

namespace {

template <LatticeScalar T>
Vec<T> sign_canonical_vector(Vec<T> v, double tol) {
  for (const auto& e : v) {
    if (is_zero(e, tol)) continue;
    if (sign_of(e) < 0)
      for (auto& f : v) f = -f;
    break;
  }
  return v;
}

template <LatticeScalar T>
bool lex_greater(const Vec<T>& a, const Vec<T>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i], tol);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

template <LatticeScalar T>
EqualCovering<T> equal_covering_classify(const Lattice<T>& lattice, double tol) {
  if (lattice.rank() != 2) fail_input("equal_covering_classify: rank must be 2");
  EqualCovering<T> out;
  out.basis = gauss_reduce(lattice);
  out.mu = covering_radius_gram(out.basis.reduced.gram);
  if constexpr (is_exact_v<T>) {
    out.extension = is_zero(out.basis.inner());
  } else {
    out.extension = std::abs(out.basis.cos_theta) < tol;
  }
  out.facts.push_back(value_fact("mu", out.mu.mu));
  if (!out.extension) return out;

  const T& l1 = out.basis.x_norm2();
  const T& l2 = out.basis.y_norm2();
  out.beta_squared = l1 + l2;
  out.alpha = l1 / out.beta_squared;
  out.alpha_value = to_double(out.alpha);
  out.beta = sqrt_value(out.beta_squared);
  const double scale = sqrt_value(l2);
  Vec<T> plus = sign_canonical_vector(out.basis.x + out.basis.y, tol * scale);
  Vec<T> minus = sign_canonical_vector(out.basis.x - out.basis.y, tol * scale);
  out.generator = lex_greater(minus, plus, tol) ? minus : plus;

  T quarter = out.beta_squared / T(4);
  out.facts.push_back(value_fact("alpha", out.alpha_value));
  out.facts.push_back(value_fact("beta", out.beta));
  out.facts.push_back(exact_check("mu_equals_half_generator",
                                  compare(out.mu.mu_squared, quarter, tol) == 0, out.mu.mu_squared));
  out.facts.push_back(
      check_fact("generator_norm", compare(norm2(out.generator), out.beta_squared, tol) == 0));
  return out;
}

template <LatticeScalar T>
ExtensionReport<T> orthogonal_mu_extension(const Lattice<T>& lattice, const Rational& alpha,
                                           const std::optional<Vec<T>>& direction, double tol) {
  const std::size_t n = lattice.ambient_dim(), k = lattice.rank();
  if (k >= n) fail_input("orthogonal_mu_extension: rank must be below the ambient dimension");
  if (!(alpha > 0 && alpha < 1)) fail_input("orthogonal_mu_extension: alpha must lie in (0, 1)");
  const Matrix<T>& g = lattice.gram();
  auto orthogonal = [&](const T& d, const T& a2, const T& b2) {
    if constexpr (is_exact_v<T>) {
      return is_zero(d);
    } else {
      return std::abs(d) <= tol * std::sqrt(a2 * b2);
    }
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!orthogonal(g(i, j), g(i, i), g(j, j))) fail_input("input basis is not orthogonal");

  std::vector<Vec<T>> xs = lattice.basis().columns();
  auto residual_of = [&](Vec<T> w) {
    for (std::size_t j = 0; j < k; ++j) w = w - scaled(xs[j], T(dot(w, xs[j]) / g(j, j)));
    return w;
  };
  Vec<T> w;
  if (direction) {
    if (direction->size() != n) fail_input("direction has the wrong dimension");
    w = *direction;
    T w2 = norm2(w);
    if (sign_of(w2) == 0) fail_input("direction must be nonzero");
    for (std::size_t j = 0; j < k; ++j)
      if (!orthogonal(dot(w, xs[j]), w2, g(j, j))) fail_input("direction is not orthogonal to the lattice");
  } else {
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      Vec<T> e(n, T(0));
      e[i] = T(1);
      Vec<T> r = residual_of(e);
      if (to_double(norm2(r)) > tol) w = r;
    }
  }

  const T a = from_rational<T>(alpha);
  T s2 = (a - a * a) * g(0, 0) / norm2(w);
  T s;
  if constexpr (is_exact_v<T>) {
    if (!s2.is_rational()) fail_input("exact orthogonal extension needs rational norms");
    s = QuadScalar::sqrt_of(s2.rational_part());
  } else {
    s = std::sqrt(s2);
  }
  Vec<T> y1 = scaled(xs[0], a) + scaled(w, s);
  Vec<T> y2 = scaled(xs[0], T(T(1) - a)) - scaled(w, s);
  std::vector<Vec<T>> cols{y1, y2};
  for (std::size_t j = 1; j < k; ++j) cols.push_back(xs[j]);
  Matrix<T> basis = Matrix<T>::from_columns(cols);
  Lattice<T> result(basis, tol);
  ExtensionReport<T> report{lattice, result, Matrix<T>::from_columns({y1}), {}};
  auto& facts = report.facts;

  const Matrix<T>& gn = result.gram();
  double scale2 = 0.0;
  for (std::size_t i = 0; i < gn.rows(); ++i) scale2 = std::max(scale2, to_double(gn(i, i)));
  double worst_dot = 0.0;
  bool exact_orth = true;
  for (std::size_t i = 0; i < gn.rows(); ++i)
    for (std::size_t j = i + 1; j < gn.cols(); ++j) {
      worst_dot = std::max(worst_dot, std::abs(to_double(gn(i, j))));
      exact_orth = exact_orth && is_zero(gn(i, j));
    }
  bool orth_ok = is_exact_v<T> ? exact_orth : worst_dot <= 1e-9 * scale2;
  facts.push_back(check_fact("orthogonal", orth_ok, worst_dot / scale2));
  facts.push_back(check_fact("contains_input", contains(result, lattice.basis(), tol)));

  T old_sum(0), new_sum(0);
  for (std::size_t j = 0; j < k; ++j) old_sum += g(j, j);
  for (std::size_t j = 0; j < gn.rows(); ++j) new_sum += gn(j, j);
  double mu_old = 0.5 * sqrt_value(old_sum);
  double mu_new = 0.5 * sqrt_value(new_sum);
  bool mu_ok = is_exact_v<T> ? compare(old_sum, new_sum) == 0 : std::abs(mu_new - mu_old) < 1e-9;
  facts.push_back(value_fact("mu", mu_new));
  facts.push_back(check_fact("mu_preserved", mu_ok, std::abs(mu_new - mu_old)));

  Vec<T> z(n, T(0));
  for (const auto& x : xs) z = z + x;
  z = scaled(z, T(T(1) / T(2)));
  double worst = 0.0;
  bool exact_hole = true;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    T r = dot(basis.column(j), z) - gn(j, j) / T(2);
    worst = std::max(worst, std::abs(to_double(r)));
    exact_hole = exact_hole && is_zero(r);
  }
  bool hole_ok = is_exact_v<T> ? exact_hole : worst <= 1e-9 * std::max(1.0, scale2);
  facts.push_back(check_fact("deep_hole_preserved", hole_ok, worst));
  return report;
}

#define LATEXT_INSTANTIATE_EXTENSIONS(T)                                                     \
  template ExtensionReport<T> ambient_extension(const Matrix<T>&, const IntMatrix&, double); \
  template bool cone_membership(const Vec<T>&, const Matrix<T>&, double);                    \
  template ExtensionReport<T> sm_extension(const Lattice<T>&, const Matrix<T>&, double);     \
  template EqualCovering<T> equal_covering_classify(const Lattice<T>&, double);              \
  template ExtensionReport<T> orthogonal_mu_extension(const Lattice<T>&, const Rational&,    \
                                                      const std::optional<Vec<T>>&, double);

LATEXT_INSTANTIATE_EXTENSIONS(QuadScalar)
LATEXT_INSTANTIATE_EXTENSIONS(double)

}  // namespace latext
