#include "latext/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latext {

namespace {

// Relative slack on binary64 pruning radii; candidates are re-filtered
// with the exact norm afterwards.
constexpr double kPruneSlack = 1e-9;
constexpr long kMaxNodes = 50'000'000;

struct GramSchmidt {
  std::vector<double> q;                  // squared Gram-Schmidt norms
  std::vector<std::vector<double>> mu;    // mu[i][j], j > i
};

GramSchmidt ldl(const RealMatrix& g) {
  const std::size_t m = g.rows();
  GramSchmidt gs{std::vector<double>(m), std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0))};
  for (std::size_t i = 0; i < m; ++i) {
    double qi = g(i, i);
    for (std::size_t k = 0; k < i; ++k) qi -= gs.mu[k][i] * gs.mu[k][i] * gs.q[k];
    if (!(qi > 0)) fail_input("enumeration: Gram matrix is not positive definite");
    gs.q[i] = qi;
    for (std::size_t j = i + 1; j < m; ++j) {
      double s = g(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= gs.mu[k][i] * gs.mu[k][j] * gs.q[k];
      gs.mu[i][j] = s / qi;
    }
  }
  return gs;
}

// Fincke–Pohst: visits every integer x with (x-c)^T G (x-c) <= r2, deepest
// coordinate first, values in increasing order at every level.
class BallEnumerator {
 public:
  BallEnumerator(const RealMatrix& g, std::vector<double> center, double r2)
      : gs_(ldl(g)), center_(std::move(center)), r2_(r2), x_(g.rows(), 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    if (x_.empty()) return;
    recurse(x_.size() - 1, r2_, visit);
  }

 private:
  template <class Visit>
  void recurse(std::size_t i, double budget, Visit& visit) {
    if (++nodes_ > kMaxNodes) fail_infeasible("enumeration limit: search tree too large");
    double c = center_[i];
    for (std::size_t j = i + 1; j < x_.size(); ++j)
      c -= gs_.mu[i][j] * (static_cast<double>(x_[j]) - center_[j]);
    double half = std::sqrt(std::max(budget, 0.0) / gs_.q[i]);
    auto lo = static_cast<long>(std::ceil(c - half - 1e-12));
    auto hi = static_cast<long>(std::floor(c + half + 1e-12));
    for (long v = lo; v <= hi; ++v) {
      double d = static_cast<double>(v) - c;
      double rest = budget - gs_.q[i] * d * d;
      if (rest < -1e-12 * std::max(1.0, r2_)) continue;
      x_[i] = v;
      if (i == 0) {
        visit(x_);
      } else {
        recurse(i - 1, rest, visit);
      }
    }
    x_[i] = 0;
  }

  GramSchmidt gs_;
  std::vector<double> center_;
  double r2_;
  std::vector<long> x_;
  long nodes_ = 0;
};

template <LatticeScalar T>
T quadratic_form(const Matrix<T>& g, const Vec<T>& x) {
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sign_of(x[i]) == 0) continue;
    T row(0);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sign_of(x[j]) != 0) row += g(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

// x^T G x for an exact Gram matrix, with denominators cleared once so each
// evaluation is integer arithmetic
class ExactForm {
 public:
  explicit ExactForm(const QuadMatrix& g) : m_(g.rows()) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        const QuadScalar& e = g(i, j);
        den_ = lcm(den_, Integer(e.rational_part().get_den()));
        den_ = lcm(den_, Integer(e.radical_part().get_den()));
        if (!e.is_rational()) d_ = e.radicand();
      }
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        const QuadScalar& e = g(i, j);
        Rational a = e.rational_part() * den_, b = e.radical_part() * den_;
        pa_.push_back(a.get_num());
        pb_.push_back(b.get_num());
      }
  }

  QuadScalar operator()(const Vec<Integer>& x) const {
    Integer sa = 0, sb = 0, ra, rb;
    for (std::size_t i = 0; i < m_; ++i) {
      if (x[i] == 0) continue;
      ra = 0;
      rb = 0;
      for (std::size_t j = 0; j < m_; ++j) {
        if (x[j] == 0) continue;
        ra += pa_[i * m_ + j] * x[j];
        if (d_ != 1) rb += pb_[i * m_ + j] * x[j];
      }
      sa += x[i] * ra;
      sb += x[i] * rb;
    }
    if (sb == 0) return QuadScalar(Rational(sa, den_));
    return QuadScalar(Rational(sa, den_), Rational(sb, den_), Integer(d_));
  }

 private:
  std::size_t m_;
  Integer den_ = 1;
  long d_ = 1;
  std::vector<Integer> pa_, pb_;
};

Vec<Integer> map_coordinates(const IntMatrix& u, const std::vector<long>& x) {
  Vec<Integer> out(u.rows(), Integer(0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t i = 0; i < u.rows(); ++i) out[i] += u(i, k) * x[k];
  }
  return out;
}

template <class T>
Matrix<T> congruence(const Matrix<T>& g, const IntMatrix& u) {
  Matrix<T> uu = integer_cast<T>(u);
  return uu.transpose() * g * uu;
}

double max_abs_diag(const RealMatrix& g) {
  double s = 1.0;
  for (std::size_t i = 0; i < g.rows(); ++i) s = std::max(s, std::abs(g(i, i)));
  return s;
}

template <LatticeScalar T>
void sort_points(std::vector<LatticePoint<T>>& pts, double tol) {
  auto lex = [](const LatticePoint<T>& a, const LatticePoint<T>& b) {
    return a.coordinates < b.coordinates;
  };
  if constexpr (is_exact_v<T>) {
    (void)tol;
    // exact comparison only when the double keys cannot separate the norms
    std::vector<std::pair<double, std::size_t>> keys;
    keys.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) keys.emplace_back(to_double(pts[i].norm_squared), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
      double scale = std::max(std::abs(a.first), std::abs(b.first));
      if (std::abs(a.first - b.first) > 1e-9 * scale) return a.first < b.first;
      const LatticePoint<T>& pa = pts[a.second];
      const LatticePoint<T>& pb = pts[b.second];
      int c = compare(pa.norm_squared, pb.norm_squared);
      return c != 0 ? c < 0 : lex(pa, pb);
    });
    std::vector<LatticePoint<T>> sorted;
    sorted.reserve(pts.size());
    for (const auto& k : keys) sorted.push_back(std::move(pts[k.second]));
    pts = std::move(sorted);
  } else {
    std::sort(pts.begin(), pts.end(), [&](const LatticePoint<T>& a, const LatticePoint<T>& b) {
      return a.norm_squared < b.norm_squared;
    });
    // near-equal norms are ties; order each tie group lexicographically
    std::size_t start = 0;
    while (start < pts.size()) {
      std::size_t end = start + 1;
      while (end < pts.size() && compare(pts[end].norm_squared, pts[start].norm_squared, tol) == 0)
        ++end;
      std::sort(pts.begin() + static_cast<std::ptrdiff_t>(start),
                pts.begin() + static_cast<std::ptrdiff_t>(end), lex);
      start = end;
    }
  }
}

// Rational row-echelon accumulator for incremental independence tests.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dim) : dim_(dim) {}

  bool try_add(const Vec<Integer>& v) {
    std::vector<Rational> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = r[pivots_[k]];
      if (sgn(f) == 0) continue;
      Rational factor = f / rows_[k][pivots_[k]];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= factor * rows_[k][j];
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(r[j]) != 0) {
        rows_.push_back(std::move(r));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool sign_canonical(Vec<Integer>& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return true;
  }
  return false;
}

bool independent(const std::vector<Vec<Integer>>& vectors) {
  if (vectors.empty()) return true;
  IndependenceTracker t(vectors.front().size());
  for (const auto& v : vectors)
    if (!t.try_add(v)) return false;
  return true;
}

double unit_ball_volume(std::size_t m) {
  double k = static_cast<double>(m);
  return std::pow(std::numbers::pi, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

MinkowskiSandwich minkowski_sandwich(const std::vector<double>& minima, double det, double rel_tol) {
  const std::size_t m = minima.size();
  MinkowskiSandwich s;
  s.product = 1.0;
  for (double v : minima) s.product *= v;
  double w = unit_ball_volume(m);
  s.upper = std::pow(2.0, static_cast<double>(m)) * det / w;
  s.lower = s.upper / std::tgamma(static_cast<double>(m) + 1.0);
  s.holds = s.product >= s.lower * (1.0 - rel_tol) && s.product <= s.upper * (1.0 + rel_tol);
  return s;
}

IntMatrix lll_transform(const RealMatrix& gram, double delta) {
  const std::size_t m = gram.rows();
  IntMatrix u = IntMatrix::identity(m);
  if (m < 2) return u;
  auto current = [&] { return congruence(gram, u); };
  std::size_t k = 1;
  long guard = 0;
  while (k < m) {
    if (++guard > 100000) break;
    RealMatrix g = current();
    GramSchmidt gs = ldl(g);
    for (std::size_t j = k; j-- > 0;) {
      double r = std::round(gs.mu[j][k]);
      if (r == 0.0) continue;
      Integer ri(r);
      for (std::size_t i = 0; i < m; ++i) u(i, k) -= ri * u(i, j);
      g = current();
      gs = ldl(g);
    }
    double mu = gs.mu[k - 1][k];
    if (gs.q[k] >= (delta - mu * mu) * gs.q[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < m; ++i) std::swap(u(i, k), u(i, k - 1));
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

template <LatticeScalar T>
std::vector<LatticePoint<T>> points_in_ball(const Matrix<T>& gram, const T& radius_squared,
                                            double tol) {
  return points_in_shell(gram, -1.0, radius_squared, tol);
}

template <LatticeScalar T>
std::vector<LatticePoint<T>> points_in_shell(const Matrix<T>& gram, double inner_squared,
                                             const T& radius_squared, double tol) {
  const std::size_t m = gram.rows();
  if (m > kMaxEnumerationRank) fail_infeasible("enumeration limit: rank exceeds 6");
  IntMatrix u = lll_transform(to_real(gram));
  RealMatrix reduced = to_real(congruence(gram, u));
  double r2 = to_double(radius_squared);
  double prune = r2 * (1.0 + kPruneSlack) + kPruneSlack * max_abs_diag(reduced) * 1e-3;
  std::vector<LatticePoint<T>> out;
  auto form = [&] {
    if constexpr (is_exact_v<T>) {
      return ExactForm(gram);
    } else {
      return [&gram](const Vec<Integer>& c) { return quadratic_form(gram, integer_cast<T>(c)); };
    }
  }();
  BallEnumerator(reduced, std::vector<double>(m, 0.0), prune).run([&](const std::vector<long>& x) {
    if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return;
    if (inner_squared > 0) {
      double q = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          q += reduced(i, j) * static_cast<double>(x[i]) * static_cast<double>(x[j]);
      if (q < inner_squared * (1.0 - kPruneSlack)) return;
    }
    Vec<Integer> c = map_coordinates(u, x);
    T n2 = form(c);
    if (compare(n2, radius_squared, tol) > 0) return;
    out.push_back({std::move(c), std::move(n2)});
  });
  sort_points(out, tol);
  return out;
}

template <LatticeScalar T>
SuccessiveMinima<T> successive_minima_gram(const Matrix<T>& gram, std::size_t count, double tol) {
  const std::size_t m = gram.rows();
  if (m == 0 || gram.cols() != m) fail_input("successive minima: bad Gram matrix");
  if (m > kMaxEnumerationRank) fail_infeasible("enumeration limit: rank exceeds 6");
  if (count == 0 || count > m) count = m;

  IntMatrix u = lll_transform(to_real(gram));
  RealMatrix reduced = to_real(congruence(gram, u));
  std::vector<double> diag;
  for (std::size_t i = 0; i < m; ++i) diag.push_back(reduced(i, i));
  std::sort(diag.begin(), diag.end());

  double det = std::sqrt(std::max(to_double(determinant(gram)), 0.0));
  double w = unit_ball_volume(m);
  double md = static_cast<double>(m);
  // Minkowski's first theorem bounds lambda_1, the second bounds lambda_k
  double lambda1_bound = 2.0 * std::pow(det / w, 1.0 / md);
  double r1 = std::min(diag[0], lambda1_bound * lambda1_bound);

  double lambda1_sq = 0.0;
  {
    auto first = points_in_ball(gram, from_rational<T>(Rational(r1 * (1.0 + kPruneSlack))), tol);
    if (first.empty()) fail_infeasible("successive minima: no vector found for lambda_1");
    lambda1_sq = to_double(first.front().norm_squared);
  }
  double product_bound = std::pow(2.0, md) * det / w;
  double lambda1 = std::sqrt(lambda1_sq);
  double kd = static_cast<double>(count);
  double second = std::pow(product_bound / std::pow(lambda1, kd - 1.0), 1.0 / (md - kd + 1.0));
  double radius = std::min(diag[count - 1], second * second * (1.0 + kPruneSlack));
  radius = std::max(radius, lambda1_sq);

  auto pts = points_in_ball(gram, from_rational<T>(Rational(radius * (1.0 + kPruneSlack))), tol);
  SuccessiveMinima<T> out;
  IndependenceTracker tracker(m);
  for (auto& p : pts) {
    if (out.squared.size() == count) break;
    Vec<Integer> c = p.coordinates;
    sign_canonical(c);
    if (c != p.coordinates) continue;  // keep one of each ± pair
    if (!tracker.try_add(c)) continue;
    out.values.push_back(sqrt_value(p.norm_squared));
    out.squared.push_back(p.norm_squared);
    out.coordinates.push_back(std::move(c));
  }
  if (out.squared.size() != count) fail_infeasible("successive minima: search radius too small");
  return out;
}

template <LatticeScalar T>
ClosestVector<T> closest_vector_coordinates(const Matrix<T>& gram, const Vec<T>& center, double tol) {
  const std::size_t m = gram.rows();
  if (m > kMaxEnumerationRank) fail_infeasible("enumeration limit: rank exceeds 6");
  if (center.size() != m) fail_input("closest vector: target dimension mismatch");
  IntMatrix u = lll_transform(to_real(gram));
  Vec<T> reduced_center = integer_cast<T>(unimodular_inverse(u)) * center;
  RealMatrix reduced = to_real(congruence(gram, u));

  auto distance2 = [&](const Vec<Integer>& c) {
    return quadratic_form(gram, center - integer_cast<T>(c));
  };

  // Babai rounding gives the initial radius
  std::vector<double> center_real;
  std::vector<long> rounded;
  for (const auto& x : reduced_center) {
    center_real.push_back(to_double(x));
    rounded.push_back(static_cast<long>(std::floor(to_double(x) + 0.5)));
  }
  Vec<Integer> best = map_coordinates(u, rounded);
  T best_d2 = distance2(best);
  double r2 = to_double(best_d2);
  double prune = r2 * (1.0 + kPruneSlack) + kPruneSlack * 1e-3 * max_abs_diag(reduced);

  BallEnumerator(reduced, center_real, prune).run([&](const std::vector<long>& x) {
    Vec<Integer> c = map_coordinates(u, x);
    T d2 = distance2(c);
    int cmp = compare(d2, best_d2, tol);
    if (cmp < 0 || (cmp == 0 && c < best)) {
      best = std::move(c);
      best_d2 = std::move(d2);
    }
  });
  return {best, {}, best_d2, std::sqrt(std::max(0.0, to_double(best_d2)))};
}

template <LatticeScalar T>
ClosestVector<T> closest_vector(const Lattice<T>& lattice, const Vec<T>& target, double tol) {
  if (target.size() != lattice.ambient_dim()) fail_input("closest vector: target dimension mismatch");
  Vec<T> coords = solve(lattice.gram(), lattice.basis().transpose() * target);
  ClosestVector<T> out = closest_vector_coordinates(lattice.gram(), coords, tol);
  out.vector = lattice.point(out.coordinates);
  // report the distance to t itself, which includes the off-span part
  out.distance_squared = norm2(target - out.vector);
  out.distance = std::sqrt(std::max(0.0, to_double(out.distance_squared)));
  return out;
}

#define LATEXT_INSTANTIATE(T)                                                                    \
  template std::vector<LatticePoint<T>> points_in_ball<T>(const Matrix<T>&, const T&, double);   \
  template std::vector<LatticePoint<T>> points_in_shell<T>(const Matrix<T>&, double, const T&,   \
                                                           double);                              \
  template SuccessiveMinima<T> successive_minima_gram<T>(const Matrix<T>&, std::size_t, double); \
  template ClosestVector<T> closest_vector_coordinates<T>(const Matrix<T>&, const Vec<T>&,       \
                                                          double);                               \
  template ClosestVector<T> closest_vector<T>(const Lattice<T>&, const Vec<T>&, double);

LATEXT_INSTANTIATE(QuadScalar)
LATEXT_INSTANTIATE(double)

#undef LATEXT_INSTANTIATE

}  // namespace latext
