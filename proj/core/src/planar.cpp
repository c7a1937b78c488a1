#include "latext/planar.hpp"

#include <cmath>
#include <numbers>

namespace latext {

namespace {

template <LatticeScalar T>
bool degenerate_gram(const Matrix<T>& g) {
  T det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if constexpr (is_exact_v<T>) {
    return sign_of(g(0, 0)) <= 0 || sign_of(det) <= 0;
  } else {
    return !(g(0, 0) > 0) || !(det > 1e-14 * g(0, 0) * g(1, 1));
  }
}

template <LatticeScalar T>
Vec<T> half_diagonal(const Matrix<T>& g) {
  return {g(0, 0) / T(2), g(1, 1) / T(2)};
}

Integer denominator_lcm(const Vec<QuadScalar>& c, bool& rational) {
  Integer n = 1;
  rational = true;
  for (const auto& x : c) {
    if (!x.is_rational()) {
      rational = false;
      return 0;
    }
    Integer den = x.rational_part().get_den();
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  }
  return n;
}

bool pq_rational(const QuadMatrix& g) {
  if (g(0, 1).sign() == 0) return true;
  return (g(0, 1) / g(0, 0)).is_rational() && (g(0, 1) / g(1, 1)).is_rational();
}

}  // namespace

template <LatticeScalar T>
ReducedGram<T> gauss_reduce_gram(const Matrix<T>& gram) {
  if (gram.rows() != 2 || gram.cols() != 2) fail_input("gauss_reduce: Gram matrix must be 2x2");
  if (degenerate_gram(gram)) fail_input("degenerate basis");
  T g11 = gram(0, 0), g12 = gram(0, 1), g22 = gram(1, 1);
  IntMatrix u = IntMatrix::identity(2);
  auto swap_basis = [&] {
    std::swap(g11, g22);
    for (std::size_t i = 0; i < 2; ++i) std::swap(u(i, 0), u(i, 1));
  };
  for (int guard = 0; guard < 100000; ++guard) {
    if (g11 > g22) swap_basis();
    Integer q = round_integer(T(g12 / g11));
    if (q == 0) break;
    T tq = from_integer<T>(q);
    T next22 = g22 - T(2) * tq * g12 + tq * tq * g11;
    // only strict progress counts; |g12| = g11 / 2 is already reduced
    if constexpr (is_exact_v<T>) {
      if (!(next22 < g22)) break;
    } else {
      if (!(next22 < g22 * (1.0 - 1e-12))) break;
    }
    g22 = next22;
    g12 = g12 - tq * g11;
    for (std::size_t i = 0; i < 2; ++i) u(i, 1) -= q * u(i, 0);
  }
  if (g11 > g22) swap_basis();
  if (sign_of(g12) < 0) {
    g12 = -g12;
    for (std::size_t i = 0; i < 2; ++i) u(i, 1) = -u(i, 1);
  }
  Matrix<T> g(2, 2);
  g(0, 0) = g11;
  g(0, 1) = g12;
  g(1, 0) = g12;
  g(1, 1) = g22;
  return {std::move(g), std::move(u)};
}

template <LatticeScalar T>
MinimalBasis<T> gauss_reduce(const Lattice<T>& lattice) {
  if (lattice.rank() != 2) fail_input("gauss_reduce: rank must be 2");
  MinimalBasis<T> out;
  out.reduced = gauss_reduce_gram(lattice.gram());
  Matrix<T> b = lattice.basis() * integer_cast<T>(out.reduced.transform);
  out.x = b.column(0);
  out.y = b.column(1);
  double g11 = to_double(out.x_norm2()), g22 = to_double(out.y_norm2());
  out.cos_theta = std::min(1.0, to_double(out.inner()) / std::sqrt(g11 * g22));
  out.theta = std::acos(out.cos_theta);
  return out;
}

template <LatticeScalar T>
CoveringRadius<T> covering_radius_gram(const Matrix<T>& gram) {
  ReducedGram<T> r = gauss_reduce_gram(gram);
  const T& a = r.gram(0, 0);
  const T& b = r.gram(1, 1);
  const T& d = r.gram(0, 1);
  T num = a * b * (a + b - T(2) * d);
  T den = T(4) * (a * b - d * d);
  CoveringRadius<T> out{num / den, 0.0};
  out.mu = sqrt_value(out.mu_squared);
  return out;
}

template <LatticeScalar T>
CoveringRadius<T> circumradius_2d(const Lattice<T>& lattice) {
  MinimalBasis<T> mb = gauss_reduce(lattice);
  Circumcenter<T> c = circumcenter(Matrix<T>::from_columns({mb.x, mb.y}));
  CoveringRadius<T> out{norm2(c.center), 0.0};
  out.mu = sqrt_value(out.mu_squared);
  return out;
}

double mu_theta(double theta) {
  constexpr double kSlack = 1e-12;
  if (!(theta >= std::numbers::pi / 3 - kSlack && theta <= std::numbers::pi / 2 + kSlack))
    fail_input("mu_theta: theta must lie in [pi/3, pi/2]");
  return std::sqrt(1.0 - std::cos(theta)) / (std::sqrt(2.0) * std::sin(theta));
}

template <LatticeScalar T>
Circumcenter<T> circumcenter(const Matrix<T>& points, double tol) {
  const std::size_t m = points.cols();
  if (m == 0) fail_input("circumcenter: no points");
  if (rank_of(points, tol) != m) fail_input("circumcenter: dependent points");
  Matrix<T> g = gram_of(points);
  Vec<T> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = g(i, i) / T(2);
  Circumcenter<T> out;
  out.center = points * solve(g, rhs);
  out.free_directions = nullspace(points.transpose(), tol);
  return out;
}

template <LatticeScalar T>
Vec<T> circumcenter_in(const Matrix<T>& points, const Matrix<T>& subspace) {
  const std::size_t m = points.cols();
  if (subspace.cols() != m || subspace.rows() != points.rows())
    fail_input("circumcenter: subspace must have the same dimension as the point set");
  Vec<T> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = norm2(points.column(i)) / T(2);
  return subspace * solve(Matrix<T>(points.transpose() * subspace), rhs);
}

DeepHoleOrder deep_hole_order(const GramLattice& lattice) {
  DeepHoleOrder out;
  ReducedGram<QuadScalar> r = gauss_reduce_gram(lattice.gram());
  out.reduced_gram = r.gram;
  out.transform = r.transform;
  out.coordinates = solve(r.gram, half_diagonal(r.gram));
  bool rational = false;
  Integer n = denominator_lcm(out.coordinates, rational);
  out.kind = rational ? OrderKind::kFinite : OrderKind::kInfinite;
  if (rational) out.order = n;
  out.pq_criterion = pq_rational(r.gram);
  out.criterion_agrees = out.pq_criterion == rational;
  return out;
}

template <LatticeScalar T>
DeepHoleReport<T> deep_holes_2d(const Lattice<T>& lattice, double tol) {
  DeepHoleReport<T> out;
  out.basis = gauss_reduce(lattice);
  const Vec<T>& x = out.basis.x;
  const Vec<T>& y = out.basis.y;
  out.z1 = circumcenter(Matrix<T>::from_columns({x, y}), tol).center;
  // complementary triangle (x + y, x, y), translated to the origin
  Vec<T> far = x + y;
  Vec<T> nx = scaled(x, T(-1)), ny = scaled(y, T(-1));
  out.z2 = far + circumcenter(Matrix<T>::from_columns({nx, ny}), tol).center;
  if constexpr (is_exact_v<T>) {
    out.multiplicity_two = is_zero(out.basis.inner());
  } else {
    out.multiplicity_two = std::abs(out.basis.cos_theta) < tol;
  }
  if (out.multiplicity_two) out.z2 = out.z1;
  const Matrix<T>& g = out.basis.reduced.gram;
  out.z1_coordinates = solve(g, half_diagonal(g));
  out.z1_input_coordinates = integer_cast<T>(out.basis.reduced.transform) * out.z1_coordinates;
  out.mu = covering_radius_gram(g);
  if constexpr (is_exact_v<T>) {
    bool rational = false;
    Integer n = denominator_lcm(out.z1_coordinates, rational);
    out.order_kind = rational ? OrderKind::kFinite : OrderKind::kInfinite;
    if (rational) out.order = n;
  }
  return out;
}

SiegelCheck siegel_bound_check(const GramLattice& lattice) {
  const QuadMatrix& g = lattice.gram();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!g(i, j).is_rational() || g(i, j).rational_part().get_den() != 1)
        fail_input("non-integer Gram matrix");
  DeepHoleOrder order = deep_hole_order(lattice);
  SiegelCheck out;
  out.order = order.order;
  out.lambda2_squared = order.reduced_gram(1, 1).rational_part().get_num();
  const Integer& l = out.lambda2_squared;
  // order <= 12 sqrt(3) l^2  <=>  order^2 <= 432 l^4
  out.holds = order.order * order.order <= Integer(432) * l * l * l * l;
  out.bound = 12.0 * std::sqrt(3.0) * l.get_d() * l.get_d();
  return out;
}

template <LatticeScalar T>
PlanarClassification<T> classify_planar(const Lattice<T>& lattice, double tol) {
  PlanarClassification<T> out;
  out.basis = gauss_reduce(lattice);
  const T& l1 = out.basis.x_norm2();
  const T& l2 = out.basis.y_norm2();
  const T& d = out.basis.inner();
  T det = l1 * l2 - d * d;
  out.well_rounded = compare(l1, l2, tol) == 0;
  out.semistable = compare(T(l1 * l1), det, tol) >= 0;
  if constexpr (is_exact_v<T>) {
    out.rectangular = is_zero(d);
  } else {
    out.rectangular = std::abs(out.basis.cos_theta) < tol;
  }
  out.equal_covering_extension = out.rectangular;
  out.a = d / l1;
  out.b_squared = det / (l1 * l1);
  out.b = sqrt_value(out.b_squared);
  return out;
}

#define LATEXT_INSTANTIATE_PLANAR(T)                                                      \
  template ReducedGram<T> gauss_reduce_gram(const Matrix<T>&);                            \
  template MinimalBasis<T> gauss_reduce(const Lattice<T>&);                               \
  template CoveringRadius<T> covering_radius_gram(const Matrix<T>&);                      \
  template CoveringRadius<T> circumradius_2d(const Lattice<T>&);                          \
  template Circumcenter<T> circumcenter(const Matrix<T>&, double);                        \
  template Vec<T> circumcenter_in(const Matrix<T>&, const Matrix<T>&);                    \
  template DeepHoleReport<T> deep_holes_2d(const Lattice<T>&, double);                    \
  template PlanarClassification<T> classify_planar(const Lattice<T>&, double);

LATEXT_INSTANTIATE_PLANAR(QuadScalar)
LATEXT_INSTANTIATE_PLANAR(double)

}  // namespace latext
