#pragma once

#include "latext/enumeration.hpp"
#include "latext/lattice.hpp"

namespace latext {

/// Lagrange–Gauss reduced Gram matrix: g(0,0) = lambda_1^2 <= g(1,1) =
/// lambda_2^2 and 0 <= g(0,1) <= g(0,0)/2, so the angle lies in [pi/3, pi/2].
template <LatticeScalar T>
struct ReducedGram {
  Matrix<T> gram;
  IntMatrix transform;  // reduced basis = basis * transform
};

template <LatticeScalar T>
ReducedGram<T> gauss_reduce_gram(const Matrix<T>& gram);

/// Minimal basis (x, y) of a rank-2 lattice.
template <LatticeScalar T>
struct MinimalBasis {
  Vec<T> x;
  Vec<T> y;
  ReducedGram<T> reduced;
  double cos_theta = 0.0;
  double theta = 0.0;

  const T& x_norm2() const { return reduced.gram(0, 0); }
  const T& y_norm2() const { return reduced.gram(1, 1); }
  const T& inner() const { return reduced.gram(0, 1); }
};

template <LatticeScalar T>
MinimalBasis<T> gauss_reduce(const Lattice<T>& lattice);

template <LatticeScalar T>
struct CoveringRadius {
  T mu_squared;
  double mu = 0.0;
};

/// mu^2 = l1^2 l2^2 (l1^2 + l2^2 - 2 x.y) / (4 (l1^2 l2^2 - (x.y)^2)) on a
/// minimal basis: the circumradius of the triangle (0, x, y).
template <LatticeScalar T>
CoveringRadius<T> covering_radius_gram(const Matrix<T>& gram);

template <LatticeScalar T>
CoveringRadius<T> covering_radius_2d(const Lattice<T>& lattice) {
  if (lattice.rank() != 2) fail_input("covering_radius_2d: rank must be 2");
  return covering_radius_gram(lattice.gram());
}

/// The same radius computed as |z| for the circumcenter z of (0, x, y).
template <LatticeScalar T>
CoveringRadius<T> circumradius_2d(const Lattice<T>& lattice);

/// Covering radius of the unit well-rounded lattice with angle theta.
double mu_theta(double theta);

template <LatticeScalar T>
struct Circumcenter {
  Vec<T> center;             // the solution inside span(points)
  Matrix<T> free_directions; // z + span(free_directions) is the full solution set
};

/// Points z with |z| = |z - x_i| for the columns x_i, i.e. X^T z = |x_i|^2 / 2.
template <LatticeScalar T>
Circumcenter<T> circumcenter(const Matrix<T>& points, double tol = kDefaultTolerance);

/// Unique solution of X^T z = |x_i|^2 / 2 with z in span(subspace).
template <LatticeScalar T>
Vec<T> circumcenter_in(const Matrix<T>& points, const Matrix<T>& subspace);

enum class OrderKind { kFinite, kInfinite, kUnknown };

struct DeepHoleOrder {
  OrderKind kind = OrderKind::kUnknown;
  Integer order = 0;                // set when kind == kFinite
  Vec<QuadScalar> coordinates;      // deep hole in the reduced basis
  QuadMatrix reduced_gram;
  IntMatrix transform;
  bool pq_criterion = false;        // orthogonal, or x.y / l1^2 and x.y / l2^2 rational
  bool criterion_agrees = false;
};

/// Order of the deep hole in R^2 / lattice, decided by rationality of its
/// basis coordinates.
DeepHoleOrder deep_hole_order(const GramLattice& lattice);

template <LatticeScalar T>
struct DeepHoleReport {
  Vec<T> z1;
  Vec<T> z2;
  bool multiplicity_two = false;
  Vec<T> z1_coordinates;        // in the minimal basis
  Vec<T> z1_input_coordinates;  // in the input basis
  OrderKind order_kind = OrderKind::kUnknown;
  Integer order = 0;
  MinimalBasis<T> basis;
  CoveringRadius<T> mu;
};

template <LatticeScalar T>
DeepHoleReport<T> deep_holes_2d(const Lattice<T>& lattice, double tol = kDefaultTolerance);

struct SiegelCheck {
  bool holds = false;
  Integer order = 0;
  Integer lambda2_squared = 0;
  double bound = 0.0;  // 12 sqrt(3) lambda_2^4
};

/// Checks order <= 12 sqrt(3) lambda_2^4 for an integral Gram matrix.
SiegelCheck siegel_bound_check(const GramLattice& lattice);

template <LatticeScalar T>
struct PlanarClassification {
  bool well_rounded = false;
  bool semistable = false;
  bool rectangular = false;
  bool equal_covering_extension = false;
  T a;          // similarity point (a, b) in {0 <= a <= 1/2, a^2 + b^2 >= 1}
  T b_squared;
  double b = 0.0;
  MinimalBasis<T> basis;
};

template <LatticeScalar T>
PlanarClassification<T> classify_planar(const Lattice<T>& lattice, double tol = kDefaultTolerance);

}  // namespace latext
