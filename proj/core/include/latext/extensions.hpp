#pragma once

#include <optional>

#include "latext/enumeration.hpp"
#include "latext/lattice.hpp"
#include "latext/planar.hpp"

namespace latext {

/// Extension of span_Z(B) inside Z^n with det equal to the Plücker gcd of B.
ExtensionReport<QuadScalar> small_det_extension(const IntMatrix& b);

struct ShortExtension {
  Vec<Integer> y;
  ExtensionReport<QuadScalar> report;
};

/// For B of shape n x (n-1): y in Z^n completing B with
/// |y|^2 <= (g / det B)^2 + mu(B)^2.
ShortExtension short_extension_vector(const IntMatrix& b, double tol = kDefaultTolerance);

/// small_det_extension of the coordinates X, mapped into the lattice A Z^n.
template <LatticeScalar T>
ExtensionReport<T> ambient_extension(const Matrix<T>& a, const IntMatrix& x,
                                     double tol = kDefaultTolerance);

struct ConeParams {
  double lambda_k = 0.0;
  double mu = 0.0;
  double v_star = 0.0;
  double theta = 0.0;
  double r_theta = 0.0;
  double search_bound = 0.0;
  double residual = 0.0;             // unsquared relation at v_star
  double polynomial_residual = 0.0;  // squared polynomial at v_star
  bool polynomial_consistent = false;
  double smallest_polynomial_root = 0.0;
  bool smallest_root_agrees = false;
};

ConeParams solve_v_star(double lambda_k, double mu);

/// r(v) = lambda (v^2 + sqrt(1 - v^2)) / sqrt(1 - v^4).
double cone_radius(double lambda_k, double v);

/// |rho_V(x)| <= |x| cos(theta).
template <LatticeScalar T>
bool cone_membership(const Vec<T>& x, const Matrix<T>& v, double theta);

/// L_{k+1} = span{L_k, x} inside the full-rank lattice, keeping the first k
/// successive minima.
template <LatticeScalar T>
ExtensionReport<T> sm_extension(const Lattice<T>& lattice, const Matrix<T>& sub,
                                double tol = kDefaultTolerance);

ExactLattice lambda_alpha(const Rational& alpha);
RealLattice lambda_alpha(double alpha);

template <LatticeScalar T>
struct EqualCovering {
  bool extension = false;
  T alpha;
  double alpha_value = 0.0;
  T beta_squared;
  double beta = 0.0;
  Vec<T> generator;
  CoveringRadius<T> mu;
  MinimalBasis<T> basis;
  std::vector<Fact> facts;
};

template <LatticeScalar T>
EqualCovering<T> equal_covering_classify(const Lattice<T>& lattice,
                                         double tol = kDefaultTolerance);

/// Orthogonal rank-(k+1) lattice with the same covering radius, splitting x_1
/// as alpha x_1 + s w and (1 - alpha) x_1 - s w for w orthogonal to the span.
template <LatticeScalar T>
ExtensionReport<T> orthogonal_mu_extension(const Lattice<T>& lattice, const Rational& alpha,
                                           const std::optional<Vec<T>>& direction = std::nullopt,
                                           double tol = kDefaultTolerance);

}  // namespace latext
