#pragma once

#include <cmath>
#include <vector>

#include "latext/matrix.hpp"

namespace latext {

/// Column-style Hermite normal form: hnf = a * transform, transform
/// unimodular, the first `rank` columns of hnf in lower echelon form with
/// positive pivots and reduced entries left of each pivot, the rest zero.
struct HermiteForm {
  IntMatrix hnf;
  IntMatrix transform;
  std::size_t rank = 0;
};

HermiteForm column_hermite(const IntMatrix& a);

/// Z-basis (as columns) of { x in Z^cols : a x = 0 }.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of Z^n ∩ span_Q(b), in column Hermite form.
IntMatrix saturation(const IntMatrix& b);

/// Unimodular n×n matrix whose first m columns are the columns of c.
/// Requires the maximal minors of c to be coprime.
IntMatrix complete_to_unimodular(const IntMatrix& c);

struct PluckerCoordinates {
  Integer gcd;                  // 0 iff rank-deficient
  std::vector<Integer> minors;  // lexicographic order of row-index tuples
};

PluckerCoordinates plucker_coordinates(const IntMatrix& b);
Integer plucker_gcd(const IntMatrix& b);

/// Squared co-volume det(B^T B), exact when T is; det as binary64.
template <class T>
struct LatticeDeterminant {
  T det_squared;
  double det = 0.0;
};

template <class T>
LatticeDeterminant<T> det_lattice(const Matrix<T>& basis, double tol = 1e-12) {
  Matrix<T> g = gram_of(basis);
  T d2 = determinant(g, 0.0);
  bool degenerate = false;
  if constexpr (is_exact_v<T>) {
    degenerate = sign_of(d2) <= 0;
  } else {
    double scale = 1.0;
    for (std::size_t i = 0; i < g.rows(); ++i) scale *= std::max(g(i, i), 0.0);
    degenerate = !(d2 > tol * scale);
  }
  if (degenerate) fail_input("rank-deficient basis: lattice determinant is 0");
  return {d2, sqrt_value(d2)};
}

/// rho = B (B^T B)^{-1} B^T, the orthogonal projection onto span B.
template <class T>
Matrix<T> orthogonal_projection(const Matrix<T>& basis) {
  Matrix<T> g = gram_of(basis);
  if (rank_of(g) != basis.cols()) fail_input("orthogonal projection: basis not full column rank");
  return basis * solve(g, basis.transpose());
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.map([](const Integer& v) { return Rational(v); });
}

/// Converts a rational matrix with integral entries; throws otherwise.
IntMatrix to_integer(const RatMatrix& m);

/// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace latext
