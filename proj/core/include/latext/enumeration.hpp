#pragma once

#include <vector>

#include "latext/lattice.hpp"

namespace latext {

/// Largest rank the exact enumerators accept.
inline constexpr std::size_t kMaxEnumerationRank = 6;

/// A lattice point given by integer coordinates in the input basis.
template <LatticeScalar T>
struct LatticePoint {
  Vec<Integer> coordinates;
  T norm_squared;
};

template <LatticeScalar T>
struct SuccessiveMinima {
  std::vector<T> squared;  // lambda_i^2, exact when T is
  std::vector<double> values;
  std::vector<Vec<Integer>> coordinates;  // attaining vectors, input-basis coordinates
};

/// lambda_1..lambda_count of the lattice with the given Gram matrix, with
/// attaining vectors chosen by (norm, lexicographic coordinates) among
/// sign-canonical candidates. count = 0 means all of them.
template <LatticeScalar T>
SuccessiveMinima<T> successive_minima_gram(const Matrix<T>& gram, std::size_t count = 0,
                                           double tol = kDefaultTolerance);

template <LatticeScalar T>
SuccessiveMinima<T> successive_minima(const Lattice<T>& lattice, std::size_t count = 0,
                                      double tol = kDefaultTolerance) {
  return successive_minima_gram(lattice.gram(), count, tol);
}

/// Every nonzero point with norm^2 <= radius_squared, sorted by norm then
/// coordinates. Both members of each ± pair are listed.
template <LatticeScalar T>
std::vector<LatticePoint<T>> points_in_ball(const Matrix<T>& gram, const T& radius_squared,
                                            double tol = kDefaultTolerance);

/// Like points_in_ball, restricted to norm^2 >= inner_squared. Points up to a
/// relative 1e-9 below the inner radius may also appear.
template <LatticeScalar T>
std::vector<LatticePoint<T>> points_in_shell(const Matrix<T>& gram, double inner_squared,
                                             const T& radius_squared,
                                             double tol = kDefaultTolerance);

template <LatticeScalar T>
struct ClosestVector {
  Vec<Integer> coordinates;
  Vec<T> vector;  // empty when computed from a Gram matrix alone
  T distance_squared;
  double distance = 0.0;
};

/// Closest lattice vector to a point given by (possibly fractional)
/// coordinates in the basis. Ties go to the lexicographically smallest
/// integer coordinate vector.
template <LatticeScalar T>
ClosestVector<T> closest_vector_coordinates(const Matrix<T>& gram, const Vec<T>& center,
                                            double tol = kDefaultTolerance);

/// Closest vector to t; t is projected onto span L first.
template <LatticeScalar T>
ClosestVector<T> closest_vector(const Lattice<T>& lattice, const Vec<T>& target,
                                double tol = kDefaultTolerance);

/// Jarnik's upper bound (1/2) sum lambda_i on the covering radius.
template <LatticeScalar T>
double jarnik_upper(const Lattice<T>& lattice) {
  double s = 0.0;
  for (double v : successive_minima(lattice).values) s += v;
  return 0.5 * s;
}

inline double jarnik_upper(const std::vector<double>& minima) {
  double s = 0.0;
  for (double v : minima) s += v;
  return 0.5 * s;
}

/// Volume of the m-dimensional unit ball.
double unit_ball_volume(std::size_t m);

/// Minkowski's second theorem: 2^m det/(m! w_m) <= prod lambda_i <= 2^m det/w_m.
struct MinkowskiSandwich {
  double lower = 0.0;
  double product = 0.0;
  double upper = 0.0;
  bool holds = false;
};

MinkowskiSandwich minkowski_sandwich(const std::vector<double>& minima, double det,
                                     double rel_tol = 1e-9);

/// Unimodular U with U^T G U LLL-reduced (binary64 arithmetic on the Gram
/// matrix; only used to precondition enumeration).
IntMatrix lll_transform(const RealMatrix& gram, double delta = 0.99);

/// True iff the integer vectors (columns) are linearly independent.
bool independent(const std::vector<Vec<Integer>>& vectors);

/// Flips v so its first nonzero entry is positive; returns false for 0.
bool sign_canonical(Vec<Integer>& v);

}  // namespace latext
