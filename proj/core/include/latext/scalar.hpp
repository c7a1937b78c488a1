#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <type_traits>

#include "latext/quad_scalar.hpp"

namespace latext {

/// Scalars a lattice basis may carry: exact quadratic numbers or binary64.
template <class T>
concept LatticeScalar = std::same_as<T, QuadScalar> || std::same_as<T, double>;

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

inline double to_double(double x) { return x; }
inline double to_double(const QuadScalar& x) { return x.to_double(); }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const Integer& x) { return x.get_d(); }

/// Binary64 square root of a square. A rational p/q with p, q < 2^53 gives
/// sqrt(p)/sqrt(q), so 1/3 -> 1/sqrt(3.0); larger ones are correctly rounded.
inline double sqrt_value(double x) { return std::sqrt(x); }
double sqrt_value(const QuadScalar& x);

inline int sign_of(double x) { return (x > 0) - (x < 0); }
inline int sign_of(const QuadScalar& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const Integer& x) { return sgn(x); }

/// Exact zero test for exact scalars; |x| <= tol for binary64.
inline bool is_zero(const QuadScalar& x, double /*tol*/ = 0.0) { return x.sign() == 0; }
inline bool is_zero(double x, double tol = 0.0) { return std::abs(x) <= tol; }

inline Integer floor_integer(const QuadScalar& x) { return floor(x); }
inline Integer floor_integer(double x) { return Integer(std::floor(x)); }

/// Nearest integer, halves rounded up.
template <LatticeScalar T>
Integer round_integer(const T& x) {
  return floor_integer(x + T(Rational(1, 2)));
}
template <>
inline Integer round_integer<double>(const double& x) {
  return Integer(std::floor(x + 0.5));
}

template <LatticeScalar T>
T from_integer(const Integer& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v.get_d();
  } else {
    return QuadScalar(v);
  }
}

template <LatticeScalar T>
T from_rational(const Rational& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v.get_d();
  } else {
    return QuadScalar(v);
  }
}

inline std::string scalar_to_string(const QuadScalar& x) { return x.to_string(); }
std::string scalar_to_string(double x);

/// Three-way comparison; binary64 values within tol*max(1,|a|,|b|) compare equal.
inline int compare(const QuadScalar& a, const QuadScalar& b, double /*tol*/ = 0.0) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational_part(), b.rational_part());
    return (c > 0) - (c < 0);
  }
  return (a - b).sign();
}
inline int compare(double a, double b, double tol = 0.0) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) <= tol * scale) return 0;
  return a < b ? -1 : 1;
}

/// Integer value of x if it is one (within tol for binary64).
inline bool as_integer(const QuadScalar& x, Integer& out, double /*tol*/ = 0.0) {
  if (!x.is_rational() || x.rational_part().get_den() != 1) return false;
  out = x.rational_part().get_num();
  return true;
}
inline bool as_integer(double x, Integer& out, double tol) {
  double r = std::round(x);
  if (std::abs(x - r) > tol) return false;
  out = Integer(r);
  return true;
}

}  // namespace latext
