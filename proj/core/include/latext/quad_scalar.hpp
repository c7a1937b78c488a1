#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace latext {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact real number a + b*sqrt(d) with a, b rational and d a squarefree
/// integer >= 2. Values with b == 0 are plain rationals and combine with
/// any field; two irrational operands must share the same radicand.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Integer& value) : a_(value) {}  // NOLINT
  QuadScalar(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT
  /// Non-squarefree radicands are normalized (sqrt(12) -> 2*sqrt(3)).
  QuadScalar(const Rational& a, const Rational& b, const Integer& d);

  /// Exact square root of a non-negative rational.
  static QuadScalar sqrt_of(const Rational& q);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// 1 when the value is rational.
  long radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const;
  QuadScalar conjugate() const;
  double to_double() const;
  std::string to_string() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadScalar& lhs, const QuadScalar& rhs);
  friend std::strong_ordering operator<=>(const QuadScalar& lhs, const QuadScalar& rhs);

 private:
  long common_radicand(const QuadScalar& rhs) const;
  void normalize();

  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 1;
};

/// Largest integer <= x, exact.
Integer floor(const QuadScalar& x);

/// Splits n > 0 as square^2 * squarefree. Throws when n has a cofactor too
/// large to certify squarefree by trial division.
void split_square(const Integer& n, Integer& square_root_part, Integer& squarefree_part);

bool is_squarefree(const Integer& n);

/// Correctly rounded binary64 value of sqrt(q), q >= 0.
double sqrt_to_double(const Rational& q);

}  // namespace latext
