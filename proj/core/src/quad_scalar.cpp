#include "latext/quad_scalar.hpp"

#include <cmath>

#include "latext/error.hpp"
#include "latext/scalar.hpp"

namespace latext {

namespace {

// Cofactors left after trial division up to this bound are certified
// squarefree only while they stay below kTrialBound^3.
constexpr unsigned long kTrialBound = 1000000;

int sgn_of(const Rational& q) { return sgn(q); }

}  // namespace

void split_square(const Integer& n, Integer& square_root_part, Integer& squarefree_part) {
  if (n <= 0) fail_input("split_square: expected a positive integer");
  Integer rest = n;
  square_root_part = 1;
  squarefree_part = 1;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    int exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (int e = 0; e < exponent / 2; ++e) square_root_part *= p;
    if (exponent % 2 == 1) squarefree_part *= p;
  }
  if (rest == 1) return;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    square_root_part *= r;
    return;
  }
  // rest has no prime factor <= kTrialBound and is not a square, so a
  // repeated prime factor forces rest >= kTrialBound^3.
  Integer bound(kTrialBound);
  if (rest >= bound * bound * bound) fail_input("radicand too large to certify squarefree");
  squarefree_part *= rest;
}

bool is_squarefree(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return false;
  Integer s, f;
  split_square(m, s, f);
  return s == 1;
}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn_of(b_) == 0) return;
  if (d <= 0) fail_input("quadratic scalar radicand must be positive");
  Integer s, f;
  split_square(d, s, f);
  b_ *= s;
  if (!f.fits_slong_p()) fail_input("quadratic scalar radicand too large");
  d_ = f.get_si();
  normalize();
}

QuadScalar QuadScalar::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) fail_input("square root of a negative rational");
  if (sgn(q) == 0) return QuadScalar();
  // sqrt(n/m) = sqrt(n*m)/m
  Integer nm = q.get_num() * q.get_den();
  Integer s, f;
  split_square(nm, s, f);
  Rational coeff(s, q.get_den());
  coeff.canonicalize();
  if (f == 1) return QuadScalar(coeff);
  return QuadScalar(Rational(0), coeff, f);
}

void QuadScalar::normalize() {
  if (sgn_of(b_) == 0 || d_ == 1) {
    if (d_ == 1) a_ += b_;
    b_ = 0;
    d_ = 1;
  }
}

long QuadScalar::common_radicand(const QuadScalar& rhs) const {
  if (rhs.is_rational()) return d_;
  if (is_rational()) return rhs.d_;
  if (d_ != rhs.d_) {
    fail_input("mixed quadratic fields: sqrt(" + std::to_string(d_) + ") and sqrt(" +
               std::to_string(rhs.d_) + ")");
  }
  return d_;
}

int QuadScalar::sign() const {
  int sa = sgn_of(a_);
  int sb = sgn_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * d_;
  return a2 > b2d ? sa : sb;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

double QuadScalar::to_double() const {
  double a = a_.get_d();
  if (is_rational()) return a;
  double root = std::sqrt(static_cast<double>(d_));
  double b = b_.get_d();
  if ((a >= 0) == (b >= 0)) return a + b * root;
  // opposite signs: (a^2 - b^2 d) / (a - b sqrt d) avoids cancellation
  Rational norm = a_ * a_ - b_ * b_ * d_;
  return norm.get_d() / (a - b * root);
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn_of(a_) != 0) out = a_.get_str() + (sgn_of(b_) > 0 ? "+" : "");
  return out + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  long d = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  long d = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  if (rhs.is_rational()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    Rational a = a_;
    a_ = a * rhs.a_;
    b_ = a * rhs.b_;
    d_ = rhs.d_;
    normalize();
    return *this;
  }
  long d = common_radicand(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  if (rhs.sign() == 0) fail_input("division by zero");
  if (rhs.is_rational()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    normalize();
    return *this;
  }
  Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * rhs.d_;
  *this *= rhs.conjugate();
  a_ /= norm;
  b_ /= norm;
  normalize();
  return *this;
}

bool operator==(const QuadScalar& lhs, const QuadScalar& rhs) {
  if (lhs.is_rational() != rhs.is_rational()) return false;
  if (lhs.is_rational()) return lhs.a_ == rhs.a_;
  return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::strong_ordering operator<=>(const QuadScalar& lhs, const QuadScalar& rhs) {
  int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer floor(const QuadScalar& x) {
  if (x.is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.rational_part().get_num_mpz_t(),
               x.rational_part().get_den_mpz_t());
    return q;
  }
  double approx = std::floor(x.to_double());
  Integer k(approx);
  // correct the binary64 guess with exact comparisons
  while (QuadScalar(k) > x) k -= 1;
  while (QuadScalar(Integer(k + 1)) <= x) k += 1;
  return k;
}

double sqrt_to_double(const Rational& q) {
  if (sgn(q) < 0) fail_input("sqrt_to_double: negative argument");
  if (sgn(q) == 0) return 0.0;
  // n = floor(sqrt(q) 2^s) with at least 64 significant bits
  long s = 64 - static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) / 2 +
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) / 2 + 2;
  Integer num = q.get_num(), den = q.get_den();
  if (s >= 0) {
    num <<= static_cast<mp_bitcnt_t>(2 * s);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-2 * s);
  }
  Integer x, rem, n;
  mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_sqrt(n.get_mpz_t(), x.get_mpz_t());
  bool inexact = rem != 0 || n * n != x;

  const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  const long shift = bits - 53;
  Integer mant = n >> static_cast<mp_bitcnt_t>(shift);
  Integer low = n - (mant << static_cast<mp_bitcnt_t>(shift));
  Integer half = Integer(1) << static_cast<mp_bitcnt_t>(shift - 1);
  if (low > half || (low == half && (inexact || mant.get_ui() % 2 == 1))) ++mant;
  return std::ldexp(mant.get_d(), static_cast<int>(shift - s));
}

double sqrt_value(const QuadScalar& x) {
  if (!x.is_rational()) return std::sqrt(x.to_double());
  const Rational& q = x.rational_part();
  if (sgn(q) < 0) fail_input("sqrt_value: negative argument");
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53)
    return std::sqrt(q.get_num().get_d()) / std::sqrt(q.get_den().get_d());
  return sqrt_to_double(q);
}

}  // namespace latext
