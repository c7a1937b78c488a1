#include "latext/numfield.hpp"

#include <cstdlib>

namespace latext {

namespace {

constexpr long kMaxDiscriminant = 1000000;

void validate(long d) {
  if (d == 0 || d == 1) fail_input("D must not be 0 or 1");
  if (std::labs(d) > kMaxDiscriminant) fail_input("|D| exceeds 10^6");
  if (!is_squarefree(Integer(d))) fail_input("D must be squarefree");
}

long mod4(long d) { return ((d % 4) + 4) % 4; }

QuadScalar fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return QuadScalar(q);
}

}  // namespace

ExactLattice ring_lattice(long d) {
  validate(d);
  const long ad = std::labs(d);
  QuadScalar root(Rational(0), Rational(1), Integer(ad));  // sqrt|D|
  QuadScalar one(1);
  std::vector<Vec<QuadScalar>> cols;
  if (mod4(d) != 1) {
    if (d > 0) {
      cols = {{one, one}, {root, -root}};
    } else {
      cols = {{one, QuadScalar(0)}, {QuadScalar(0), root}};
    }
  } else {
    QuadScalar half(Rational(1, 2));
    if (d > 0) {
      cols = {{one, one}, {half + half * root, half - half * root}};
    } else {
      cols = {{one, QuadScalar(0)}, {half, half * root}};
    }
  }
  return ExactLattice(QuadMatrix::from_columns(cols));
}

OmegaClassification classify_omega(long d) {
  ExactLattice omega = ring_lattice(d);
  OmegaClassification out;
  out.d = d;
  out.extension = mod4(d) != 1;
  out.geometric = equal_covering_classify(omega);
  out.facts.push_back(
      check_fact("geometric_agrees", out.geometric.extension == out.extension));
  if (!out.extension) return out;

  const long ad = std::labs(d);
  QuadScalar root(Rational(0), Rational(1), Integer(ad));
  if (d > 0) {
    out.generator = {QuadScalar(1) + root, QuadScalar(1) - root};
    out.expected_mu_squared = fraction(d + 1, 2);
  } else {
    out.generator = {QuadScalar(1), root};
    out.expected_mu_squared = fraction(ad + 1, 4);
  }
  const QuadScalar& mu2 = out.geometric.mu.mu_squared;
  out.facts.push_back(check_fact("mu_matches_formula", mu2 == out.expected_mu_squared,
                                 mu2.to_double(), mu2.to_string()));
  out.facts.push_back(check_fact("mu_equals_half_generator",
                                 mu2 * QuadScalar(4) == norm2(out.generator)));
  out.facts.push_back(check_fact("generator_matches", out.geometric.generator == out.generator));
  return out;
}

}  // namespace latext
