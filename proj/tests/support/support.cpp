#include "support.hpp"

#include <cmath>
#include <sstream>

#include "latext/planar.hpp"

namespace latext::testing {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntMatrix random_full_rank(Rng& rng, std::size_t n, std::size_t m, long lo, long hi) {
  for (;;) {
    IntMatrix b(n, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) b(i, j) = uniform(rng, lo, hi);
    if (plucker_gcd(b) != 0) return b;
  }
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps, long spread) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    long q = uniform(rng, -spread, spread);
    for (std::size_t r = 0; r < n; ++r) u(r, i) += q * u(r, j);
    if (uniform(rng, 0, 3) == 0)
      for (std::size_t r = 0; r < n; ++r) std::swap(u(r, i), u(r, j));
  }
  return u;
}

QuadScalar sqrt_q(long n) { return QuadScalar::sqrt_of(Rational(n)); }

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QuadScalar frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return QuadScalar(q);
}

QuadMatrix hexagonal_basis() {
  return QuadMatrix::from_columns({{1, 0}, {frac(1, 2), sqrt_q(3) / QuadScalar(2)}});
}

QuadMatrix lprime_basis() { return QuadMatrix::from_columns({{1, 0}, {frac(1, 2), sqrt_q(3)}}); }

QuadMatrix identity_basis(std::size_t n) { return QuadMatrix::identity(n); }

Auditor& Auditor::instance() {
  static Auditor auditor;
  return auditor;
}

template <LatticeScalar T>
void Auditor::audit(const Lattice<T>& lattice, const std::string& origin) {
  const std::size_t m = lattice.rank();
  if (m == 0 || m > kMaxEnumerationRank) return;
  SuccessiveMinima<T> minima = successive_minima(lattice);
  double sum = 0.0;
  for (double v : minima.values) sum += v;
  double lower = 0.5 * minima.values.back();
  double upper = 0.5 * sum;
  bool exact = false;
  if (m == 1) {
    lower = upper = 0.5 * minima.values[0];
    exact = true;
  } else if (m == 2) {
    lower = upper = covering_radius_gram(lattice.gram()).mu;
    exact = true;
  } else {
    // the minima vectors span a sublattice whose Gram-Schmidt box covers space
    RealMatrix g = to_real(lattice.gram());
    std::vector<Vec<double>> gs;
    double box = 0.0;
    for (const auto& c : minima.coordinates) {
      Vec<double> v(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) v[i] = c[i].get_d();
      Vec<double> w = v;
      for (const auto& u : gs) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            num += w[i] * g(i, j) * u[j];
            den += u[i] * g(i, j) * u[j];
          }
        for (std::size_t i = 0; i < m; ++i) w[i] -= num / den * u[i];
      }
      double n2 = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) n2 += w[i] * g(i, j) * w[j];
      box += n2;
      gs.push_back(w);
    }
    upper = 0.5 * std::sqrt(box);
  }
  record(origin, minima.values, lattice.det(), lower, upper, exact);
}

void Auditor::record(const std::string& origin, const std::vector<double>& minima, double det,
                     double mu_lower, double mu_upper, bool mu_exact) {
  ++count_;
  constexpr double kRel = 1e-9;
  MinkowskiSandwich s = minkowski_sandwich(minima, det, kRel);
  double jarnik = jarnik_upper(minima);
  std::ostringstream why;
  if (!s.holds)
    why << "Minkowski " << s.lower << " <= " << s.product << " <= " << s.upper << "; ";
  if (mu_upper > jarnik * (1 + kRel)) why << "Jarnik upper: mu " << mu_upper << " > " << jarnik << "; ";
  if (mu_exact && mu_lower < 0.5 * minima.back() * (1 - kRel))
    why << "Jarnik lower: mu " << mu_lower << " < lambda_m/2; ";
  if (!why.str().empty()) violations_.push_back(origin + ": " + why.str());
}

template void Auditor::audit(const Lattice<QuadScalar>&, const std::string&);
template void Auditor::audit(const Lattice<double>&, const std::string&);

}  // namespace latext::testing
