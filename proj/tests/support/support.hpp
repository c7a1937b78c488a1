#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latext/enumeration.hpp"
#include "latext/lattice.hpp"

namespace latext::testing {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt) { return Rng(0x5eed1a77ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

long uniform(Rng& rng, long lo, long hi);

/// Random integer n x m matrix of full column rank, entries in [lo, hi].
IntMatrix random_full_rank(Rng& rng, std::size_t n, std::size_t m, long lo, long hi);

/// Random unimodular n x n matrix built from elementary column operations.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 8, long spread = 2);

QuadScalar sqrt_q(long n);
QuadScalar frac(long num, long den);
Rational ratio(long num, long den);

QuadMatrix hexagonal_basis();  // (1,0), (1/2, sqrt3/2)
QuadMatrix lprime_basis();     // (1,0), (1/2, sqrt3)
QuadMatrix identity_basis(std::size_t n);

/// Checks Minkowski's second theorem and Jarnik's inequalities on a lattice
/// and keeps a running tally of everything it has seen.
class Auditor {
 public:
  static Auditor& instance();

  template <LatticeScalar T>
  void audit(const Lattice<T>& lattice, const std::string& origin);

  std::size_t count() const { return count_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  void record(const std::string& origin, const std::vector<double>& minima, double det,
              double mu_lower, double mu_upper, bool mu_exact);

  std::size_t count_ = 0;
  std::vector<std::string> violations_;
};

template <LatticeScalar T>
void audit(const Lattice<T>& lattice, const std::string& origin) {
  Auditor::instance().audit(lattice, origin);
}

}  // namespace latext::testing
