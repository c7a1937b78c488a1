#pragma once

#include "latext/extensions.hpp"

namespace latext {

/// Minkowski embedding of the ring of integers of Q(sqrt(D)).
ExactLattice ring_lattice(long d);

struct OmegaClassification {
  long d = 0;
  bool extension = false;           // D != 1 mod 4
  Vec<QuadScalar> generator;        // Sigma_K(1 + sqrt(D)) when extension
  QuadScalar expected_mu_squared;   // (D+1)/2 or (|D|+1)/4 when extension
  EqualCovering<QuadScalar> geometric;
  std::vector<Fact> facts;

  bool verified() const {
    for (const auto& f : facts)
      if (f.holds.has_value() && !*f.holds) return false;
    return true;
  }
};

OmegaClassification classify_omega(long d);

}  // namespace latext
