#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latext/exact_arith.hpp"
#include "latext/matrix.hpp"

namespace latext {

/// Default absolute tolerance for binary64 integrality and residual checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// Embedded lattice B Z^m in R^n; columns of the basis are the generators.
template <LatticeScalar T>
class Lattice {
 public:
  explicit Lattice(Matrix<T> basis, double tol = kDefaultTolerance);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const Matrix<T>& basis() const { return basis_; }
  const Matrix<T>& gram() const { return gram_; }
  Vec<T> column(std::size_t j) const { return basis_.column(j); }

  /// B c for integer coordinates c.
  Vec<T> point(const Vec<Integer>& coordinates) const;

  T det_squared() const { return det_.det_squared; }
  double det() const { return det_.det; }

 private:
  Matrix<T> basis_;
  Matrix<T> gram_;
  LatticeDeterminant<T> det_;
};

using ExactLattice = Lattice<QuadScalar>;
using RealLattice = Lattice<double>;

inline ExactLattice exact_lattice(const IntMatrix& basis) {
  return ExactLattice(integer_cast<QuadScalar>(basis));
}

/// Integer coordinates X with lattice.basis() * X == vectors. Throws
/// "not a sublattice" if some column is not an integer combination.
template <LatticeScalar T>
IntMatrix sublattice_coordinates(const Lattice<T>& lattice, const Matrix<T>& vectors,
                                 double tol = kDefaultTolerance);

/// lattice ∩ span(sub) == sub, i.e. sub is saturated inside lattice.
template <LatticeScalar T>
bool is_extension(const Lattice<T>& lattice, const Matrix<T>& sub, double tol = kDefaultTolerance);

/// [lattice : sub] for a full-rank sublattice.
template <LatticeScalar T>
Integer index(const Lattice<T>& lattice, const Matrix<T>& sub, double tol = kDefaultTolerance);

/// Rank-2 lattice known only through its exact Gram matrix.
class GramLattice {
 public:
  explicit GramLattice(QuadMatrix gram);

  const QuadMatrix& gram() const { return gram_; }
  const QuadScalar& lambda1_squared() const { return gram_(0, 0); }
  const QuadScalar& inner() const { return gram_(0, 1); }
  const QuadScalar& lambda2_squared() const { return gram_(1, 1); }

 private:
  QuadMatrix gram_;
};

/// One checked claim of an extension certificate.
struct Fact {
  std::string name;
  std::string exact;  // exact rendering, empty for binary64-only facts
  double value = 0.0;
  std::optional<bool> holds;
};

template <LatticeScalar T>
struct ExtensionReport {
  Lattice<T> parent;
  Lattice<T> result;
  Matrix<T> new_vectors;
  std::vector<Fact> facts;

  bool verified() const {
    for (const auto& f : facts)
      if (f.holds.has_value() && !*f.holds) return false;
    return true;
  }
};

Fact value_fact(std::string name, const QuadScalar& v);
Fact value_fact(std::string name, double v);
Fact check_fact(std::string name, bool holds, double value = 0.0, std::string exact = {});

}  // namespace latext
