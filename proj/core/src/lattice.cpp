#include "latext/lattice.hpp"

#include <cstdio>

namespace latext {

std::string scalar_to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <LatticeScalar T>
Lattice<T>::Lattice(Matrix<T> basis, double tol)
    : basis_(std::move(basis)), gram_(gram_of(basis_)), det_{} {
  if (basis_.cols() == 0 || basis_.rows() == 0) fail_input("lattice basis must be nonempty");
  if (basis_.cols() > basis_.rows()) fail_input("lattice rank exceeds ambient dimension");
  if constexpr (is_exact_v<T>) {
    (void)tol;
    det_ = det_lattice(basis_);
  } else {
    det_ = det_lattice(basis_, std::min(tol, 1e-12));
  }
}

template <LatticeScalar T>
Vec<T> Lattice<T>::point(const Vec<Integer>& coordinates) const {
  return basis_ * integer_cast<T>(coordinates);
}

template <LatticeScalar T>
IntMatrix sublattice_coordinates(const Lattice<T>& lattice, const Matrix<T>& vectors, double tol) {
  if (vectors.rows() != lattice.ambient_dim()) fail_input("not a sublattice: dimension mismatch");
  const Matrix<T>& b = lattice.basis();
  Matrix<T> coords = solve(lattice.gram(), b.transpose() * vectors);
  IntMatrix out(coords.rows(), coords.cols());
  for (std::size_t j = 0; j < coords.cols(); ++j)
    for (std::size_t i = 0; i < coords.rows(); ++i)
      if (!as_integer(coords(i, j), out(i, j), tol)) fail_input("not a sublattice");
  // the normal equations only see the projection; check the residual too
  Matrix<T> residual = b * integer_cast<T>(out) - vectors;
  for (std::size_t j = 0; j < residual.cols(); ++j)
    for (std::size_t i = 0; i < residual.rows(); ++i)
      if (!is_zero(residual(i, j), tol)) fail_input("not a sublattice");
  return out;
}

template <LatticeScalar T>
bool is_extension(const Lattice<T>& lattice, const Matrix<T>& sub, double tol) {
  IntMatrix coords = sublattice_coordinates(lattice, sub, tol);
  if (coords.cols() == 0) return true;
  Integer g = plucker_gcd(coords);
  if (g == 0) fail_input("sublattice generators are linearly dependent");
  return g == 1;
}

template <LatticeScalar T>
Integer index(const Lattice<T>& lattice, const Matrix<T>& sub, double tol) {
  if (sub.cols() != lattice.rank()) fail_input("index: rank mismatch");
  IntMatrix coords = sublattice_coordinates(lattice, sub, tol);
  Integer d = abs(integer_determinant(coords));
  if (d == 0) fail_input("index: sublattice is not full rank");
  return d;
}

GramLattice::GramLattice(QuadMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != 2 || gram_.cols() != 2) fail_input("gram lattice must be 2x2");
  if (gram_(0, 1) != gram_(1, 0)) fail_input("gram matrix is not symmetric");
  if (gram_(0, 0).sign() <= 0 || gram_(1, 1).sign() <= 0 ||
      (gram_(0, 0) * gram_(1, 1) - gram_(0, 1) * gram_(0, 1)).sign() <= 0)
    fail_input("gram matrix is not positive definite");
}

Fact value_fact(std::string name, const QuadScalar& v) {
  return Fact{std::move(name), v.to_string(), v.to_double(), std::nullopt};
}

Fact value_fact(std::string name, double v) {
  return Fact{std::move(name), {}, v, std::nullopt};
}

Fact check_fact(std::string name, bool holds, double value, std::string exact) {
  return Fact{std::move(name), std::move(exact), value, holds};
}

template class Lattice<QuadScalar>;
template class Lattice<double>;

#define LATEXT_INSTANTIATE(T)                                                                 \
  template IntMatrix sublattice_coordinates<T>(const Lattice<T>&, const Matrix<T>&, double); \
  template bool is_extension<T>(const Lattice<T>&, const Matrix<T>&, double);                \
  template Integer index<T>(const Lattice<T>&, const Matrix<T>&, double);

LATEXT_INSTANTIATE(QuadScalar)
LATEXT_INSTANTIATE(double)

#undef LATEXT_INSTANTIATE

}  // namespace latext
