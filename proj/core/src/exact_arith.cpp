#include "latext/exact_arith.hpp"

#include <numeric>

namespace latext {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// (col_p, col_j) <- (s col_p + t col_j, u col_p + v col_j)
void combine_columns(IntMatrix& m, std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer a = m(i, p);
    Integer b = m(i, j);
    m(i, p) = s * a + t * b;
    m(i, j) = u * a + v * b;
  }
}

// col_k -= q col_p
void subtract_multiple(IntMatrix& m, std::size_t k, std::size_t p, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) -= q * m(i, p);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t m = idx.size();
  for (std::size_t k = m; k-- > 0;) {
    if (idx[k] < n - m + k) {
      ++idx[k];
      for (std::size_t r = k + 1; r < m; ++r) idx[r] = idx[r - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Integer integer_determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) fail_input("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm column_hermite(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& h = out.hnf;
  IntMatrix& u = out.transform;
  std::size_t p = 0;
  for (std::size_t i = 0; i < h.rows() && p < h.cols(); ++i) {
    for (std::size_t j = p + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      if (h(i, p) == 0) {
        swap_columns(h, p, j);
        swap_columns(u, p, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(i, p).get_mpz_t(),
                 h(i, j).get_mpz_t());
      Integer uu = -h(i, j) / g;
      Integer vv = h(i, p) / g;
      combine_columns(h, p, j, s, t, uu, vv);
      combine_columns(u, p, j, s, t, uu, vv);
    }
    if (h(i, p) == 0) continue;
    if (h(i, p) < 0) {
      negate_column(h, p);
      negate_column(u, p);
    }
    for (std::size_t k = 0; k < p; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, k).get_mpz_t(), h(i, p).get_mpz_t());
      if (q == 0) continue;
      subtract_multiple(h, k, p, q);
      subtract_multiple(u, k, p, q);
    }
    ++p;
  }
  out.rank = p;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  HermiteForm hf = column_hermite(a);
  return hf.transform.select_columns(hf.rank, a.cols() - hf.rank);
}

IntMatrix saturation(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();
  if (m == 0 || m > n || column_hermite(b).rank != m) fail_input("not full column rank");
  if (m == n) return IntMatrix::identity(n);
  // Z^n ∩ span(B) = ker_Z(K^T) where K is a Z-basis of ker_Z(B^T)
  IntMatrix k = integer_kernel(b.transpose());
  IntMatrix c = integer_kernel(k.transpose());
  HermiteForm hf = column_hermite(c);
  return hf.hnf.select_columns(0, m);
}

PluckerCoordinates plucker_coordinates(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();
  if (m == 0 || m > n) fail_input("plucker coordinates need 1 <= m <= n");
  PluckerCoordinates out;
  out.gcd = 0;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    IntMatrix sub(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) sub(r, c) = b(idx[r], c);
    Integer minor = integer_determinant(sub);
    out.gcd = gcd(out.gcd, minor);
    out.minors.push_back(std::move(minor));
  } while (next_combination(idx, n));
  return out;
}

Integer plucker_gcd(const IntMatrix& b) { return plucker_coordinates(b).gcd; }

IntMatrix to_integer(const RatMatrix& m) {
  return m.map([](const Rational& q) {
    if (q.get_den() != 1) fail_input("expected an integral matrix");
    return Integer(q.get_num());
  });
}

IntMatrix unimodular_inverse(const IntMatrix& u) { return to_integer(inverse(to_rational(u))); }

IntMatrix complete_to_unimodular(const IntMatrix& c) {
  const std::size_t n = c.rows();
  const std::size_t m = c.cols();
  if (m == 0 || m > n) fail_input("input not extendable: expected 1 <= m <= n");
  if (plucker_gcd(c) != 1) fail_input("input not extendable: maximal minors not coprime");
  if (m == n) return c;
  // c^T W = [H | 0] with H unimodular; W^{-1}^T has c's span in front
  HermiteForm hf = column_hermite(c.transpose());
  IntMatrix completion = unimodular_inverse(hf.transform).transpose();
  for (std::size_t j = 0; j < m; ++j) completion.set_column(j, c.column(j));
  if (integer_determinant(completion) < 0) negate_column(completion, n - 1);
  return completion;
}

}  // namespace latext
