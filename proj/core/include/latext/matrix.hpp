#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "latext/error.hpp"
#include "latext/scalar.hpp"

namespace latext {

template <class T>
using Vec = std::vector<T>;

/// Dense matrix. Columns are the generators of whatever the matrix spans.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& columns) {
    if (columns.empty()) return Matrix();
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) fail_input("ragged column list");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail_input("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  Vec<T> column(std::size_t j) const {
    return Vec<T>(data_.begin() + j * rows_, data_.begin() + (j + 1) * rows_);
  }
  void set_column(std::size_t j, const Vec<T>& v) {
    assert(v.size() == rows_);
    std::copy(v.begin(), v.end(), data_.begin() + j * rows_);
  }
  std::vector<Vec<T>> columns() const {
    std::vector<Vec<T>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns of *this followed by the columns of rhs.
  Matrix concat_columns(const Matrix& rhs) const {
    if (empty()) return rhs;
    if (rhs.cols_ == 0) return *this;
    if (rhs.rows_ != rows_) fail_input("column concatenation: row mismatch");
    Matrix m(rows_, cols_ + rhs.cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(rhs.data_.begin(), rhs.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  Matrix select_columns(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    std::copy(data_.begin() + first * rows_, data_.begin() + (first + count) * rows_,
              m.data_.begin());
    return m;
  }

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    Matrix<decltype(fn(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) out(i, j) = fn((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail_input("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& bkj = b(k, j);
        if (sign_of(bkj) == 0) continue;
        for (std::size_t i = 0; i < a.rows_; ++i) c(i, j) += a(i, k) * bkj;
      }
    return c;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& x) {
    if (a.cols_ != x.size()) fail_input("matrix-vector product: shape mismatch");
    Vec<T> y(a.rows_, T(0));
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sign_of(x[k]) == 0) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) y[i] += a(i, k) * x[k];
    }
    return y;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadScalar>;
using RealMatrix = Matrix<double>;

template <class T>
T dot(const Vec<T>& u, const Vec<T>& v) {
  T s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

template <class T>
T norm2(const Vec<T>& u) {
  return dot(u, u);
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> scaled(Vec<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// B^T B.
template <class T>
Matrix<T> gram_of(const Matrix<T>& basis) {
  Matrix<T> g(basis.cols(), basis.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t j = i; j < basis.cols(); ++j) {
      T s(0);
      for (std::size_t r = 0; r < basis.rows(); ++r) s += basis(r, i) * basis(r, j);
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

template <class T>
Matrix<T> integer_cast(const IntMatrix& m) {
  return m.map([](const Integer& v) { return from_integer<T>(v); });
}

template <class T>
Vec<T> integer_cast(const Vec<Integer>& v) {
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_integer<T>(x));
  return out;
}

inline RealMatrix to_real(const QuadMatrix& m) {
  return m.map([](const QuadScalar& x) { return x.to_double(); });
}
inline RealMatrix to_real(const RealMatrix& m) { return m; }

namespace detail {

// Pivot choice: first nonzero entry for exact fields, largest magnitude
// above tol for binary64.
template <class T>
std::ptrdiff_t pick_pivot(const Matrix<T>& a, std::size_t col, std::size_t from, double tol) {
  std::ptrdiff_t best = -1;
  if constexpr (is_exact_v<T>) {
    for (std::size_t r = from; r < a.rows(); ++r)
      if (sign_of(a(r, col)) != 0) return static_cast<std::ptrdiff_t>(r);
  } else {
    double best_abs = tol;
    for (std::size_t r = from; r < a.rows(); ++r) {
      double v = std::abs(a(r, col));
      if (v > best_abs) {
        best_abs = v;
        best = static_cast<std::ptrdiff_t>(r);
      }
    }
  }
  return best;
}

}  // namespace detail

/// Row echelon form by Gaussian elimination; returns pivot columns.
template <class T>
std::vector<std::size_t> row_echelon(Matrix<T>& a, double tol = 1e-12) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    auto p = detail::pick_pivot(a, col, row, tol);
    if (p < 0) continue;
    if (static_cast<std::size_t>(p) != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (sign_of(a(r, col)) == 0) continue;
      T f = a(r, col) / a(row, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank_of(Matrix<T> a, double tol = 1e-12) {
  return row_echelon(a, tol).size();
}

template <class T>
T determinant(Matrix<T> a, double tol = 0.0) {
  if (a.rows() != a.cols()) fail_input("determinant of a non-square matrix");
  T det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::pick_pivot(a, c, c, tol);
    if (p < 0) return T(0);
    if (static_cast<std::size_t>(p) != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sign_of(a(r, c)) == 0) continue;
      T f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer integer_determinant(IntMatrix a);

/// Basis (as columns) of { x : a x = 0 } over the field T.
template <class T>
Matrix<T> nullspace(Matrix<T> a, double tol = 1e-12) {
  std::vector<std::size_t> pivots = row_echelon(a, tol);
  const std::size_t n = a.cols();
  // back-substitute to reduced echelon form
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    T inv = T(1) / a(k, c);
    for (std::size_t j = c; j < n; ++j) a(k, j) *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (sign_of(a(r, c)) == 0) continue;
      T f = a(r, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(n, T(0));
    v[free] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix<T>(n, 0);
  return Matrix<T>::from_columns(basis);
}

/// Solves A X = B for square nonsingular A.
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b, double tol = 1e-14) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) fail_input("solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::pick_pivot(a, c, c, tol);
    if (p < 0) fail_input("singular system");
    if (static_cast<std::size_t>(p) != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(c, j), b(p, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sign_of(a(r, c)) == 0) continue;
      T f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(c, j);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    T inv = T(1) / a(r, r);
    for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) *= inv;
  }
  return b;
}

template <class T>
Vec<T> solve(const Matrix<T>& a, const Vec<T>& b, double tol = 1e-14) {
  return solve(a, Matrix<T>::from_columns({b}), tol).column(0);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, double tol = 1e-14) {
  return solve(a, Matrix<T>::identity(a.rows()), tol);
}

}  // namespace latext
