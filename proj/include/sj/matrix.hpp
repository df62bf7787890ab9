#ifndef SJ_MATRIX_HPP
#define SJ_MATRIX_HPP

#include "sj/modp.hpp"
#include "sj/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sj {

struct dimension_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(int n) {
  return Vec<K>(static_cast<std::size_t>(n));
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const K& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
void vec_axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class K>
Vec<K> vec_scaled(const Vec<K>& v, const K& a) {
  Vec<K> r = v;
  for (K& x : r) x = x * a;
  return r;
}

// Dense exact matrix over K (Rational or Fp). Multiplication skips zero
// entries, which makes the sparse multiplication-operator matrices of the
// structure-constant algebras cheap despite the dense layout.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static Matrix identity(int n, const K& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return e_[idx(i, j)]; }
  const K& operator()(int i, int j) const { return e_[idx(i, j)]; }

  Vec<K> row(int i) const {
    Vec<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_row(int i, const Vec<K>& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (!is_zero(bkj)) r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix r = a;
    for (K& x : r.e_) x = s * x;
    return r;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw dimension_mismatch("matrix-vector shape");
    Vec<K> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const K& aij = (*this)(i, j);
        if (!is_zero(aij) && !is_zero(v[j])) r[i] += aij * v[j];
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  K trace() const {
    K t{};
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero_matrix() const {
    for (const K& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<K> flattened() const { return e_; }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.set_row(static_cast<int>(i), rows[i]);
    return m;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw dimension_mismatch("matrix shape");
  }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j);
  }

  int rows_, cols_;
  std::vector<K> e_;
};

// In-place reduced row-echelon form; returns pivot column indices. Exact.
template <class K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    K inv = m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) / inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::pair<Matrix<K>, std::vector<int>> rref(Matrix<K> m) {
  auto pivots = rref_in_place(m);
  // Drop trailing zero rows for a canonical result.
  Matrix<K> out(static_cast<int>(pivots.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {out, pivots};
}

template <class K>
int rank(const Matrix<K>& m) {
  Matrix<K> c = m;
  return static_cast<int>(rref_in_place(c).size());
}

// Nullspace basis, one vector per free column, in column order.
template <class K>
std::vector<Vec<K>> nullspace(const Matrix<K>& m, const K& one) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<K> v = zero_vec<K>(m.cols());
    v[c] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = K{} - r(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact solve of A x = b; nullopt when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw dimension_mismatch("solve rhs length");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;
  Vec<K> x = zero_vec<K>(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = r(static_cast<int>(i), a.cols());
  return x;
}

inline Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m, long long p) {
  Matrix<Fp> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod_p(m(i, j), p);
  return r;
}

inline Vec<Fp> reduce_mod_p(const Vec<Rational>& v, long long p) {
  Vec<Fp> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = reduce_mod_p(v[i], p);
  return r;
}

}  // namespace sj

#endif
