#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhorep {

/// Dense matrix over a ring T. T supplies +, -, *, ==, is_zero() and
/// free functions zero_like / one_like. Field operations (/) are needed
/// only by the elimination routines below.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(size_t n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }
  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix column(size_t j) const {
    Matrix c(rows_, 1, zero_);
    for (size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix columns(size_t from, size_t to) const {
    Matrix c(rows_, to - from, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = from; j < to; ++j) c(i, j - from) = (*this)(i, j);
    return c;
  }

  Matrix block(size_t r0, size_t r1, size_t c0, size_t c1) const {
    Matrix b(r1 - r0, c1 - c0, zero_);
    for (size_t i = r0; i < r1; ++i)
      for (size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
    return b;
  }

  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix m(rows_, cols_ + o.cols_, zero_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> m(rows_, cols_, f(zero_));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch " + std::to_string(a.cols_) + " vs " +
                                  std::to_string(b.rows_));
    Matrix m(a.rows_, b.cols_, a.zero_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v = s * v;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

template <class T>
Matrix<T> mat_pow(const Matrix<T>& m, unsigned k) {
  Matrix<T> out = Matrix<T>::identity(m.rows(), one_like(m.zero())), base = m;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = one_like(m.zero()) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0} as columns, one per free variable.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix<T> out(m.cols(), free.size(), m.zero());
  T one = one_like(m.zero());
  for (size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = one;
    for (size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -m(i, free[k]);
  }
  return out;
}

/// Some solution X of a X = b, or nullopt when inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Matrix<T> aug = a.hcat(b);
  auto piv = rref(aug);
  for (auto p : piv)
    if (p >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols(), a.zero());
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, a.cols() + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  auto x = solve(m, Matrix<T>::identity(m.rows(), one_like(m.zero())));
  if (!x || rank(m) != m.rows()) throw std::domain_error("singular matrix");
  return *x;
}

/// Columns of m that extend `start` to a maximal independent set, chosen greedily left to right.
template <class T>
std::vector<size_t> extend_independent(const Matrix<T>& start, const Matrix<T>& m) {
  std::vector<size_t> picked;
  Matrix<T> cur = start;
  size_t rk = cur.cols() ? rank(cur) : 0;
  for (size_t j = 0; j < m.cols(); ++j) {
    Matrix<T> trial = cur.cols() ? cur.hcat(m.column(j)) : m.column(j);
    size_t rt = rank(trial);
    if (rt > rk) {
      cur = std::move(trial);
      rk = rt;
      picked.push_back(j);
    }
  }
  return picked;
}

}  // namespace rhorep
