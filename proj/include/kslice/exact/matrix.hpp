#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "kslice/exact/integer.hpp"

namespace kslice {

/// Dense row-major matrix over an exact coefficient type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
  }
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
  }
  void scale_row(std::size_t i, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= factor;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = -x;
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// Row vector times matrix.
template <class T>
std::vector<T> row_times(std::type_identity_t<std::span<const T>> x, const Matrix<T>& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
  std::vector<T> y(m.cols(), T(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

/// Matrix times column vector.
template <class T>
std::vector<T> times_column(const Matrix<T>& m, std::type_identity_t<std::span<const T>> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<T> y(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

inline RationalMatrix to_rational(const IntegerMatrix& m) {
  return m.map([](const Integer& x) { return Rational(x); });
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

}  // namespace kslice
