#include "kslice/exact/linear_algebra.hpp"

#include "kslice/errors.hpp"

namespace kslice {

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> gauss_jordan(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    const Rational inv = 1 / a(row, col);
    a.scale_row(row, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = -a(i, col);
      a.add_row_multiple(i, row, f);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix row_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = gauss_jordan(a);
  RationalMatrix b(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = a(i, j);
  return b;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return gauss_jordan(a).size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = gauss_jordan(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(0, m.cols());
  return row_basis(RationalMatrix::from_rows(basis));
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = gauss_jordan(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw MathError("singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool in_row_space(const RationalMatrix& basis, std::span<const Rational> v) {
  RationalMatrix single(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) single(0, j) = v[j];
  return rank(stack_rows(basis, single)) == rank(basis);
}

RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("stack_rows: column mismatch");
  RationalMatrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

}  // namespace kslice
