#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kslice/exact/laurent.hpp"
#include "kslice/exact/matrix.hpp"

namespace kslice {

/// Euclidean structure used by the Smith reduction.
template <class T>
struct EuclideanRing;

template <>
struct EuclideanRing<Integer> {
  static Integer norm(const Integer& a) { return abs(a); }
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  /// Unit u such that u * a is the preferred associate (non-negative).
  static Integer normalizing_unit(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
};

/// Q[t^{+-1}] with norm span = high - low exponent; associates are
/// normalised to monic polynomials with lowest exponent 0.
template <>
struct EuclideanRing<QLaurent> {
  static int norm(const QLaurent& a) { return a.span(); }
  static std::pair<QLaurent, QLaurent> divmod(const QLaurent& a, const QLaurent& b) { return laurent_divmod(a, b); }
  static QLaurent normalizing_unit(const QLaurent& a) {
    return QLaurent::monomial(Rational(1) / a.leading(), -a.low_degree());
  }
};

/// left * input * right == diagonal, with left and right invertible over
/// the ring and the diagonal entries forming a divisibility chain.
template <class T>
struct SmithForm {
  Matrix<T> diagonal;
  Matrix<T> left;
  Matrix<T> right;
  Matrix<T> right_inverse;

  /// The min(rows, cols) diagonal entries, in order.
  std::vector<T> diagonal_entries() const {
    std::vector<T> d;
    const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

namespace detail {

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const Matrix<T>& a, std::size_t start) {
  using Ring = EuclideanRing<T>;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = start; i < a.rows(); ++i)
    for (std::size_t j = start; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      if (!best || Ring::norm(a(i, j)) < Ring::norm(a(best->first, best->second))) best = {i, j};
    }
  return best;
}

}  // namespace detail

/// Smith normal form over a Euclidean domain: repeated minimal-norm pivoting
/// with Euclidean row and column reduction, followed by a divisibility fix-up
/// that folds an offending row into the pivot row.
template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& input) {
  using Ring = EuclideanRing<T>;
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithForm<T> s{input, Matrix<T>::identity(m), Matrix<T>::identity(n), Matrix<T>::identity(n)};
  Matrix<T>& a = s.diagonal;

  auto column_op = [&](std::size_t target, std::size_t source, const T& factor) {
    // col_target += factor * col_source; the inverse adds -factor * row_target
    // of right_inverse into row_source.
    a.add_col_multiple(target, source, factor);
    s.right.add_col_multiple(target, source, factor);
    s.right_inverse.add_row_multiple(source, target, -factor);
  };
  auto row_op = [&](std::size_t target, std::size_t source, const T& factor) {
    a.add_row_multiple(target, source, factor);
    s.left.add_row_multiple(target, source, factor);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool finished = false;
    while (true) {
      auto pivot = detail::smallest_pivot(a, t);
      if (!pivot) {
        finished = true;
        break;
      }
      a.swap_rows(t, pivot->first);
      s.left.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      s.right.swap_cols(t, pivot->second);
      s.right_inverse.swap_rows(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == T(0)) continue;
        auto [q, r] = Ring::divmod(a(i, t), a(t, t));
        row_op(i, t, -q);
        if (!(r == T(0))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == T(0)) continue;
        auto [q, r] = Ring::divmod(a(t, j), a(t, t));
        column_op(j, t, -q);
        if (!(r == T(0))) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) == T(0)) continue;
          if (!(Ring::divmod(a(i, j), a(t, t)).second == T(0))) {
            offending = i;
            break;
          }
        }
      if (!offending) break;
      row_op(t, *offending, T(1));
    }
    if (finished) break;
    const T unit = Ring::normalizing_unit(a(t, t));
    a.scale_row(t, unit);
    s.left.scale_row(t, unit);
  }
  return s;
}

using IntegerSmithForm = SmithForm<Integer>;
using LaurentSmithForm = SmithForm<QLaurent>;

/// U * m * W = D over the integers; diagonal entries non-negative.
IntegerSmithForm smith_normal_form_int(const IntegerMatrix& m);

/// Smith form over Q[t^{+-1}]; nonzero diagonal entries are monic with
/// lowest exponent 0, so units appear as 1.
LaurentSmithForm smith_normal_form_laurent(const Matrix<QLaurent>& m);

/// The invariant factors of a Laurent matrix: the diagonal of its Smith form.
std::vector<QLaurent> invariant_factors(const Matrix<QLaurent>& m);

}  // namespace kslice
