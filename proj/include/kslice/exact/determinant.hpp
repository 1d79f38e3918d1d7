#pragma once

#include <stdexcept>

#include "kslice/exact/laurent.hpp"
#include "kslice/exact/matrix.hpp"

namespace kslice {

namespace detail {
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline QLaurent exact_quotient(const QLaurent& a, const QLaurent& b) { return divide_exact(a, b); }
inline IntLaurent exact_quotient(const IntLaurent& a, const IntLaurent& b) { return divide_exact(a, b); }
}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.  Works over any
/// integral domain whose exact quotient is available; the empty matrix has
/// determinant 1.
template <class T>
T determinant(Matrix<T> a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign(1);
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == T(0)) ++swap;
      if (swap == n) return T(0);
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = detail::exact_quotient(num, previous);
      }
      a(i, k) = T(0);
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace kslice
