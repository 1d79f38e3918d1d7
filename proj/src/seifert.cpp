#include "kslice/seifert.hpp"

#include <random>

#include "kslice/errors.hpp"
#include "kslice/exact/determinant.hpp"

namespace kslice {

SeifertMatrix validate_seifert(const IntegerMatrix& m, std::optional<std::string> name) {
  if (!m.is_square())
    throw InvalidInput("not a Seifert matrix: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", not square");
  if (m.rows() % 2 != 0)
    throw InvalidInput("not a Seifert matrix: odd size " + std::to_string(m.rows()));
  const Integer d = determinant(m - m.transpose());
  if (d != 1) throw InvalidInput("not a Seifert matrix: det(V-V^T) = " + d.get_str() + " != 1");
  SeifertMatrix v;
  v.v_ = m;
  v.name_ = std::move(name);
  return v;
}

Matrix<QLaurent> alexander_presentation(const SeifertMatrix& v) {
  const IntegerMatrix& m = v.matrix();
  const std::size_t n = m.rows();
  Matrix<QLaurent> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = QLaurent::monomial(Rational(m(i, j)), 1) - QLaurent(Rational(m(j, i)));
  return a;
}

IntLaurent alexander_polynomial(const SeifertMatrix& v) {
  return normalize_sign(to_integer(determinant(alexander_presentation(v))));
}

long signature(const RationalMatrix& symmetric) {
  RationalMatrix a = symmetric;
  const std::size_t n = a.rows();
  long result = 0;
  auto swap_both = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry onto the diagonal, since (e_i + e_j) has norm 2 a_ij.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            off = {i, j};
            break;
          }
      if (!off) break;
      a.add_row_multiple(off->first, off->second, Rational(1));
      a.add_col_multiple(off->first, off->second, Rational(1));
      pivot = off->first;
    }
    swap_both(k, pivot);
    const Rational p = a(k, k);
    result += p > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = -a(i, k) / p;
      a.add_row_multiple(i, k, f);
      a.add_col_multiple(i, k, f);
    }
  }
  return result;
}

ClassicalInvariants classical_invariants(const SeifertMatrix& v) {
  const IntegerMatrix sym = v.matrix() + v.matrix().transpose();
  return {abs(determinant(sym)), signature(to_rational(sym))};
}

SeifertMatrix random_seifert(std::size_t genus, long bound, std::uint64_t seed) {
  if (bound < 0) throw InvalidInput("random_seifert: negative coefficient bound");
  const std::size_t n = 2 * genus;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntegerMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Integer x = entry(rng);
      v(i, j) = x;
      v(j, i) = x;
    }
  for (std::size_t k = 0; k < genus; ++k) v(2 * k, 2 * k + 1) += 1;
  return validate_seifert(v, "random(g=" + std::to_string(genus) + ",B=" + std::to_string(bound) +
                                 ",seed=" + std::to_string(seed) + ")");
}

}  // namespace kslice
