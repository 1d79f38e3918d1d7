#pragma once

#include <vector>

#include "kslice/exact/laurent.hpp"

namespace kslice {

struct RationalFactor {
  /// Monic, lowest exponent 0.
  QLaurent polynomial;
  int multiplicity = 1;
  /// False for a rootless remainder of degree >= 3 that may still split.
  bool resolved = true;

  friend bool operator==(const RationalFactor&, const RationalFactor&) = default;
};

struct RationalFactorization {
  /// c * t^k such that f = unit * prod factor^multiplicity.
  QLaurent unit;
  std::vector<RationalFactor> factors;

  bool fully_resolved() const;
  QLaurent product() const;
};

/// Partial factorisation over Q: squarefree split, every rational root
/// extracted, quadratic remainders certified irreducible by their
/// discriminant, higher-degree rootless remainders flagged unresolved.
/// Factors are ordered by degree, then by coefficients from the constant term up.
RationalFactorization factor_over_rationals(const QLaurent& f);

/// Squarefree decomposition of a monic ordinary polynomial: pairs
/// (a_i, i) with f = prod a_i^i and each a_i squarefree; constant a_i omitted.
std::vector<std::pair<QLaurent, int>> squarefree_decomposition(const QLaurent& f);

/// Rational roots of a nonzero polynomial with nonzero constant term, ascending.
std::vector<Rational> rational_roots(const QLaurent& f);

}  // namespace kslice
