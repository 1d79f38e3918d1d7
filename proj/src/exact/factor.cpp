#include "kslice/exact/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "kslice/errors.hpp"

namespace kslice {

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool coefficients_less(const QLaurent& a, const QLaurent& b) {
  if (a.high_degree() != b.high_degree()) return a.high_degree() < b.high_degree();
  for (int e = 0; e <= a.high_degree(); ++e) {
    const Rational x = a.coefficient(e);
    const Rational y = b.coefficient(e);
    if (x != y) return x < y;
  }
  return false;
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

}  // namespace

bool RationalFactorization::fully_resolved() const {
  return std::all_of(factors.begin(), factors.end(), [](const RationalFactor& f) { return f.resolved; });
}

QLaurent RationalFactorization::product() const {
  QLaurent p = unit;
  for (const auto& f : factors)
    for (int k = 0; k < f.multiplicity; ++k) p = p * f.polynomial;
  return p;
}

std::vector<std::pair<QLaurent, int>> squarefree_decomposition(const QLaurent& f) {
  std::vector<std::pair<QLaurent, int>> out;
  const QLaurent g = monic(f);
  if (g.high_degree() == 0) return out;
  const QLaurent dg = derivative(g);
  const QLaurent a0 = gcd(g, dg);
  QLaurent b = divide_exact(g, a0);
  QLaurent c = divide_exact(dg, a0);
  QLaurent d = c - derivative(b);
  for (int i = 1; b.high_degree() > 0; ++i) {
    const QLaurent a = gcd(b, d);
    if (a.high_degree() > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - derivative(b);
  }
  return out;
}

std::vector<Rational> rational_roots(const QLaurent& f) {
  const IntLaurent p = primitive_part(f.unit_cleared());
  std::vector<Rational> roots;
  if (p.high_degree() == 0) return roots;
  const auto numerators = positive_divisors(p.coefficient(0));
  const auto denominators = positive_divisors(p.leading());
  const QLaurent q = to_rational(p);
  for (const auto& den : denominators)
    for (const auto& num : numerators) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rational r(Integer(sign * num), den);
        r.canonicalize();
        if (q.evaluate(r) == 0) roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalFactorization factor_over_rationals(const QLaurent& f) {
  if (f.is_zero()) throw MathError("factor_over_rationals: zero polynomial");
  RationalFactorization result;
  result.unit = QLaurent::monomial(f.leading(), f.low_degree());
  for (const auto& [part, multiplicity] : squarefree_decomposition(f)) {
    QLaurent rest = part;
    for (const auto& root : rational_roots(part)) {
      const QLaurent linear = QLaurent::from_coefficients(0, {-root, Rational(1)});
      rest = divide_exact(rest, linear);
      result.factors.push_back({linear, multiplicity, true});
    }
    rest = monic(rest);
    const int degree = rest.high_degree();
    if (degree == 0) continue;
    if (degree == 2) {
      const Rational disc = rest.coefficient(1) * rest.coefficient(1) - 4 * rest.coefficient(0);
      if (is_rational_square(disc)) throw std::logic_error("rootless quadratic with square discriminant");
      result.factors.push_back({rest, multiplicity, true});
    } else {
      result.factors.push_back({rest, multiplicity, false});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const RationalFactor& a, const RationalFactor& b) { return coefficients_less(a.polynomial, b.polynomial); });
  return result;
}

}  // namespace kslice
