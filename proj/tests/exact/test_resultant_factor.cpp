#include <gtest/gtest.h>

#include <random>

#include "kslice/errors.hpp"
#include "kslice/exact/factor.hpp"
#include "kslice/exact/resultant.hpp"

using namespace kslice;

namespace {

IntLaurent z(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntLaurent::from_coefficients(0, v);
}

QLaurent q(std::vector<long> c) { return to_rational(z(std::move(c))); }

// Independent oracle: the Euclidean recurrence
//   Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r),  r = f mod g.
Rational euclid_resultant(const QLaurent& f, const QLaurent& g) {
  const int m = f.high_degree(), n = g.high_degree();
  auto power = [](const Rational& x, int e) {
    Rational p = 1;
    for (int i = 0; i < e; ++i) p *= x;
    return p;
  };
  if (n == 0) return power(g.leading(), m);
  if (m == 0) return power(f.leading(), n);
  const QLaurent r = poly_divmod(f, g).second;
  if (r.is_zero()) return 0;
  Rational factor = 1;
  for (int i = 0; i < m - r.high_degree(); ++i) factor *= g.leading();
  if ((m * n) % 2 == 1) factor = -factor;
  return factor * euclid_resultant(g, r);
}

}  // namespace

TEST(Resultant, HandComputedValues) {
  EXPECT_EQ(resultant(z({-1, 0, 1}), z({-3, 1})), 8);
  EXPECT_EQ(resultant(z({2, -5, 2}), z({1, 1, 1})), 49);
  EXPECT_EQ(resultant(z({1, -1, 1}), z({1, 1, 1})), 4);
  EXPECT_EQ(resultant(z({1, -1, 1}), z({1, 1, 1, 1, 1, 1})), 0);
  EXPECT_EQ(resultant(z({2, -5, 2}), z({5})), 25);
  EXPECT_THROW(resultant(z({}), z({1, 1})), MathError);
}

TEST(Resultant, SylvesterShape) {
  auto s = sylvester_matrix(z({-1, 0, 1}), z({-3, 1}));
  EXPECT_EQ(s, (IntegerMatrix{{1, 0, -1}, {1, -3, 0}, {0, 1, -3}}));
}

TEST(Resultant, MatchesEuclideanRecurrenceOnRandomPairs) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> deg(1, 5), coeff(-7, 7);
  for (int trial = 0; trial < 300; ++trial) {
    auto make = [&] {
      std::vector<long> c(deg(rng) + 1);
      for (auto& x : c) x = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      if (c.front() == 0) c.front() = -1;
      return z(c);
    };
    auto f = make(), g = make();
    EXPECT_EQ(Rational(resultant(f, g)), euclid_resultant(to_rational(f), to_rational(g)));
  }
}

TEST(Factor, LinearFactorsOfTheFamilyPolynomial) {
  auto fz = factor_over_rationals(q({2, -5, 2}));
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_TRUE(fz.fully_resolved());
  // ordered by coefficients from the constant term up: t - 2 before t - 1/2
  EXPECT_EQ(fz.factors[0].polynomial, q({-2, 1}));
  EXPECT_EQ(fz.factors[1].polynomial, monic(q({-1, 2})));
  EXPECT_EQ(fz.product(), q({2, -5, 2}));
}

TEST(Factor, QuadraticsAndMultiplicities) {
  auto trefoil = factor_over_rationals(q({1, -1, 1}));
  ASSERT_EQ(trefoil.factors.size(), 1u);
  EXPECT_TRUE(trefoil.factors[0].resolved);
  EXPECT_EQ(trefoil.factors[0].polynomial.high_degree(), 2);

  auto f = q({-1, 1}) * q({-1, 1}) * q({2, 1}) * QLaurent::monomial(Rational(3), 2);
  auto fz = factor_over_rationals(f);
  EXPECT_EQ(fz.product(), f);
  ASSERT_EQ(fz.factors.size(), 2u);
  int total = 0;
  for (const auto& x : fz.factors) total += x.multiplicity * x.polynomial.high_degree();
  EXPECT_EQ(total, 3);
}

TEST(Factor, RootlessCubicIsUnresolved) {
  auto fz = factor_over_rationals(q({-2, 0, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_FALSE(fz.factors[0].resolved);
  EXPECT_FALSE(fz.fully_resolved());
}

TEST(Factor, RationalRootsAndSquarefreeParts) {
  EXPECT_EQ(rational_roots(q({2, -5, 2})), (std::vector<Rational>{Rational(1, 2), Rational(2)}));
  EXPECT_TRUE(rational_roots(q({1, 0, 1})).empty());
  auto sf = squarefree_decomposition(q({-1, 1}) * q({-1, 1}) * q({1, 1}));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0], std::make_pair(q({1, 1}), 1));
  EXPECT_EQ(sf[1], std::make_pair(q({-1, 1}), 2));
}

TEST(Factor, ProductReproducesRandomPolynomials) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> root(-4, 4), extra(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    QLaurent f(1);
    for (int k = 0; k < 3; ++k) {
      int a = root(rng);
      f *= q({a == 0 ? 1 : a, 2});
    }
    if (extra(rng) == 0) f *= q({1, 0, 1});
    auto fz = factor_over_rationals(f);
    EXPECT_EQ(fz.product(), f);
    EXPECT_TRUE(fz.fully_resolved());
  }
}
