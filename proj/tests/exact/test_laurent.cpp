#include <gtest/gtest.h>

#include <random>

#include "kslice/errors.hpp"
#include "kslice/exact/laurent.hpp"

using namespace kslice;

namespace {

QLaurent q(int low, std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QLaurent::from_coefficients(low, v);
}

IntLaurent z(int low, std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntLaurent::from_coefficients(low, v);
}

QLaurent random_poly(std::mt19937& rng, int max_span) {
  std::uniform_int_distribution<int> len(1, max_span + 1), coeff(-6, 6), shift(-3, 3);
  std::vector<Rational> c(len(rng));
  for (auto& x : c) x = coeff(rng);
  c.back() = c.back() == 0 ? Rational(1) : c.back();
  return QLaurent::from_coefficients(shift(rng), c);
}

}  // namespace

TEST(Laurent, TrimsAndReportsDegrees) {
  auto p = q(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(p.low_degree(), 0);
  EXPECT_EQ(p.high_degree(), 2);
  EXPECT_EQ(p.span(), 2);
  EXPECT_TRUE(q(0, {0, 0}).is_zero());
  EXPECT_TRUE(QLaurent::monomial(Rational(-2), 5).is_unit());
}

TEST(Laurent, PrintsDescendingWithSigns) {
  EXPECT_EQ(z(0, {2, -5, 2}).to_string(), "2t^2 - 5t + 2");
  EXPECT_EQ(z(0, {1, -1, 1}).to_string(), "t^2 - t + 1");
  EXPECT_EQ(z(0, {}).to_string(), "0");
  EXPECT_EQ(z(0, {1}).to_string(), "1");
  EXPECT_EQ(z(-1, {-1}).to_string(), "-t^-1");
  EXPECT_EQ(q(0, {-1, 2}).to_string(), "2t - 1");
  EXPECT_EQ(monic(q(0, {-1, 2})).to_string(), "t - 1/2");
}

TEST(Laurent, ArithmeticAndConjugate) {
  auto a = q(0, {-2, 1});  // t - 2
  auto b = q(0, {-1, 2});  // 2t - 1
  EXPECT_EQ(a * b, q(0, {2, -5, 2}));
  EXPECT_EQ(a + b, q(0, {-3, 3}));
  EXPECT_EQ(a - a, QLaurent());
  EXPECT_EQ(a.conjugate(), q(-1, {1, -2}));
  EXPECT_EQ(a.conjugate().conjugate(), a);
  EXPECT_EQ(a.evaluate(Rational(5)), Rational(3));
  EXPECT_EQ(q(-1, {1}).evaluate(Rational(4)), Rational(1, 4));
}

TEST(Laurent, NormalizationUpToUnits) {
  auto p = z(3, {-2, 5, -2});
  EXPECT_EQ(normalize_sign(p), z(0, {2, -5, 2}));
  EXPECT_TRUE(equal_up_to_unit(p, z(0, {2, -5, 2})));
  EXPECT_FALSE(equal_up_to_unit(z(0, {1, -1, 1}), z(0, {1, -3, 1})));
  EXPECT_TRUE(equal_up_to_unit(q(2, {1, 2}), q(-4, {3, 6})));
  EXPECT_EQ(primitive_part(q(0, {4, -10, 4})), z(0, {2, -5, 2}));
}

TEST(Laurent, DivisionAndGcd) {
  auto f = q(0, {2, -5, 2});
  auto [quot, rem] = poly_divmod(f, q(0, {-2, 1}));
  EXPECT_EQ(quot, q(0, {-1, 2}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(divide_exact(f, q(0, {-1, 2})), q(0, {-2, 1}));
  EXPECT_EQ(gcd(f, q(0, {-2, 1}) * q(0, {1, 1})), q(0, {-2, 1}));
  EXPECT_EQ(gcd(q(0, {1, 1}), q(0, {-2, 1})), q(0, {1}));
  EXPECT_EQ(derivative(q(0, {2, -5, 2})), q(0, {-5, 4}));
  EXPECT_THROW(divide_exact(f, q(0, {1, 1})), MathError);
}

TEST(Laurent, ReduceModMatchesQuotientRing) {
  auto d = q(0, {-2, 1});  // t = 2 in the quotient
  EXPECT_EQ(reduce_mod(q(0, {0, 0, 1}), d), q(0, {4}));
  EXPECT_EQ(reduce_mod(q(-1, {1}), d), QLaurent(Rational(1, 2)));
}

TEST(Laurent, DivmodIdentityOnRandomInputs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_poly(rng, 6), b = random_poly(rng, 3);
    auto [qq, r] = laurent_divmod(a, b);
    EXPECT_EQ(qq * b + r, a);
    EXPECT_TRUE(r.is_zero() || r.span() < b.span());
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(Laurent, ReduceModIsARingHomomorphism) {
  std::mt19937 rng(11);
  auto d = q(0, {3, -7, 0, 2});
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 5), b = random_poly(rng, 5);
    EXPECT_EQ(reduce_mod(a * b, d), reduce_mod(reduce_mod(a, d) * reduce_mod(b, d), d));
    EXPECT_EQ(reduce_mod(a + b, d), reduce_mod(a, d) + reduce_mod(b, d));
  }
}
