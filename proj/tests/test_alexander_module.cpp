#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kslice/alexander_module.hpp"
#include "kslice/errors.hpp"

using namespace kslice;

namespace {

QLaurent q(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QLaurent::from_coefficients(0, v);
}

SeifertMatrix family(long m) { return validate_seifert(IntegerMatrix{{0, m + 1}, {m, 0}}); }

SeifertMatrix block_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix v(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) v(a.rows() + i, a.cols() + j) = b(i, j);
  return validate_seifert(v);
}

const IntegerMatrix kTrefoil{{-1, 1}, {0, -1}};

// Independent metaboliser test: half dimension and Bl vanishing on a basis.
bool isotropic_half(const AlexanderModule& m, const BlanchfieldPairing& bl, const Submodule& p) {
  if (2 * p.dimension() != m.q_dimension()) return false;
  for (std::size_t i = 0; i < p.dimension(); ++i)
    for (std::size_t j = 0; j < p.dimension(); ++j)
      if (!bl_pair(m, bl, p.basis().row(i), p.basis().row(j)).is_zero()) return false;
  return true;
}

}  // namespace

TEST(AlexanderModule, FamilyModuleSplitsIntoTwoLines) {
  auto mod = AlexanderModule::build(family(1));
  EXPECT_EQ(mod.q_dimension(), 2u);
  EXPECT_TRUE(mod.is_cyclic());
  EXPECT_EQ(mod.characteristic_polynomial(), monic(q({2, -5, 2})));
  EXPECT_EQ(mod.order_polynomial(), monic(q({2, -5, 2})));
  ASSERT_EQ(mod.primary_decomposition().size(), 2u);
  for (const auto& c : mod.primary_decomposition()) EXPECT_EQ(c.basis.rows(), 1u);
  // e_1 is killed by mt - (m+1), e_2 by (m+1)t - m.
  EXPECT_EQ(mod.annihilator(mod.generator_classes()[0]), q({-2, 1}));
  EXPECT_EQ(mod.annihilator(mod.generator_classes()[1]), monic(q({-1, 2})));
}

TEST(AlexanderModule, CoordinatesAndLiftsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto mod = AlexanderModule::build(random_seifert(1 + seed % 3, 3, seed));
    std::mt19937 rng(seed);
    QVector v(mod.q_dimension());
    for (auto& x : v) x = Rational(static_cast<long>(rng() % 7) - 3);
    auto lifted = mod.lift(v);
    EXPECT_EQ(mod.coordinates(lifted), v);
    // t acting on coordinates agrees with multiplying the lift by t.
    std::vector<QLaurent> shifted;
    for (const auto& p : lifted) shifted.push_back(p * QLaurent::t());
    EXPECT_EQ(mod.coordinates(shifted), mod.act(QLaurent::t(), v));
  }
}

TEST(AlexanderModule, RelationsVanish) {
  auto v = random_seifert(2, 3, 4);
  auto mod = AlexanderModule::build(v);
  auto a = alexander_presentation(v);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto c = mod.coordinates(a.row(i));
    for (const auto& x : c) EXPECT_EQ(x, 0);
  }
}

TEST(AlexanderModule, CharacteristicPolynomialIsDelta) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto v = random_seifert(1 + seed % 3, 4, seed);
    auto mod = AlexanderModule::build(v);
    EXPECT_TRUE(equal_up_to_unit(mod.characteristic_polynomial(), to_rational(alexander_polynomial(v))));
    EXPECT_EQ(static_cast<int>(mod.q_dimension()), alexander_polynomial(v).high_degree());
  }
}

TEST(AlexanderModule, AnnihilatorsKillTheirElements) {
  std::mt19937 rng(41);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto mod = AlexanderModule::build(random_seifert(2, 3, seed));
    QVector v(mod.q_dimension());
    for (auto& x : v) x = Rational(static_cast<long>(rng() % 5) - 2);
    auto ann = mod.annihilator(v);
    for (const auto& x : mod.act(ann, v)) EXPECT_EQ(x, 0);
    EXPECT_TRUE(reduce_mod(mod.order_polynomial(), ann).is_zero());
  }
}

TEST(Blanchfield, FamilyGram) {
  auto bl = BlanchfieldPairing::of(family(1));
  const auto& g = bl.gram();
  EXPECT_TRUE(g(0, 0).is_zero());
  EXPECT_TRUE(g(1, 1).is_zero());
  // (t - 1)/(t - 2) = 1/(t - 2) in Q(t)/Q[t^+-1]
  EXPECT_EQ(g(0, 1), RationalFunctionClass(q({-1, 1}), q({-2, 1})));
  EXPECT_EQ(g(1, 0), g(0, 1).conjugate());
  EXPECT_TRUE(bl.is_hermitian());
}

TEST(Blanchfield, PairingIsSesquilinear) {
  auto v = random_seifert(2, 3, 8);
  auto mod = AlexanderModule::build(v);
  auto bl = BlanchfieldPairing::of(v);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    QVector x(mod.q_dimension()), y(mod.q_dimension());
    for (auto& c : x) c = Rational(static_cast<long>(rng() % 5) - 2);
    for (auto& c : y) c = Rational(static_cast<long>(rng() % 5) - 2);
    const QLaurent p = q({1, -2, 1});
    auto px = mod.act(p, x), py = mod.act(p, y);
    EXPECT_EQ(bl_pair(mod, bl, px, y), p * bl_pair(mod, bl, x, y));
    EXPECT_EQ(bl_pair(mod, bl, x, py), p.conjugate() * bl_pair(mod, bl, x, y));
    EXPECT_EQ(bl_pair(mod, bl, y, x), bl_pair(mod, bl, x, y).conjugate());
  }
}

TEST(Blanchfield, NonsingularOnKnots) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto v = random_seifert(1 + seed % 2, 3, seed);
    auto mod = AlexanderModule::build(v);
    EXPECT_EQ(radical(mod, BlanchfieldPairing::of(v)).dimension(), 0u);
  }
}

TEST(Metabolisers, FamilyHasExactlyTheTwoLines) {
  for (long m : {1L, 2L, 3L}) {
    auto v = family(m);
    auto mod = AlexanderModule::build(v);
    auto bl = BlanchfieldPairing::of(v);
    auto a1 = Submodule::generated_by(mod, {mod.generator_classes()[0]});
    auto a2 = Submodule::generated_by(mod, {mod.generator_classes()[1]});
    auto mets = metabolisers(mod, bl);
    ASSERT_EQ(mets.size(), 2u);
    EXPECT_TRUE((mets[0] == a1 && mets[1] == a2) || (mets[0] == a2 && mets[1] == a1));
    EXPECT_EQ(unique_metaboliser_containing(mod, bl, mod.generator_classes()[0]), a1);
    EXPECT_EQ(unique_metaboliser_containing(mod, bl, mod.generator_classes()[1]), a2);
    QVector sum(2);
    for (std::size_t i = 0; i < 2; ++i) sum[i] = mod.generator_classes()[0][i] + mod.generator_classes()[1][i];
    try {
      unique_metaboliser_containing(mod, bl, sum);
      FAIL() << "expected an error";
    } catch (const MathError& e) {
      EXPECT_STREQ(e.what(), "no metaboliser contains x");
    }
    EXPECT_THROW(unique_metaboliser_containing(mod, bl, QVector{0, 0}), InvalidInput);
  }
}

TEST(Metabolisers, TrefoilHasNone) {
  auto v = validate_seifert(kTrefoil);
  auto mod = AlexanderModule::build(v);
  auto bl = BlanchfieldPairing::of(v);
  EXPECT_EQ(enumerate_submodules(mod).size(), 2u);
  EXPECT_TRUE(metabolisers(mod, bl).empty());
  EXPECT_THROW(unique_metaboliser_containing(mod, bl, mod.generator_classes()[0]), MathError);
}

TEST(Metabolisers, ConnectedSumOfTwoFamilyKnots) {
  auto v = block_sum(IntegerMatrix{{0, 2}, {1, 0}}, IntegerMatrix{{0, 4}, {3, 0}});
  auto mod = AlexanderModule::build(v);
  auto bl = BlanchfieldPairing::of(v);
  EXPECT_TRUE(mod.is_cyclic());
  EXPECT_EQ(enumerate_submodules(mod).size(), 16u);
  auto mets = metabolisers(mod, bl);
  EXPECT_EQ(mets.size(), 4u);
  for (const auto& p : enumerate_submodules(mod)) {
    const bool listed = std::find(mets.begin(), mets.end(), p) != mets.end();
    EXPECT_EQ(listed, isotropic_half(mod, bl, p));
  }
}

TEST(Metabolisers, NonCyclicModulesAreRefused) {
  auto v = block_sum(IntegerMatrix{{0, 2}, {1, 0}}, IntegerMatrix{{0, 2}, {1, 0}});
  auto mod = AlexanderModule::build(v);
  EXPECT_FALSE(mod.is_cyclic());
  try {
    enumerate_submodules(mod);
    FAIL();
  } catch (const Unsupported& e) {
    EXPECT_STREQ(e.what(), "submodule lattice may be infinite; enumeration unsupported");
  }
  EXPECT_THROW(metabolisers(mod, BlanchfieldPairing::of(v)), Unsupported);
}

TEST(Metabolisers, UnresolvedFactorisationIsRefused) {
  // Search a few seeds for a genus-2 matrix whose quartic has no rational root.
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    auto v = random_seifert(2, 3, seed);
    auto mod = AlexanderModule::build(v);
    if (mod.primary_decomposition_complete()) continue;
    found = true;
    try {
      enumerate_submodules(mod);
      FAIL();
    } catch (const Unsupported& e) {
      EXPECT_NE(std::string(e.what()).find("factorisation unavailable"), std::string::npos);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Metabolisers, ComplementsOnEnumerableRandomModules) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto v = random_seifert(1 + seed % 2, 3, seed);
    auto mod = AlexanderModule::build(v);
    if (!mod.is_cyclic() || !mod.primary_decomposition_complete()) continue;
    auto bl = BlanchfieldPairing::of(v);
    for (const auto& p : enumerate_submodules(mod)) {
      auto perp = orthogonal_complement(mod, bl, p);
      EXPECT_EQ(orthogonal_complement(mod, bl, perp), p);
      EXPECT_EQ(p.dimension() + perp.dimension(), mod.q_dimension());
    }
    for (const auto& p : metabolisers(mod, bl)) EXPECT_TRUE(isotropic_half(mod, bl, p));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Submodule, InvarianceIsEnforced) {
  auto mod = AlexanderModule::build(family(1));
  EXPECT_THROW(Submodule::from_subspace(mod, RationalMatrix{{1, 1}}), std::logic_error);
  EXPECT_EQ(Submodule::zero(mod).dimension(), 0u);
  EXPECT_EQ(Submodule::whole(mod).dimension(), 2u);
  EXPECT_TRUE(Submodule::whole(mod).contains(Submodule::generated_by(mod, {mod.generator_classes()[0]})));
}
