#include <gtest/gtest.h>

#include "kslice/alexander_module.hpp"
#include "kslice/branched_cover.hpp"
#include "kslice/errors.hpp"
#include "kslice/family.hpp"

using namespace kslice;

namespace {

std::string lookup(const ReportStep& s, const std::string& key) {
  for (const auto& [k, v] : s.payload)
    if (k == key) return v;
  return "<missing " + key + ">";
}

const ReportStep& step(const std::vector<ReportStep>& steps, const std::string& name) {
  for (const auto& s : steps)
    if (s.name == name) return s;
  throw std::runtime_error("no step " + name);
}

Integer power(long b, long e) {
  Integer p = 1;
  for (long k = 0; k < e; ++k) p *= b;
  return p;
}

}  // namespace

TEST(Family, SeifertMatrices) {
  EXPECT_EQ(family_seifert(1).matrix(), (IntegerMatrix{{0, 2}, {1, 0}}));
  EXPECT_EQ(family_seifert(3).matrix(), (IntegerMatrix{{0, 4}, {3, 0}}));
  EXPECT_THROW(family_seifert(0), InvalidInput);
  EXPECT_THROW(family_params(-2), InvalidInput);
  EXPECT_TRUE(family_params(5).odd_regime);
  EXPECT_FALSE(family_params(4).odd_regime);
}

TEST(Family, ClosedForms) {
  auto a = family_expected(1, 3);
  EXPECT_EQ(a.delta.to_string(), "2t^2 - 5t + 2");
  EXPECT_EQ(a.n_r, 7);
  EXPECT_EQ(a.cover_group.to_string(), "Z/7 + Z/7");
  auto b = family_expected(3, 2);
  EXPECT_EQ(b.n_r, 7);
  EXPECT_EQ(b.cover_group.to_string(), "Z/7 + Z/7");
  for (long m = 1; m <= 6; ++m) {
    auto c = family_expected(m, 1);
    EXPECT_EQ(c.n_r, 1);
    EXPECT_TRUE(c.cover_group.is_trivial());
  }
}

TEST(Family, Distinctness) {
  EXPECT_TRUE(distinctness_check({1, 3, 5, 7, 9}));
  EXPECT_TRUE(distinctness_check({1}));
  EXPECT_THROW(distinctness_check({1, 1}), InvalidInput);
  EXPECT_THROW(distinctness_check({0, 2}), InvalidInput);
}

TEST(Family, StepStatusNames) {
  for (auto s : {StepStatus::verified, StepStatus::failed, StepStatus::external_assumption})
    EXPECT_EQ(step_status_from_string(to_string(s)), s);
  EXPECT_EQ(to_string(StepStatus::external_assumption), "external-assumption");
  EXPECT_THROW(step_status_from_string("maybe"), InvalidInput);
}

TEST(Report, FirstFamilyMember) {
  auto r = obstruction_report(1, {2, 3, 5, 7, 11, 13});
  EXPECT_FALSE(r.has_failure());
  EXPECT_TRUE(r.odd_regime);
  EXPECT_TRUE(r.warnings.empty());
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks[0].name, "alexander-polynomial");
  EXPECT_EQ(r.checks[1].name, "rational-alexander-module");
  EXPECT_EQ(r.checks[2].name, "blanchfield-metabolisers");
  EXPECT_EQ(lookup(r.checks[2], "metaboliser_count"), "2");
  EXPECT_EQ(lookup(r.checks[2], "unique_metaboliser_containing_alpha1"), "<alpha1>");
  EXPECT_EQ(lookup(r.checks[2], "kernel_dimension"), "1");
  ASSERT_EQ(r.covers.size(), 6u);
  for (const auto& c : r.covers)
    for (const auto& s : c.steps) EXPECT_EQ(s.status, StepStatus::verified) << c.r << " " << s.name;
  EXPECT_EQ(r.covers[0].steps.back().name, "linking-metabolisers");
  EXPECT_EQ(r.external_count(), 4u);
  for (const auto& e : r.external) EXPECT_EQ(e.status, StepStatus::external_assumption);
  EXPECT_EQ(r.conclusion, kConclusionComplete);
}

TEST(Report, ThirdFamilyMemberOrders) {
  auto r = obstruction_report(3, {2, 3, 5});
  ASSERT_EQ(r.covers.size(), 3u);
  const char* expected[] = {"7", "37", "781"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& g = step(r.covers[i].steps, "cover-group");
    EXPECT_EQ(lookup(g, "N_r"), expected[i]);
    EXPECT_EQ(lookup(g, "computed"), lookup(g, "expected"));
  }
  EXPECT_EQ(r.conclusion, kConclusionComplete);
}

TEST(Report, EvenParameterCarriesWarning) {
  auto r = obstruction_report(2, {2});
  EXPECT_FALSE(r.odd_regime);
  EXPECT_FALSE(r.has_failure());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("even"), std::string::npos);
  EXPECT_NE(r.warnings[0].find("odd m"), std::string::npos);
}

TEST(Report, RejectsBadDegreeLists) {
  EXPECT_THROW(obstruction_report(1, {4}), InvalidInput);
  EXPECT_THROW(obstruction_report(1, {1}), InvalidInput);
  EXPECT_THROW(obstruction_report(1, {}), InvalidInput);
  EXPECT_THROW(obstruction_report(1, {3, 3}), InvalidInput);
  EXPECT_THROW(obstruction_report(0, {3}), InvalidInput);
}

TEST(Report, Deterministic) {
  EXPECT_EQ(obstruction_report(5, {2, 3, 7}), obstruction_report(5, {2, 3, 7}));
}

TEST(Family, PipelineMatchesClosedFormsForSmallParameters) {
  for (long m = 1; m <= 9; ++m) {
    auto v = family_seifert(m);
    EXPECT_TRUE(equal_up_to_unit(alexander_polynomial(v), family_expected(m, 2).delta));
    auto mod = AlexanderModule::build(v);
    EXPECT_EQ(metabolisers(mod, BlanchfieldPairing::of(v)).size(), 2u);
    for (long r : {2L, 3L, 5L, 7L, 11L, 13L}) {
      auto e = family_expected(m, r);
      EXPECT_EQ(e.n_r, power(m + 1, r) - power(m, r));
      auto c = cover_presentation(v, r);
      EXPECT_EQ(c.group(), e.cover_group) << "m = " << m << ", r = " << r;
      EXPECT_EQ(*lifted_generator(c, 0).order, e.n_r);
      EXPECT_EQ(*lifted_generator(c, 1).order, e.n_r);
      if (m % 2 == 1) EXPECT_TRUE(is_z2_homology_sphere(v, r));
      EXPECT_EQ(gcd(Integer(m), e.n_r), 1);
      EXPECT_EQ(gcd(Integer(m + 1), e.n_r), 1);
    }
  }
}
