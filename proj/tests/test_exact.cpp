#include <gtest/gtest.h>

#include <random>

#include "cookie_monster/exact.hpp"
#include "cookie_monster/sequences.hpp"
#include "oracles.hpp"

namespace cm = cookie_monster;
using cm::Cookies;
using cm::JarSet;

TEST(Representable, Examples) {
  EXPECT_TRUE(cm::representable(7, std::vector<Cookies>{1, 2, 4}));
  EXPECT_FALSE(cm::representable(2, std::vector<Cookies>{1, 4}));
  EXPECT_TRUE(cm::representable(2, std::vector<Cookies>{1, 1}));
  EXPECT_TRUE(cm::representable(0, std::vector<Cookies>{}));
  EXPECT_FALSE(cm::representable(3, std::vector<Cookies>{}));
}

TEST(Representable, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Cookies> amt(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Cookies> amounts(trial % 7);
    for (auto& a : amounts) a = amt(rng);
    for (Cookies v = 1; v <= 40; ++v) {
      ASSERT_EQ(cm::representable(v, amounts), oracle::subset_sum(v, amounts));
      auto picked = cm::find_subset(v, amounts);
      ASSERT_EQ(picked.has_value(), oracle::subset_sum(v, amounts));
      if (picked) {
        Cookies total = 0;
        for (auto i : *picked) total += amounts[i];
        ASSERT_EQ(total, v);
      }
    }
  }
}

TEST(CmExact, TrivialSizes) {
  EXPECT_EQ(cm::cm_exact({}).cm, 0u);
  EXPECT_EQ(cm::cm_exact({7}).cm, 1u);
  const auto huge = cm::cm_exact({Cookies{1} << 60});
  EXPECT_EQ(huge.cm, 1u);
  EXPECT_TRUE(huge.certificate.is_valid_for({Cookies{1} << 60}));
}

TEST(CmExact, FibonacciFive) { EXPECT_EQ(cm::cm_exact({1, 2, 3, 5, 8}).cm, 3u); }

TEST(CmExact, PaperEmjaExampleSet) {
  // Frozen from the brute-force cover oracle.
  EXPECT_EQ(oracle::cover_cm({1, 3, 4, 7}), 3u);
  EXPECT_EQ(cm::cm_exact({1, 3, 4, 7}).cm, 3u);
}

TEST(CmExact, TribonacciFive) {
  EXPECT_EQ(cm::cm_exact({1, 2, 4, 7, 13}).cm, 4u);
  EXPECT_EQ(cm::cm_bfs({1, 2, 4, 7, 13}), 4u);
}

TEST(CmExact, CertificateIsLexSmallestMinimumCover) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = oracle::random_jarset(rng, 2 + trial % 3, 12);
    const auto r = cm::cm_exact(s);
    EXPECT_EQ(r.certificate.amounts, oracle::first_min_cover(s)) << trial;
    EXPECT_TRUE(r.certificate.is_valid_for(s));
  }
}

TEST(CmExact, SameCertificateForAnyThreadCount) {
  for (const JarSet& s : {JarSet{1, 2, 3, 5, 8, 13, 21, 34}, JarSet{1, 2, 4, 7, 13, 24, 44},
                          JarSet{3, 10, 17, 22, 29, 31}}) {
    const auto one = cm::cm_exact(s, {10'000'000, 1});
    for (unsigned t : {2u, 4u, 7u}) {
      const auto many = cm::cm_exact(s, {10'000'000, t});
      EXPECT_EQ(many.cm, one.cm);
      EXPECT_EQ(many.certificate, one.certificate);
    }
  }
}

TEST(CmExact, BudgetExhaustionCarriesBounds) {
  const JarSet s{1, 2, 4, 7, 13, 24, 44};
  try {
    cm::cm_exact(s, {50, 1});
    FAIL() << "expected budget_exhausted";
  } catch (const cm::budget_exhausted& e) {
    EXPECT_LE(e.lower, 5u);
    EXPECT_GE(e.upper, 5u);
    EXPECT_GE(e.nodes, 50u);
  }
  EXPECT_THROW(cm::cm_exact(s, {50, 3}), cm::resource_error);
}

TEST(CmExact, RejectsValuesBeyondTable) {
  EXPECT_THROW(cm::cm_exact({1, cm::kMaxSearchValue}), cm::resource_error);
}

TEST(CmBfs, Examples) {
  EXPECT_EQ(cm::cm_bfs({}), 0u);
  EXPECT_EQ(cm::cm_bfs({1, 2, 3}), 2u);
  EXPECT_EQ(cm::cm_bfs({1, 2, 4}), 3u);
  EXPECT_EQ(cm::cm_bfs({1, 2, 3, 4}), 3u);
  EXPECT_EQ(cm::cm_bfs({1, 2, 3, 4, 5, 6}), 3u);
}

TEST(CmBfs, CapsAreEnforced) {
  EXPECT_THROW(cm::cm_bfs({1, 2, 3, 4, 5, 6, 7}), cm::resource_error);
  EXPECT_THROW(cm::cm_bfs({1, 41}), cm::resource_error);
  cm::BfsCaps tiny;
  tiny.max_states = 3;
  EXPECT_THROW(cm::cm_bfs({3, 9, 14, 20}, tiny), cm::resource_error);
}

TEST(CmBfs, AgreesWithCoverOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = oracle::random_jarset(rng, 1 + trial % 4, 10);
    EXPECT_EQ(cm::cm_bfs(s), oracle::cover_cm(s)) << trial;
  }
}

TEST(PlanFromCertificate, Examples) {
  const cm::Certificate c{{1, 1}, {{1, {0}}, {2, {0, 1}}}};
  const auto plan = cm::plan_from_certificate({1, 2}, c);
  EXPECT_EQ(plan.size(), 2u);
  EXPECT_TRUE(cm::verify_plan({1, 2}, plan).complete);

  const auto single = cm::plan_from_certificate({1}, cm::Certificate{{1}, {{1, {0}}}});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (cm::Move{{1}, 1}));
}

TEST(PlanFromCertificate, FibonacciRoundTrip) {
  const JarSet s{1, 2, 3, 5, 8};
  const auto plan = cm::plan_from_certificate(s, cm::cm_exact(s).certificate);
  EXPECT_EQ(plan.size(), 3u);
  for (std::size_t i = 1; i < plan.size(); ++i) EXPECT_GE(plan[i - 1].amount, plan[i].amount);
  EXPECT_TRUE(cm::verify_plan(s, plan).complete);
}

TEST(PlanFromCertificate, MergesCollidingJars) {
  // After the 2-move, jars 1 and 3 both hold 1 but want different 1-moves.
  const JarSet s{1, 2, 3};
  const cm::Certificate c{{1, 1, 2}, {{1, {0}}, {2, {2}}, {3, {1, 2}}}};
  ASSERT_TRUE(c.is_valid_for(s));
  const auto plan = cm::plan_from_certificate(s, c);
  EXPECT_EQ(plan.size(), 2u);
  EXPECT_TRUE(cm::verify_plan(s, plan).complete);
}

TEST(PlanFromCertificate, RejectsInvalidCertificate) {
  EXPECT_THROW(cm::plan_from_certificate({1, 3}, cm::Certificate{{2}, {{1, {}}, {3, {0}}}}), cm::domain_error);
}

TEST(CmExact, SmallFamiliesMatchClosedForms) {
  for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(cm::cm_exact(cm::nacci_set(2, k)).cm, k / 2 + 1);
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_EQ(cm::cm_exact(cm::nacci_set(3, k)).cm, 2 * k / 3 + 1);
}
