#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fim/set_solver.hpp"

namespace {

using fim::FiniteEndomap;
using fim::kInfiniteDepth;
using fim::PointRelationFailure;

FiniteEndomap M(const char* text) { return FiniteEndomap::parse(text); }

TEST(Endomap, ParseAndPrint) {
  EXPECT_EQ(M(" 1, 0 ,0").to_string(), "1,0,0");
  EXPECT_EQ(M("").size(), 0u);
  EXPECT_EQ(FiniteEndomap::identity(3), M("0,1,2"));
  EXPECT_THROW(FiniteEndomap({0, 3}), std::invalid_argument);
  try {
    M("0,x,1");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(M("0,,1"), std::invalid_argument);
  EXPECT_THROW(M("0,5"), std::invalid_argument);
}

TEST(Endomap, Words) {
  const auto x = M("1,2,2");
  const auto y = M("0,0,1");
  EXPECT_EQ(x.apply_word(y, "xy", 2), 2u);
  EXPECT_EQ(x.apply_word(y, "yx", 2), 1u);
  EXPECT_EQ(x.apply_word(y, "", 1), 1u);
}

TEST(Depth, Examples) {
  EXPECT_EQ(fim::eventual_image(M("1,2,2")), (std::vector<std::size_t>{2}));
  EXPECT_EQ(fim::depth_profile(M("1,2,2")), (std::vector<std::size_t>{0, 1, kInfiniteDepth}));
  EXPECT_EQ(fim::depth_profile(M("1,0,0")), (std::vector<std::size_t>{kInfiniteDepth, kInfiniteDepth, 0}));
  EXPECT_EQ(fim::format_depths(fim::depth_profile(M("1,2,2"))), "0,1,inf");
  EXPECT_TRUE(fim::depth_profile(M("")).empty());
}

TEST(Depth, IncreasesAlongX) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& x : fim::all_endomaps(n)) {
      const auto d = fim::depth_profile(x);
      for (std::size_t s = 0; s < n; ++s) {
        if (d[s] == kInfiniteDepth) {
          EXPECT_EQ(d[x(s)], kInfiniteDepth);
        } else {
          EXPECT_GE(d[x(s)], d[s] + 1);
        }
      }
    }
}

TEST(Build, Examples) {
  EXPECT_EQ(fim::build_strong_inner_inverse(M("0,0")), M("0,0"));
  EXPECT_EQ(fim::build_strong_inner_inverse(M("1,0")), M("1,0"));
  EXPECT_EQ(fim::build_strong_inner_inverse(M("1,0,0")), M("1,0,0"));
  EXPECT_EQ(fim::build_strong_inner_inverse(M("")), M(""));
}

TEST(Build, TraceCountsEveryPoint) {
  fim::ConstructionTrace trace;
  const auto x = M("1,2,2,0");
  fim::build_strong_inner_inverse(x, &trace);
  EXPECT_EQ(trace.eventual_image + trace.preimage + trace.depth_zero + trace.stable_branch, x.size());
  EXPECT_EQ(trace.eventual_image, 1u);
  EXPECT_EQ(trace.stable_branch, 0u);
}

TEST(Verify, FirstFailureOrder) {
  EXPECT_EQ(fim::verify_relations(M("0,0"), M("1,1"), 4), (PointRelationFailure{1, 2, 0}));
  EXPECT_FALSE(fim::verify_relations(M("0,0"), M("0,0"), 4).has_value());
}

TEST(Build, TotalOnSmallSets) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& x : fim::all_endomaps(n)) {
      fim::ConstructionTrace trace;
      const auto y = fim::build_strong_inner_inverse(x, &trace);
      ASSERT_FALSE(fim::verify_relations(x, y, n + 1).has_value()) << x.to_string();
      EXPECT_TRUE(fim::weak_system_holds(x, y, n + 1)) << x.to_string();
      EXPECT_EQ(trace.stable_branch, 0u);
    }
}

TEST(Build, RandomLargerSets) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 5 + t % 5;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> target(n);
    for (auto& v : target) v = pick(rng);
    const FiniteEndomap x(target);
    const auto y = fim::build_strong_inner_inverse(x);
    ASSERT_FALSE(fim::verify_relations(x, y, n + 1).has_value()) << x.to_string();
  }
}

TEST(Conditions, BigcapHoldsForFiniteSets) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& x : fim::all_endomaps(n)) EXPECT_TRUE(fim::bigcap_condition(x));
}

TEST(Conditions, RelationsForceTheInverseOnTheEventualImage) {
  // On a 3-set, any y satisfying the relations inverts x on the eventual image.
  for (const auto& x : fim::all_endomaps(3))
    for (const auto& y : fim::all_endomaps(3)) {
      if (fim::verify_relations(x, y, 4)) continue;
      for (std::size_t s : fim::eventual_image(x)) {
        EXPECT_EQ(x(y(s)), s);
        EXPECT_EQ(y(x(s)), s);
      }
    }
}

TEST(Conditions, WeakSystemCanFail) { EXPECT_FALSE(fim::weak_system_holds(M("1,0"), M("0,1"), 2)); }

}  // namespace
