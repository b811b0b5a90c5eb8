#include <gtest/gtest.h>

#include <stdexcept>

#include "fim/rewrite.hpp"

namespace {

using namespace fim::rewrite;

TEST(WordIndex, DenseAndInvertible) {
  EXPECT_EQ(word_index(""), 0u);
  EXPECT_EQ(word_index("x"), 1u);
  EXPECT_EQ(word_index("y"), 2u);
  EXPECT_EQ(word_index("xx"), 3u);
  for (std::size_t idx = 0; idx < universe_size(8); ++idx) EXPECT_EQ(word_index(word_at(idx)), idx);
  EXPECT_EQ(universe_size(9), 1023u);
}

TEST(RelationInstances, BothSidesFit) {
  for (Family f : {Family::kFew1, Family::kFew2, Family::kMany})
    for (const auto& r : relation_instances(f, 5)) {
      EXPECT_LE(r.lhs.size(), 5u);
      EXPECT_LE(r.rhs.size(), 5u);
      EXPECT_NE(r.lhs, r.rhs);
    }
  const auto few1 = relation_instances(Family::kFew1, 5);
  ASSERT_GE(few1.size(), 2u);
  EXPECT_EQ(few1[0].lhs, "xyx");
  EXPECT_EQ(few1[0].rhs, "x");
}

TEST(Embedding, LengthOneHasThreeClasses) {
  EXPECT_EQ(classes_by_embedding(1).class_count(), 3u);
  EXPECT_EQ(classes_by_embedding(0).class_count(), 1u);
}

TEST(Embedding, XyxIsX) { EXPECT_TRUE(classes_by_embedding(3).same_class("xyx", "x")); }

TEST(Embedding, ClassCountsMatchShortestWordCount) {
  // Frozen from an independent interval-walk enumeration.
  const std::size_t expected[] = {1, 3, 7, 13, 22, 34, 50, 70, 95, 125, 161};
  for (std::size_t L = 0; L <= 10; ++L) {
    EXPECT_EQ(classes_by_embedding(L).class_count(), expected[L]) << L;
    EXPECT_EQ(count_canonical_triples(L), expected[L]) << L;
  }
}

TEST(ShortestWordLength, Examples) {
  EXPECT_EQ(shortest_word_length(0, 0, 0), 0u);
  EXPECT_EQ(shortest_word_length(1, 1, 1), 1u);
  EXPECT_EQ(shortest_word_length(1, 1, 0), 2u);
  EXPECT_EQ(shortest_word_length(1, 2, 2), 3u);
  EXPECT_EQ(shortest_word_length(1, 2, 1), 4u);
}

TEST(Rewriting, FamilyExamples) {
  EXPECT_TRUE(classes_by_rewriting(3, Family::kFew1).same_class("xyx", "x"));
  EXPECT_TRUE(classes_by_rewriting(5, Family::kFew2).same_class("xxyyx", "xxy"));
  EXPECT_TRUE(classes_by_rewriting(3, Family::kMany).same_class("yxy", "y"));
}

TEST(Rewriting, AlwaysRefinesTheEmbedding) {
  for (std::size_t L = 0; L <= 7; ++L)
    for (Family f : {Family::kFew1, Family::kFew2, Family::kMany})
      for (std::size_t slack : {0u, 2u}) {
        const auto table = classes_by_rewriting(L, f, slack);
        EXPECT_TRUE(table.refines(classes_by_embedding(L))) << L << " " << to_string(f);
      }
}

TEST(Rewriting, TooLittleSlackLeavesClassesSplit) {
  const auto emb = classes_by_embedding(6);
  const auto narrow = classes_by_rewriting(6, Family::kFew1, 2);
  EXPECT_GT(narrow.class_count(), emb.class_count());
  const auto witness = find_witness(emb, "embedding", narrow, "FEW1");
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->merged_by, "embedding");
  EXPECT_TRUE(emb.same_class(witness->first, witness->second));
  EXPECT_FALSE(narrow.same_class(witness->first, witness->second));
}

TEST(DefaultSlack, GrowsForTheTwoRelationFamilies) {
  EXPECT_EQ(default_slack(Family::kMany, 9), 2u);
  EXPECT_EQ(default_slack(Family::kFew1, 3), 2u);
  EXPECT_EQ(default_slack(Family::kFew1, 6), 4u);
  EXPECT_EQ(default_slack(Family::kFew2, 9), 6u);
  EXPECT_EQ(default_slack(Family::kFew2, 10), 8u);
}

TEST(Compare, AllPartitionsAgreeUpToTen) {
  for (std::size_t L = 0; L <= 10; ++L) {
    const auto report = compare(L);
    EXPECT_TRUE(report.all_equal()) << format_report(report);
  }
}

TEST(Compare, LengthZeroIsOneClass) {
  const auto report = compare(0);
  EXPECT_EQ(report.embedding_classes, 1u);
  EXPECT_TRUE(report.all_equal());
}

TEST(Compare, WitnessPairIsMergedEverywhere) {
  for (Family f : {Family::kFew1, Family::kFew2, Family::kMany})
    EXPECT_TRUE(classes_by_rewriting(6, f).same_class("xyyxx", "yxx")) << to_string(f);
}

TEST(Compare, ReportFormat) {
  const std::string text = format_report(compare(2));
  EXPECT_NE(text.find("L=2"), std::string::npos);
  EXPECT_NE(text.find("equal"), std::string::npos);
}

TEST(Limits, OversizedRequestsAreRejected) {
  EXPECT_THROW(classes_by_embedding(kMaxLength + 1), std::invalid_argument);
  EXPECT_THROW(classes_by_rewriting(10, Family::kFew1, 11), std::invalid_argument);
  EXPECT_THROW(classes_by_embedding(3).class_of("xxxxx"), std::out_of_range);
}

}  // namespace
