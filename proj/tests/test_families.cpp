#include <gtest/gtest.h>

#include <set>

#include "snarkflow/families.hpp"
#include "snarkflow/flows.hpp"

using namespace snarkflow;

TEST(Goldberg, SizeAndShape) {
  for (int k = 1; k <= 4; ++k) {
    const auto lg = goldberg(k);
    EXPECT_EQ(lg.graph.n(), 8 * (2 * k + 1));
    EXPECT_EQ(lg.graph.m(), 12 * (2 * k + 1));
    EXPECT_TRUE(lg.graph.is_cubic());
    EXPECT_TRUE(is_bridgeless(lg.graph));
    EXPECT_FALSE(lg.graph.has_parallel_edges());
    EXPECT_EQ(girth(lg.graph), k == 1 ? 3 : 5);  // the h_i close a triangle when k = 1
    EXPECT_EQ(std::set<std::string>(lg.labels.begin(), lg.labels.end()).size(), lg.labels.size());
  }
  EXPECT_THROW(goldberg(0), std::invalid_argument);
}

TEST(Goldberg, NotThreeEdgeColourable) { EXPECT_FALSE(three_edge_color(goldberg(1).graph).has_value()); }

TEST(ReducedGoldberg, HubJoinsEveryD) {
  for (int k = 1; k <= 3; ++k) {
    const auto lg = reduced_goldberg(k);
    const int L = 2 * k + 1;
    EXPECT_EQ(lg.graph.n(), 7 * L + 1);
    const int h = lg.index_of("h");
    EXPECT_EQ(h, lg.graph.n() - 1);
    EXPECT_EQ(lg.graph.degree(h), L);
    for (const auto& inc : lg.graph.incident(h)) EXPECT_EQ(lg.labels[inc.other][0], 'd');
    for (int v = 0; v < h; ++v) EXPECT_EQ(lg.graph.degree(v), 3);
  }
}

TEST(Flower, SizeAndColourability) {
  for (int k = 1; k <= 3; ++k) {
    const auto lg = flower_snark(k);
    EXPECT_EQ(lg.graph.n(), 4 * (2 * k + 1));
    EXPECT_TRUE(lg.graph.is_cubic());
    EXPECT_TRUE(is_bridgeless(lg.graph));
  }
  EXPECT_FALSE(three_edge_color(flower_snark(2).graph).has_value());
}

TEST(Petersen, Basics) {
  const auto lg = petersen();
  EXPECT_EQ(lg.graph.n(), 10);
  EXPECT_TRUE(lg.graph.is_cubic());
  EXPECT_EQ(girth(lg.graph), 5);
  EXPECT_FALSE(three_edge_color(lg.graph).has_value());
}

TEST(Families, ParseNames) {
  EXPECT_EQ(parse_family("reduced-goldberg"), Family::reduced_goldberg);
  EXPECT_FALSE(parse_family("heawood").has_value());
  EXPECT_STREQ(family_name(Family::flower), "flower");
}

TEST(BlockIndexing, MatchesLabels) {
  for (const auto& lg : {goldberg(2), reduced_goldberg(2)}) {
    const auto bi = block_indexing(lg);
    ASSERT_EQ(bi.block_count, 5);
    for (int i = 0; i < 5; ++i) {
      for (int l = 0; l < 7; ++l)
        EXPECT_EQ(lg.labels[bi.blocks[i][l]], std::string(1, kBlockLetters[l]) + "_" + std::to_string(i));
      EXPECT_EQ(lg.labels[bi.outside[i][kL1]], "b_" + std::to_string((i + 4) % 5));
      EXPECT_EQ(lg.labels[bi.outside[i][kR2]], "f_" + std::to_string((i + 1) % 5));
    }
  }
}

TEST(BlockSymmetry, ReverseAndTwistAreInvolutions) {
  for (auto kind : {BlockSymmetry::reverse, BlockSymmetry::twist}) {
    const auto p = block_letter_automorphism(kind);
    for (int l = 0; l < 7; ++l) EXPECT_EQ(p[p[l]], l);
  }
  EXPECT_EQ(block_letter_automorphism(BlockSymmetry::reverse)[kA], kB);
  EXPECT_EQ(block_letter_automorphism(BlockSymmetry::twist)[kA], kG);
  const auto lg = goldberg(1);
  EXPECT_NO_THROW(block_automorphism(lg, 2, BlockSymmetry::reverse));
  EXPECT_NO_THROW(block_automorphism(lg, 0, BlockSymmetry::twist));
}
