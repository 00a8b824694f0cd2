#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/graph.hpp"
#include "snarkflow/graph_io.hpp"
#include "snarkflow/maxflow.hpp"
#include "snarkflow/rational.hpp"

using namespace snarkflow;

TEST(Rational, NormalisesAndCompares) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(9, 2).str(), "9/2");
  EXPECT_EQ(Rational(5).str(), "5/1");
  EXPECT_LT(Rational(22, 5), Rational(9, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(4) + Rational(1, 3), Rational(13, 3));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParsesRoundTrip) {
  for (auto r : {Rational(9, 2), Rational(-7, 3), Rational(0), Rational(13, 3)}) EXPECT_EQ(Rational::parse(r.str()), r);
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a(70, {0, 5, 69}), b(70, {5, 6});
  EXPECT_EQ((a | b).size(), 4);
  EXPECT_EQ((a & b).members(), std::vector<int>{5});
  EXPECT_EQ((a - b).members(), (std::vector<int>{0, 69}));
  EXPECT_EQ(a.complement().size(), 67);
  EXPECT_FALSE(a.complement().contains(69));
  EXPECT_THROW(a.insert(70), std::out_of_range);
}

TEST(Graph, BoundaryAndComponents) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(boundary(k4, VertexSet(4, {0})).size, 3);
  EXPECT_EQ(boundary(k4, VertexSet(4, {0, 1})).size, 4);
  const Graph c6 = Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  EXPECT_EQ(components_within(c6, VertexSet(6, {0, 2, 3})).size(), 2u);
  EXPECT_TRUE(is_connected(c6));
}

TEST(Graph, BridgesBipartiteGirth) {
  EXPECT_TRUE(is_bridgeless(petersen().graph));
  EXPECT_FALSE(is_bridgeless(Graph(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(is_bipartite(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_bipartite(complete_graph(4)));
  EXPECT_EQ(girth(petersen().graph), 5);
  EXPECT_EQ(girth(complete_graph(4)), 3);
}

TEST(Graph, ContractMergesSet) {
  const Graph c4 = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto c = contract(c4, VertexSet(4, {0, 1}));
  EXPECT_EQ(c.graph.n(), 3);
  EXPECT_EQ(c.graph.m(), 3);  // the edge inside the merged set disappears
}

TEST(Graph6, MatchesReferenceEncoder) {
  std::mt19937_64 rng(7);
  for (const auto& g : {petersen().graph, goldberg(1).graph, goldberg(4).graph, flower_snark(2).graph,
                        complete_graph(4), complete_bipartite(3, 3)})
    EXPECT_EQ(emit_graph6(g), oracle::graph6(g));
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_cubic(2 * (5 + i % 30), rng);
    const std::string s = emit_graph6(g);
    EXPECT_EQ(s, oracle::graph6(g));
    EXPECT_EQ(oracle::graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(parse_graph6("C~").m(), 6);
  EXPECT_EQ(parse_graph6(">>graph6<<C~").m(), 6);
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(parse_graph6(""), FormatError);
  EXPECT_THROW(parse_graph6("C"), FormatError);
  EXPECT_THROW(parse_graph6("C~~"), FormatError);
  EXPECT_THROW(parse_graph6("C\x01"), FormatError);
}

TEST(GraphJson, RoundTripAndErrors) {
  const Graph g = reduced_goldberg(1).graph;
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_EQ(parse_graph_text(graph_to_json(g).dump()), g);
  EXPECT_THROW(parse_graph_text("{\"n\": 2, \"edges\": [[0]]}"), FormatError);
  EXPECT_THROW(parse_graph_text("{\"n\": 2, \"edges\": [[0, 5]]}"), FormatError);
  EXPECT_THROW(parse_graph_text("{oops"), FormatError);
}

TEST(MaxFlow, MatchesBruteForceMinCut) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 6;
    std::vector<std::array<std::int64_t, 3>> arcs;
    MaxFlow mf(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 3 == 0) {
          const std::int64_t c = static_cast<std::int64_t>(rng() % 9);
          arcs.push_back({u, v, c});
          mf.add_arc(u, v, c);
        }
    std::int64_t best = MaxFlow::kInf;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (!(mask & 1) || (mask >> (n - 1)) & 1) continue;
      std::int64_t c = 0;
      for (auto [u, v, cap] : arcs)
        if (((mask >> u) & 1) && !((mask >> v) & 1)) c += cap;
      best = std::min(best, c);
    }
    EXPECT_EQ(mf.solve(0, n - 1), best);
  }
}

TEST(Circulation, LowerBoundsRespected) {
  // Triangle with every arc forced into [2, 3]: feasible. [2,3] against [0,1]: not.
  std::vector<BoundedArc> ok{{0, 1, 2, 3}, {1, 2, 2, 3}, {2, 0, 2, 3}};
  EXPECT_TRUE(circulation_feasible(3, ok));
  std::vector<BoundedArc> bad{{0, 1, 2, 3}, {1, 2, 0, 1}, {2, 0, 2, 3}};
  EXPECT_FALSE(circulation_feasible(3, bad));
  const auto f = find_circulation(3, ok);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], f[1]);
  EXPECT_EQ(f[1], f[2]);
}
