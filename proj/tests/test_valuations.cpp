#include <gtest/gtest.h>

#include <map>
#include <random>

#include "instances.hpp"
#include "oracles.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/flows.hpp"
#include "snarkflow/valuations.hpp"

using namespace snarkflow;

namespace {

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s.members()) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

TEST(PhiSet, Formula) {
  EXPECT_EQ(phi_from_counts(5, 1), Rational(5, 2));
  EXPECT_EQ(phi_from_counts(9, 5), Rational(9, 2));
  EXPECT_EQ(phi_from_ratio(excess_slope(Rational(9, 2))), Rational(9, 2));
}

TEST(Petersen, ExhaustiveValuationsGiveFive) {
  const Graph g = petersen().graph;
  std::optional<Rational> best;
  for (const auto& b : oracle::cubic_valuations(g.n())) {
    if (!oracle::orientable(g, b)) continue;
    const Rational x = oracle::phi_b(g, b);
    EXPECT_EQ(phi_valuation(g, b), x);
    if (!best || x < *best) best = x;
  }
  ASSERT_TRUE(best);
  EXPECT_EQ(*best, Rational(5));
  EXPECT_EQ(phi_via_valuations(g).phi, Rational(5));
}

TEST(PhiViaValuations, SmallGraphs) {
  EXPECT_EQ(phi_via_valuations(complete_graph(4)).phi, Rational(4));
  EXPECT_EQ(phi_via_valuations(complete_bipartite(3, 3)).phi, Rational(3));
  EXPECT_THROW(phi_via_valuations(Graph(3, {{0, 1}, {1, 2}})), BridgeError);
}

TEST(Validate, OrientableAgreesWithOracle) {
  std::mt19937_64 rng(3);
  const Graph g = oracle::random_cubic(12, rng);
  for (const auto& b : oracle::cubic_valuations(12)) {
    if (rng() % 16) continue;
    EXPECT_EQ(validate_valuation(g, b, ValuationMode::orientable).ok, oracle::orientable(g, b));
  }
  EXPECT_THROW(require_valuation(g, Valuation(12, 0)), ParityError);
}

TEST(MaxExcess, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(2024);
  const std::vector<Rational> slopes{Rational(1, 3), Rational(2, 5), Rational(5, 9), Rational(1, 2), Rational(7, 11)};
  int done = 0;
  while (done < 100) {
    const int n = 2 * (3 + static_cast<int>(rng() % 7));  // 6..18
    const Graph g = oracle::random_cubic(n, rng);
    Valuation b(n);
    for (auto& x : b) x = rng() % 2 ? 1 : -1;
    const Rational t = slopes[rng() % slopes.size()];
    const auto got = max_excess(g, b, t);
    EXPECT_EQ(got.value, oracle::max_excess(g, b, t)) << "n=" << n;
    const std::uint64_t w = mask_of(got.witness);
    EXPECT_EQ(Rational(oracle::sum_of(b, w)) - t * Rational(oracle::cut_of(g, w)), got.value);
    ++done;
  }
}

TEST(ViolatingSet, ThresholdAtPhi) {
  const Graph g = petersen().graph;
  const auto res = phi_via_valuations(g);
  EXPECT_FALSE(violating_set(g, res.b, res.phi).has_value());
  auto s = violating_set(g, res.b, Rational(9, 2));
  ASSERT_TRUE(s);
  EXPECT_GT(phi_set(g, res.b, *s), Rational(9, 2));
}

TEST(FlowToValuation, RoundTrip) {
  for (const auto& g : {petersen().graph, complete_graph(4), goldberg(1).graph}) {
    const auto res = phi_via_flows(g);
    const Valuation b = flow_to_valuation(g, res.certificate);
    EXPECT_TRUE(validate_valuation(g, b, ValuationMode::orientable).ok);
    EXPECT_FALSE(violating_set(g, b, res.phi).has_value());
  }
}

TEST(EnumerateValuations, PetersenMatchesOracle) {
  const Graph g = petersen().graph;
  long long oracle_count = 0;
  for (const auto& b : oracle::cubic_valuations(10))
    if (oracle::orientable(g, b) && oracle::phi_b(g, b) <= Rational(5)) ++oracle_count;
  long long count = 0;
  enumerate_valuations(g, Rational(5), [&](const Valuation&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, oracle_count);
}

TEST(EnumerateOptimalSets, MatchesOracle) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 10; ++iter) {
    const Graph g = oracle::random_cubic(10, rng);
    auto b = instances::random_orientable(g, rng, 200);
    if (!b) continue;
    const Rational target = oracle::phi_b(g, *b);
    std::set<std::uint64_t> want, got;
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << 10); ++m) {
      if (!(m & 1)) continue;
      const long long c = oracle::cut_of(g, m);
      if (c && oracle::phi_set(c, oracle::sum_of(*b, m)) == target) want.insert(m);
    }
    enumerate_optimal_sets(g, *b, target, 0, [&](const VertexSet& s) { got.insert(mask_of(s)); });
    EXPECT_EQ(got, want);
  }
}

TEST(LemmaSuite, RandomInstancesHaveNoFailures) {
  std::mt19937_64 rng(5);
  int count = 0;
  std::map<std::string, int> passes;
  while (count < 200) {
    auto inst = instances::lemma_instance(count % 4, rng);
    if (!inst) continue;
    for (const auto& c : lemma_suite(inst->g, inst->b, inst->s, inst->k)) {
      EXPECT_NE(c.status, "fail") << c.lemma << ": " << c.detail;
      if (c.status == "pass") ++passes[c.lemma];
    }
    ++count;
  }
  // Every lemma had its premise met at least once.
  for (const char* name : {"complement", "split-inside", "split-outside", "boundary-colours", "swap", "large-boundary"})
    EXPECT_GT(passes[name], 0) << name;
}

TEST(LemmaSuite, LargeBoundaryArithmetic) {
  // 4 < phi(S,b) < 4 + 1/k forces ∂ >= 4k + 5: check the arithmetic directly.
  for (int k = 1; k <= 6; ++k)
    for (int cut = 1; cut < 4 * k + 5; ++cut)
      for (int beta = -cut + 2; beta < cut; beta += 2) {
        const Rational x = phi_from_counts(cut, beta);
        EXPECT_FALSE(x > Rational(4) && x < Rational(4) + Rational(1, k)) << cut << " " << beta;
      }
}
