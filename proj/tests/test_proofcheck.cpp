#include <gtest/gtest.h>

#include <set>

#include "snarkflow/families.hpp"
#include "snarkflow/proofcheck/audit.hpp"
#include "snarkflow/proofcheck/block_model.hpp"
#include "snarkflow/proofcheck/catalog.hpp"
#include "snarkflow/proofcheck/discharge.hpp"
#include "snarkflow/proofcheck/end_to_end.hpp"

using namespace snarkflow;
using namespace snarkflow::proofcheck;

namespace {

// Admissible colourings counted directly: no monochromatic path on three
// block vertices, and neither colour appears exactly twice on the union of
// the two 5-circuits abcde and cdegf, which is the whole block.
int admissible_by_hand() {
  const std::vector<std::array<int, 2>> edges{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {4, 6}, {5, 6}};
  int count = 0;
  for (int m = 0; m < 128; ++m) {
    auto col = [&](int v) { return (m >> v) & 1; };
    bool ok = true;
    for (int mid = 0; mid < 7 && ok; ++mid) {
      std::vector<int> nb;
      for (auto [u, v] : edges) {
        if (u == mid) nb.push_back(v);
        if (v == mid) nb.push_back(u);
      }
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (col(nb[i]) == col(mid) && col(nb[j]) == col(mid)) ok = false;
    }
    int white = 0;
    for (int v = 0; v < 7; ++v) white += col(v);
    if (white == 2 || white == 5) ok = false;
    count += ok;
  }
  return count;
}

std::vector<int> ids(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(directed_index(n));
  return out;
}

}  // namespace

TEST(Configurations, FourClasses) {
  const auto classes = enumerate_configurations();
  ASSERT_EQ(classes.size(), 4u);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  EXPECT_EQ(static_cast<int>(total), admissible_by_hand());
  for (const auto& c : classes)
    for (const auto& m : c.members) EXPECT_TRUE(colouring_admissible(m));
  EXPECT_FALSE(colouring_admissible(parse_colouring("WWWWWWW")));
}

TEST(Configurations, FourIsTwistOfTwo) {
  const auto classes = enumerate_configurations();
  const auto tw = letter_part(ext_permutation(BlockSymmetry::twist));
  std::set<std::string> twisted, four;
  for (const auto& c : classes) {
    if (c.id == 2)
      for (const auto& m : c.members) twisted.insert(colouring_str(permute(m, tw)));
    if (c.id == 4)
      for (const auto& m : c.members) four.insert(colouring_str(m));
  }
  EXPECT_EQ(twisted, four);
}

TEST(BlockTypes, PaperRulesCounts) {
  EXPECT_EQ(enumerate_block_types(1, kPaperRules).size(), 14u);
  EXPECT_EQ(enumerate_block_types(2, kPaperRules).size(), 8u);
  EXPECT_EQ(enumerate_block_types(3, kPaperRules).size(), 12u);
}

TEST(BlockTypes, RelaxedIsLarger) {
  EXPECT_EQ(enumerate_block_types(1, kRelaxedRules).size(), 19u);
  EXPECT_EQ(enumerate_block_types(2, kRelaxedRules).size(), 11u);
  EXPECT_EQ(enumerate_block_types(3, kRelaxedRules).size(), 14u);
  EXPECT_THROW(parse_rule("R9"), std::invalid_argument);
}

TEST(Catalog, MatchesEnumeration) {
  for (int cfg = 1; cfg <= 3; ++cfg) {
    std::set<BlockPattern> stored;
    for (const auto& e : catalog())
      if (e.configuration == cfg) stored.insert(e.pattern);
    std::set<BlockPattern> found;
    for (const auto& p : enumerate_block_types(cfg, kPaperRules)) {
      // The table keeps one representative per reverse pair.
      found.insert(stored.count(p) ? p : transform(p, BlockSymmetry::reverse));
    }
    EXPECT_EQ(found, stored) << "configuration " << cfg;
  }
}

TEST(Catalog, ShapeAndChecksum) {
  EXPECT_EQ(catalog().size(), 42u);
  EXPECT_EQ(directed_types().size(), 84u);
  EXPECT_EQ(fnv1a64(kCatalogTable), kCatalogChecksum);
  int four = 0;
  for (const auto& e : catalog()) four += e.configuration == 4;
  EXPECT_EQ(four, 8);
  EXPECT_EQ(catalog_to_json().size(), 84u);
  EXPECT_EQ(transpose_id("G_2^T"), "G_2");
  EXPECT_THROW(directed_index("Z_9"), std::out_of_range);
}

TEST(Catalog, ClosedUnderReverseAndTwist) {
  std::set<BlockPattern> all;
  for (const auto& t : directed_types()) all.insert(t.pattern);
  for (const auto& t : directed_types()) {
    const auto r = transform(t.pattern, BlockSymmetry::reverse);
    EXPECT_TRUE(all.count(r)) << t.id;
    EXPECT_EQ(transform(r, BlockSymmetry::reverse), t.pattern);
    EXPECT_EQ(transform(transform(t.pattern, BlockSymmetry::twist), BlockSymmetry::twist), t.pattern);
  }
  // Twisting configuration 2 types lands in configuration 4.
  for (const auto& e : catalog()) {
    if (e.configuration != 2) continue;
    const auto tw = transform(e.pattern, BlockSymmetry::twist);
    bool hit = false;
    for (const auto& f : catalog())
      if (f.configuration == 4 && (f.pattern == tw || transform(f.pattern, BlockSymmetry::reverse) == tw)) hit = true;
    EXPECT_TRUE(hit) << e.name;
  }
}

TEST(ChargeRules, SendersAndForwarders) {
  EXPECT_EQ(step2_right_amount("G_2^T"), Rational(5, 2));
  EXPECT_EQ(step2_left_amount("G_2"), Rational(5, 2));
  EXPECT_EQ(step2_right_amount("K_1"), Rational(2));
  EXPECT_EQ(step2_left_amount("K_1"), Rational(2));  // K_1 and K_1^T both listed
  EXPECT_EQ(step2_right_amount("A_1"), Rational(0));
  EXPECT_TRUE(step3_sender("E_1^T"));
  EXPECT_TRUE(step3_forwarder("G_3"));
  EXPECT_FALSE(step3_forwarder("E_1"));
}

TEST(BlockTypeOf, ReverseConsistency) {
  auto inst = sequence_instance(ids({"A_1", "A_1", "A_1"}));
  auto t = block_type_of(inst.indexing, inst.b, inst.s, 0);
  ASSERT_TRUE(t);
  EXPECT_EQ(directed_types()[*t].pattern, directed_types()[directed_index("A_1")].pattern);
  // Complemented memberships never match (h fixes the S side).
  VertexSet comp = inst.s.complement();
  EXPECT_FALSE(block_type_of(inst.indexing, inst.b, comp, 0).has_value());
}

TEST(Boundaries, FullSetHasNone) {
  const auto lg = reduced_goldberg(1);
  const auto bd = detect_boundaries(lg, VertexSet::full(lg.graph.n()));
  EXPECT_EQ(bd.left_count(), 0);
  EXPECT_EQ(bd.right_count(), 0);
  EXPECT_THROW(detect_boundaries(lg, VertexSet(lg.graph.n())), std::invalid_argument);
}

TEST(Boundaries, OneBlockRemoved) {
  // S = V minus the interior of block 1: block 0 is a left boundary, block 2 a right one.
  const auto lg = reduced_goldberg(1);
  const auto bi = block_indexing(lg);
  VertexSet s = VertexSet::full(lg.graph.n());
  for (int v : bi.blocks[1]) s.erase(v);
  const auto bd = detect_boundaries(lg, bi, s);
  EXPECT_EQ(bd.left_count(), 1);
  EXPECT_EQ(bd.right_count(), 1);
  EXPECT_TRUE(bd.left[0]);
  EXPECT_TRUE(bd.right[2]);
}

TEST(Discharge, ConservationAndStepOne) {
  const auto lg = reduced_goldberg(2);
  const auto bi = block_indexing(lg);
  VertexSet s = VertexSet::full(lg.graph.n());
  for (int v : bi.blocks[3]) s.erase(v);
  std::vector<int> t(5, directed_index("A_1"));
  const auto led = discharge_with_types(lg, bi, s, t);
  EXPECT_TRUE(led.conserved());
  EXPECT_EQ(led.cut_size, boundary(lg.graph, s).size);
  // Step 1 only: each block holds the cut edges whose S-end it contains.
  for (int i = 0; i < 5; ++i) {
    int mine = 0;
    for (int e : boundary(lg.graph, s).edges) {
      auto [u, v] = lg.graph.edge(e);
      const int x = s.contains(u) ? u : v;
      mine += std::find(bi.blocks[i].begin(), bi.blocks[i].end(), x) != bi.blocks[i].end();
    }
    EXPECT_EQ(led.initial[i], Rational(mine));
  }
}

TEST(Discharge, StepThreeForwardsOverForwarders) {
  // E_1 sends 1/2 each way; C_2 passes the right-going half on to N_1.
  const auto led = discharge_abstract(ids({"E_1", "C_2", "N_1"}));
  EXPECT_TRUE(led.conserved());
  EXPECT_FALSE(led.cycle);
  EXPECT_EQ(led.step3_in[2][0] + led.step3_in[2][1], Rational(1));
  EXPECT_EQ(led.step3_in[1][0] + led.step3_in[1][1], Rational(0));
}

TEST(Discharge, PacketOverForwardersReturnsToSender) {
  const auto led = discharge_abstract(ids({"E_1", "C_2", "C_2"}));
  EXPECT_FALSE(led.cycle);
  EXPECT_EQ(led.step3_in[0][0], Rational(1, 2));
  EXPECT_TRUE(led.conserved());
}

TEST(Discharge, IncompatibleNeighboursRejected) {
  EXPECT_THROW(discharge_abstract(ids({"A_1", "E_1", "E_1"})), IncompatibleSequence);
  EXPECT_THROW(discharge_abstract(ids({"A_1", "A_1"})), std::invalid_argument);
}

TEST(Audit, ExactRulesLengthThree) {
  const auto a = audit_sequences(3);
  EXPECT_TRUE(a.completed);
  EXPECT_EQ(a.survivors, 0);  // phi(H_3) = 9/2 leaves nothing below the bound
  EXPECT_TRUE(a.claims_hold());
}

TEST(Audit, LocalRulesLengthThree) {
  SequenceRules local;
  local.optimal = false;
  const auto a = audit_sequences(3, local);
  EXPECT_EQ(a.survivors, 290);
  EXPECT_EQ(a.d3_survivors, 0);
  EXPECT_EQ(a.neighbour_survivors, 0);
  EXPECT_EQ(a.conservation_failures, 0);
  EXPECT_TRUE(a.claims_hold());
  for (const auto& [claim, n] : a.claim_checks) EXPECT_GT(n, 0) << claim;
}

TEST(Audit, ExactRulesLengthFive) {
  const auto a = audit_sequences(5);
  EXPECT_EQ(a.survivors, 120);
  EXPECT_EQ(a.charge_violations, 0);
  EXPECT_EQ(a.total_violations, 0);
  EXPECT_TRUE(a.claims_hold());
}

TEST(Audit, DThreeWithLeftNeighbourCTwoIsRejected) {
  SequenceRules local;
  local.optimal = false;
  for (int t = 0; t < static_cast<int>(directed_types().size()); ++t)
    EXPECT_NE(sequence_verdict({directed_index("C_2"), directed_index("D_3"), t}, local), "");
}

TEST(Audit, BudgetGivesPartialReport) {
  const Deadline tiny(1e-6);
  SequenceRules bare{false, false, false, false, false, false};
  const auto a = audit_sequences(5, bare, tiny);
  EXPECT_FALSE(a.completed);
  EXPECT_FALSE(audit_to_json(a)["completed"].get<bool>());
}

TEST(EndToEnd, KOne) {
  const auto r = end_to_end_check(1);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(*r.phi_full, Rational(9, 2));
  EXPECT_EQ(*r.phi_reduced, Rational(9, 2));
  EXPECT_TRUE(r.hard_ok());
  EXPECT_EQ(r.unclassifiable, 0);
  EXPECT_EQ(r.boundary_excess, 0);
  EXPECT_EQ(r.over_cap, 0);
  EXPECT_EQ(r.lemma_failures, 0);
  EXPECT_GT(r.instances, 0);
  EXPECT_EQ(r.uncovered, 0);
}
