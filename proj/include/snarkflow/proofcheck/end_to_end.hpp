#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/flows.hpp"
#include "snarkflow/proofcheck/discharge.hpp"
#include "snarkflow/valuations.hpp"

namespace snarkflow::proofcheck {

/// Walks the argument on the reduced graph: every valuation at the minimum,
/// the largest connected optimal S containing the hub, its block types,
/// boundaries and charges.
struct EndToEndReport {
  int k = 0;
  bool completed = true;
  double seconds = 0;
  Rational expected;  // 4 + 1/(k+1)
  std::optional<Rational> phi_reduced;
  std::optional<Rational> phi_full;
  long long valuations = 0;           // b with phi(b) = phi_reduced
  long long instances = 0;            // those with an optimal connected S containing the hub
  long long negation_covered = 0;     // the rest, covered through -b
  long long uncovered = 0;
  long long ties = 0;                 // several largest optimal sets
  long long lemma5_failures = 0;      // hard
  long long conservation_failures = 0;  // hard
  long long unclassifiable = 0;
  long long boundary_excess = 0;
  long long over_cap = 0;
  long long lemma_failures = 0;
  std::map<std::string, long long> type_tally;
  std::map<std::string, long long> lemma_status;
  std::vector<std::string> examples;

  bool value_ok() const {
    return phi_reduced && phi_full && *phi_reduced == expected && *phi_full == expected;
  }
  bool hard_ok() const { return completed && value_ok() && !lemma5_failures && !conservation_failures && !uncovered; }
};

namespace detail {

inline bool boundary_colours_hold(const Graph& g, const Valuation& b, const VertexSet& s, int hub) {
  for (int e : boundary(g, s).edges) {
    auto [u, v] = g.edge(e);
    const int x = s.contains(u) ? u : v, y = x == u ? v : u;
    if (x != hub && b[x] != 1) return false;
    if (y != hub && b[y] != -1) return false;
  }
  return true;
}

}  // namespace detail

inline EndToEndReport end_to_end_check(int k, double budget_seconds = 0, bool run_lemmas = true) {
  const auto start = std::chrono::steady_clock::now();
  const Deadline deadline(budget_seconds);
  EndToEndReport rep;
  rep.k = k;
  rep.expected = Rational(4) + Rational(1, k + 1);
  const LabeledGraph lg = reduced_goldberg(k);
  const Graph& g = lg.graph;
  const BlockIndexing bi = block_indexing(lg);
  const int hub = bi.hub[0];
  const int L = bi.block_count;

  try {
    rep.phi_full = phi_via_valuations(goldberg(k).graph, deadline).phi;
    rep.phi_reduced = phi_via_valuations(g, deadline).phi;
    const Rational target = *rep.phi_reduced;

    std::set<Valuation> covered, seen;
    enumerate_valuations(
        g, target,
        [&](const Valuation& b) {
          deadline.check();
          if (phi_valuation(g, b) != target) return true;
          ++rep.valuations;
          seen.insert(b);
          std::optional<VertexSet> best;
          long long best_count = 0;
          enumerate_optimal_sets(g, b, target, hub, [&](const VertexSet& s) {
            if (components_within(g, s).size() != 1) return;
            if (!best || s.size() > best->size()) {
              best = s;
              best_count = 1;
            } else if (s.size() == best->size()) {
              ++best_count;
            }
          });
          if (!best) return true;
          ++rep.instances;
          covered.insert(b);
          if (best_count > 1) ++rep.ties;
          const VertexSet& s = *best;

          if (!detail::boundary_colours_hold(g, b, s, hub)) {
            ++rep.lemma5_failures;
            rep.examples.push_back("boundary colours fail");
          }
          if (run_lemmas)
            for (const auto& c : lemma_suite(g, b, s, k)) {
              ++rep.lemma_status[c.lemma + ":" + c.status];
              if (c.status == "fail") ++rep.lemma_failures;
            }
          std::vector<int> ids;
          try {
            ids = classify_blocks(bi, b, s);
          } catch (const UnclassifiableBlock& ex) {
            ++rep.unclassifiable;
            if (rep.examples.size() < 12) rep.examples.push_back(ex.what());
            return true;
          }
          const auto led = discharge_with_types(lg, bi, s, ids);
          const auto bd = detect_boundaries(lg, bi, s);
          for (const auto& t : led.types) ++rep.type_tally[t];
          if (!led.conserved()) ++rep.conservation_failures;
          if (bd.left_count() > 1 || bd.right_count() > 1) ++rep.boundary_excess;
          for (int i = 0; i < L; ++i)
            if (led.charge[i] > charge_cap(bd, i)) {
              ++rep.over_cap;
              if (rep.examples.size() < 12) {
                std::string line = "charge above cap:";
                for (const auto& t : led.types) line += " " + t;
                rep.examples.push_back(line);
              }
              break;
            }
          return true;
        },
        deadline);
    for (const auto& b : seen) {
      if (covered.count(b)) continue;
      if (covered.count(negate(b)))
        ++rep.negation_covered;
      else
        ++rep.uncovered;
    }
  } catch (const BudgetExceeded&) {
    rep.completed = false;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline nlohmann::json end_to_end_to_json(const EndToEndReport& r) {
  auto opt = [](const std::optional<Rational>& x) -> nlohmann::json {
    return x ? nlohmann::json(x->str()) : nlohmann::json(nullptr);
  };
  return {{"k", r.k},
          {"completed", r.completed},
          {"seconds", r.seconds},
          {"expected_phi", r.expected.str()},
          {"phi_reduced", opt(r.phi_reduced)},
          {"phi_full", opt(r.phi_full)},
          {"valuations_at_minimum", r.valuations},
          {"instances", r.instances},
          {"negation_covered", r.negation_covered},
          {"uncovered", r.uncovered},
          {"ties", r.ties},
          {"hard",
           {{"value", r.value_ok()},
            {"boundary_colour_failures", r.lemma5_failures},
            {"conservation_failures", r.conservation_failures},
            {"ok", r.hard_ok()}}},
          {"observed",
           {{"unclassifiable", r.unclassifiable},
            {"boundary_excess", r.boundary_excess},
            {"over_cap", r.over_cap},
            {"lemma_failures", r.lemma_failures},
            {"lemma_status", r.lemma_status},
            {"type_tally", r.type_tally}}},
          {"examples", r.examples}};
}

}  // namespace snarkflow::proofcheck
