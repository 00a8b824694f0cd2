#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "snarkflow/flows.hpp"
#include "snarkflow/proofcheck/catalog.hpp"
#include "snarkflow/proofcheck/discharge.hpp"

namespace snarkflow::proofcheck {

/// Global rules applied to cyclic type sequences on the reduced graph.
struct SequenceRules {
  bool lemma5 = true;     // white/black ends on every cut edge
  bool connected = true;  // S and V - S connected
  bool patterns = true;   // no connected X (|X| <= 7, hub excluded) with phi(X, ±b) >= 9/2
  bool swaps = true;      // balanced two-vertex swaps
  bool neighbours = true; // the swap used for neighbouring E_1 / C_2 / C_4 types
  bool optimal = true;    // b orientable, phi(S,b) = phi(b) < phi_bound
  Rational phi_bound{9, 2};
  bool include_d3 = true;
};

struct SequenceAudit {
  int length = 0;
  bool completed = true;
  double seconds = 0;
  long long nodes = 0;
  long long survivors = 0;
  std::map<std::string, long long> rejected;
  long long d3_survivors = 0;
  long long neighbour_survivors = 0;  // survivors with two adjacent E_1/C_2/C_4 types
  long long charge_violations = 0;
  long long total_violations = 0;  // block charges summing above 2 len + 6
  long long conservation_failures = 0;
  long long cycles = 0;
  long long boundary_excess = 0;  // more than one left or right boundary
  std::map<std::string, long long> claim_checks;
  std::map<std::string, long long> claim_failures;
  std::vector<std::string> examples;

  bool claims_hold() const {
    if (charge_violations || total_violations || conservation_failures || cycles || d3_survivors || neighbour_survivors) return false;
    for (const auto& [k, v] : claim_failures)
      if (v) return false;
    return true;
  }
};

namespace detail {

using Mask = std::uint64_t;

inline const std::vector<std::string>& neighbour_rule_types() {
  static const std::vector<std::string> q{"E_1", "E_1^T", "C_2", "C_2^T", "C_4", "C_4^T"};
  return q;
}

inline bool is_neighbour_rule_type(const std::string& id) {
  const auto& q = neighbour_rule_types();
  return std::find(q.begin(), q.end(), id) != q.end();
}

/// Letters of a neighbour-rule type moved into S; `as_right` when it is the
/// right member of the pair.
inline unsigned neighbour_pick(const std::string& id, bool as_right) {
  auto bits = [](std::initializer_list<int> ls) {
    unsigned m = 0;
    for (int l : ls) m |= 1U << l;
    return m;
  };
  if (id == "E_1") return as_right ? bits({kA, kB, kC, kF}) : bits({kB, kC, kF, kG});
  if (id == "E_1^T") {
    const unsigned base = as_right ? bits({kB, kC, kF, kG}) : bits({kA, kB, kC, kF});
    const auto rev = block_letter_automorphism(BlockSymmetry::reverse);
    unsigned m = 0;
    for (int l = 0; l < 7; ++l)
      if ((base >> l) & 1U) m |= 1U << rev[l];
    return m;
  }
  return bits({kA, kB, kC, kE, kF, kG});
}

class SequenceSearch {
 public:
  SequenceSearch(int length, const SequenceRules& rules, const Deadline& deadline)
      : rules_(rules), deadline_(deadline), inst_(sequence_instance(std::vector<int>(length, 0))) {
    L_ = length;
    k_ = (L_ - 1) / 2;
    const Graph& g = inst_.graph.graph;
    n_ = g.n();
    if (n_ > 64) throw std::invalid_argument("sequence audit supports at most 9 blocks");
    hub_ = inst_.indexing.hub[0];
    nb_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      nb_[u] |= Mask{1} << v;
      nb_[v] |= Mask{1} << u;
    }
    for (auto [u, v] : g.edges()) edges_.push_back({u, v});
    block_of_.assign(n_, -1);
    for (int i = 0; i < L_; ++i)
      for (int l = 0; l < 7; ++l) block_of_[inst_.indexing.blocks[i][l]] = i;
    place_.assign(L_, std::vector<Mask>(128, 0));
    for (int i = 0; i < L_; ++i)
      for (unsigned m = 0; m < 128; ++m)
        for (int l = 0; l < 7; ++l)
          if ((m >> l) & 1U) place_[i][m] |= Mask{1} << inst_.indexing.blocks[i][l];

    const auto& dt = directed_types();
    std::vector<std::string> colours;
    for (const auto& t : dt) {
      TypeBits tb;
      tb.s = t.pattern.membership;
      for (int l = 0; l < 7; ++l)
        if (t.pattern.colour[l] > 0) tb.w |= 1U << l;
      const std::string c = colouring_str(t.pattern.colour);
      auto it = std::find(colours.begin(), colours.end(), c);
      tb.colour = static_cast<int>(it - colours.begin());
      if (it == colours.end()) colours.push_back(c);
      tb.d3 = t.id == "D_3" || t.id == "D_3^T";
      types_.push_back(tb);
    }
    if (colours.size() > 16) throw std::logic_error("more than 16 block colourings");
    for (const auto& x : dt) {
      std::vector<char> row;
      for (const auto& y : dt) row.push_back(membership_compatible(x.pattern, y.pattern));
      compatible_.push_back(row);
    }
    build_patterns();
  }

  /// Runs the rules on one full sequence; returns the rejection reason, or
  /// "" when it survives (the claims are then checked as in run()).
  std::string evaluate(const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) != L_) throw std::invalid_argument("sequence length does not match");
    audit_ = SequenceAudit{};
    audit_.length = L_;
    seq_ = ids;
    for (int i = 0; i < L_; ++i)
      if (!compatible_[seq_[i]][seq_[(i + 1) % L_]]) return "incompatible";
    Mask s = 0, white = 0;
    for (int i = 0; i < L_; ++i) {
      s |= place_[i][types_[seq_[i]].s];
      white |= place_[i][types_[seq_[i]].w];
    }
    if (rules_.patterns)
      for (auto& gr : groups_)
        if (!group_ok(gr, white)) return "pattern";
    finish(s | (Mask{1} << hub_), white);
    if (audit_.survivors) return "";
    return audit_.rejected.begin()->first;
  }

  const SequenceAudit& last() const { return audit_; }

  SequenceAudit run() {
    const auto start = std::chrono::steady_clock::now();
    audit_.length = L_;
    seq_.assign(L_, -1);
    try {
      extend(0, 0, 0);
    } catch (const BudgetExceeded&) {
      audit_.completed = false;
    }
    audit_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return audit_;
  }

 private:
  struct TypeBits {
    unsigned s = 0, w = 0;
    int colour = 0;
    bool d3 = false;
  };
  struct Pattern {
    Mask set;
    int size;
    int cut;
  };
  struct Group {
    std::vector<int> blocks;
    std::vector<Pattern> members;
    std::vector<signed char> memo;
  };

  SequenceRules rules_;
  const Deadline& deadline_;
  SequenceInstance inst_;
  int L_ = 0, k_ = 0, n_ = 0, hub_ = 0;
  std::vector<Mask> nb_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> block_of_;
  std::vector<std::vector<Mask>> place_;
  std::vector<TypeBits> types_;
  std::vector<std::vector<char>> compatible_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> groups_at_level_;
  std::vector<int> seq_;
  SequenceAudit audit_;

  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  int cut_of(Mask x) const {
    int c = 0;
    for (Mask y = x; y; y &= y - 1) c += std::popcount(nb_[std::countr_zero(y)] & ~x);
    return c;
  }

  void build_patterns() {
    const Mask hub = Mask{1} << hub_;
    std::unordered_set<Mask> seen;
    std::vector<Mask> stack;
    for (int v = 0; v < n_; ++v)
      if (v != hub_) stack.push_back(Mask{1} << v);
    std::map<unsigned, int> group_of;
    groups_at_level_.assign(L_, {});
    while (!stack.empty()) {
      const Mask x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      unsigned blocks = 0;
      for (Mask y = x; y; y &= y - 1) blocks |= 1U << block_of_[std::countr_zero(y)];
      auto [it, fresh] = group_of.try_emplace(blocks, static_cast<int>(groups_.size()));
      if (fresh) {
        Group gr;
        for (int i = 0; i < L_; ++i)
          if ((blocks >> i) & 1U) gr.blocks.push_back(i);
        std::size_t keys = 1;
        for (std::size_t i = 0; i < gr.blocks.size(); ++i) keys *= 16;
        gr.memo.assign(keys, -1);
        groups_.push_back(std::move(gr));
        groups_at_level_[31 - std::countl_zero(blocks)].push_back(it->second);
      }
      groups_[it->second].members.push_back({x, std::popcount(x), cut_of(x)});
      if (std::popcount(x) == 7) continue;
      Mask border = 0;
      for (Mask y = x; y; y &= y - 1) border |= nb_[std::countr_zero(y)];
      border &= ~x & ~hub;
      for (Mask y = border; y; y &= y - 1) stack.push_back(x | (y & (~y + 1)));
    }
  }

  bool group_ok(Group& gr, Mask white) {
    std::size_t key = 0;
    for (int i : gr.blocks) key = key * 16 + types_[seq_[i]].colour;
    if (gr.memo[key] >= 0) return gr.memo[key];
    bool ok = true;
    for (const auto& p : gr.members) {
      const int bs = 2 * std::popcount(p.set & white) - p.size;
      if (9 * std::abs(bs) >= 5 * p.cut) {
        ok = false;
        break;
      }
    }
    gr.memo[key] = ok;
    return ok;
  }

  bool lemma5(Mask s, Mask white) const {
    for (auto [u, v] : edges_) {
      const bool su = (s >> u) & 1U, sv = (s >> v) & 1U;
      if (su == sv) continue;
      const int x = su ? u : v, y = su ? v : u;
      if (x != hub_ && !((white >> x) & 1U)) return false;
      if (y != hub_ && ((white >> y) & 1U)) return false;
    }
    return true;
  }

  std::vector<Mask> components(Mask side) const {
    std::vector<Mask> out;
    while (side) {
      Mask comp = side & (~side + 1), frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask add = nb_[v] & side & ~comp;
        comp |= add;
        frontier |= add;
      }
      out.push_back(comp);
      side &= ~comp;
    }
    return out;
  }

  bool connected(Mask side) const { return components(side).size() == 1; }

  /// Returns a rejection reason or nullptr.
  const char* swap_reason(Mask s, Mask white) const {
    const int threshold = 4 * k_ + 9;
    for (int u = 0; u < n_; ++u) {
      if (u == hub_) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (v == hub_) continue;
        const bool side = (s >> u) & 1U;
        if (side != bool((s >> v) & 1U)) continue;
        if (bool((white >> u) & 1U) == bool((white >> v) & 1U)) continue;
        const Mask t = (Mask{1} << u) | (Mask{1} << v);
        int cross = 0, to_s = 0;
        for (int w : {u, v}) {
          cross += std::popcount(nb_[w] & ~t);
          to_s += std::popcount(nb_[w] & ~t & s);
        }
        if (2 * to_s != cross) continue;
        const Mask moved = side ? (s & ~t) : (s | t);
        if (!lemma5(moved, white)) return "swap-lemma5";
        for (Mask part : {moved, all() & ~moved})
          for (Mask c : components(part))
            if (cut_of(c) < threshold) return "swap-small-component";
        if (!side && connected(moved)) return "swap-larger-set";
      }
    }
    return nullptr;
  }

  bool neighbour_contradiction(Mask s, Mask white) const {
    const auto& dt = directed_types();
    for (int i = 0; i < L_; ++i) {
      const int j = (i + 1) % L_;
      const std::string& x = dt[seq_[i]].id;
      const std::string& y = dt[seq_[j]].id;
      if (!is_neighbour_rule_type(x) || !is_neighbour_rule_type(y)) continue;
      const Mask t = place_[i][neighbour_pick(x, false)] | place_[j][neighbour_pick(y, true)];
      if (t & s) continue;
      if (2 * std::popcount(t & white) != std::popcount(t)) continue;
      int cross = 0, to_s = 0;
      for (Mask z = t; z; z &= z - 1) {
        const int w = std::countr_zero(z);
        cross += std::popcount(nb_[w] & ~t);
        to_s += std::popcount(nb_[w] & ~t & s);
      }
      if (2 * to_s != cross) continue;
      if (connected(s | t)) return true;
    }
    return false;
  }

  bool has_neighbour_pair() const {
    const auto& dt = directed_types();
    for (int i = 0; i < L_; ++i)
      if (is_neighbour_rule_type(dt[seq_[i]].id) && is_neighbour_rule_type(dt[seq_[(i + 1) % L_]].id)) return true;
    return false;
  }

  void reject(const std::string& why) { ++audit_.rejected[why]; }

  void extend(int level, Mask s, Mask white) {
    ++audit_.nodes;
    if ((audit_.nodes & 0x3FF) == 0) deadline_.check();
    if (level == L_) {
      finish(s | (Mask{1} << hub_), white);
      return;
    }
    for (int t = 0; t < static_cast<int>(types_.size()); ++t) {
      if (!rules_.include_d3 && types_[t].d3) continue;
      if (level > 0 && !compatible_[seq_[level - 1]][t]) continue;
      if (level == L_ - 1 && !compatible_[t][seq_[0]]) continue;
      seq_[level] = t;
      const Mask s2 = s | place_[level][types_[t].s];
      const Mask w2 = white | place_[level][types_[t].w];
      if (rules_.patterns) {
        bool ok = true;
        for (int gi : groups_at_level_[level])
          if (!group_ok(groups_[gi], w2)) {
            ok = false;
            break;
          }
        if (!ok) {
          reject("pattern");
          continue;
        }
      }
      extend(level + 1, s2, w2);
    }
    seq_[level] = -1;
  }

  /// The sequence fixes b everywhere (b(h) balances the sum).
  const char* optimality_reason() {
    assign_sequence(inst_, seq_);
    const Graph& g = inst_.graph.graph;
    if (std::abs(inst_.b[hub_]) >= g.degree(hub_)) return "not-orientable";
    const auto bd = boundary(g, inst_.s);
    const long long bs = valuation_sum(inst_.b, inst_.s);
    if (bs >= static_cast<long long>(bd.size)) return "not-orientable";
    const Rational phi_s = phi_from_counts(bd.size, bs);
    if (phi_s >= rules_.phi_bound) return "phi-at-least-bound";
    // Any set beating S, or one with b(X) >= ∂(X), shows S is not optimal.
    if (violating_set(g, inst_.b, phi_s)) return "not-optimal";
    return nullptr;
  }

  void note(const std::string& tag) {
    if (audit_.examples.size() >= 12) return;
    std::string line = tag + ":";
    for (int t : seq_) line += " " + directed_types()[t].id;
    audit_.examples.push_back(line);
  }

  void finish(Mask s, Mask white) {
    if (rules_.lemma5 && !lemma5(s, white)) return reject("lemma5");
    if (rules_.connected && (!connected(s) || !connected(all() & ~s))) return reject("connectivity");
    if (rules_.swaps)
      if (const char* why = swap_reason(s, white)) return reject(why);
    if (rules_.neighbours && neighbour_contradiction(s, white)) return reject("neighbour-swap");
    if (rules_.optimal)
      if (const char* why = optimality_reason()) return reject(why);
    ++audit_.survivors;
    analyse();
  }

  void fail(const std::string& claim) {
    ++audit_.claim_failures[claim];
    note(claim);
  }

  void analyse() {
    const auto& dt = directed_types();
    for (int t : seq_)
      if (types_[t].d3) {
        ++audit_.d3_survivors;
        note("D_3 survives");
        break;
      }
    if (has_neighbour_pair()) {
      ++audit_.neighbour_survivors;
      note("neighbouring E_1/C_2/C_4");
    }

    assign_sequence(inst_, seq_);
    const auto led = discharge_with_types(inst_.graph, inst_.indexing, inst_.s, seq_);
    const auto bd = detect_boundaries(inst_.graph, inst_.indexing, inst_.s);
    if (!led.conserved()) ++audit_.conservation_failures;
    if (led.cycle) ++audit_.cycles;
    if (bd.left_count() > 1 || bd.right_count() > 1) ++audit_.boundary_excess;
    for (int i = 0; i < L_; ++i)
      if (led.charge[i] > charge_cap(bd, i)) {
        ++audit_.charge_violations;
        note("charge above cap");
        break;
      }
    {
      Rational blocks(0);
      for (const auto& c : led.charge) blocks += c;
      if (blocks > Rational(2 * L_ + 6)) {
        ++audit_.total_violations;
        note("total above 2 len + 6");
      }
    }

    const Rational zero(0);
    for (int i = 0; i < L_; ++i) {
      const auto& blk = inst_.indexing.blocks[i];
      for (int side = 0; side < 2; ++side) {
        const int nbr = side == 0 ? (i + L_ - 1) % L_ : (i + 1) % L_;
        const int count = side == 0 ? inst_.s.contains(blk[kA]) + inst_.s.contains(blk[kF])
                                    : inst_.s.contains(blk[kB]) + inst_.s.contains(blk[kG]);
        const bool far_boundary = side == 0 ? bd.right[i] : bd.left[i];
        const std::string& nid = dt[seq_[nbr]].id;
        const bool big = side == 0 ? (nid == "G_2^T" || nid == "G_4") : (nid == "G_2" || nid == "G_4^T");
        const Rational got = Rational(led.edge_receipts[i][side]) + led.step2_in[i][side] + led.step3_in[i][side];

        static const Rational cap02[3] = {Rational(1, 2), Rational(5, 2), Rational(7, 2)};
        static const Rational cap02b[3] = {Rational(1, 2), Rational(2), Rational(3)};
        static const Rational cap03[3] = {Rational(1, 2), Rational(3, 2), Rational(0)};
        ++audit_.claim_checks["receive-total"];
        if (got > cap02[count]) fail("receive-total");
        if (!big) {
          ++audit_.claim_checks["receive-total-small-neighbour"];
          if (got > cap02b[count]) fail("receive-total-small-neighbour");
        }
        if (!far_boundary) {
          ++audit_.claim_checks["receive-not-boundary"];
          if (got > cap03[count]) fail("receive-not-boundary");
        }
        if (led.step2_in[i][side] > zero) {
          ++audit_.claim_checks["step2-receiver-is-boundary"];
          if (!far_boundary) fail("step2-receiver-is-boundary");
          ++audit_.claim_checks["step2-receiver-gets-no-step3"];
          if (led.step3_in[i][0] + led.step3_in[i][1] > zero) fail("step2-receiver-gets-no-step3");
        }
      }
    }
  }
};

}  // namespace detail

/// Enumerates every cyclic sequence of compatible directed types of the given
/// odd length, filters by the global rules and checks the charge claims on
/// what survives.
inline SequenceAudit audit_sequences(int length, const SequenceRules& rules = {}, const Deadline& deadline = {}) {
  if (length < 3 || length % 2 == 0) throw std::invalid_argument("sequence length must be odd and at least 3");
  detail::SequenceSearch search(length, rules, deadline);
  return search.run();
}

/// Rejection reason for one cyclic sequence of directed type ids, or "" if it
/// survives every rule.
inline std::string sequence_verdict(const std::vector<int>& ids, const SequenceRules& rules = {}) {
  const Deadline none;
  detail::SequenceSearch search(static_cast<int>(ids.size()), rules, none);
  return search.evaluate(ids);
}

inline nlohmann::json audit_to_json(const SequenceAudit& a) {
  return {{"length", a.length},
          {"completed", a.completed},
          {"seconds", a.seconds},
          {"nodes", a.nodes},
          {"survivors", a.survivors},
          {"rejected", a.rejected},
          {"d3_survivors", a.d3_survivors},
          {"neighbour_pair_survivors", a.neighbour_survivors},
          {"charge_violations", a.charge_violations},
          {"total_violations", a.total_violations},
          {"conservation_failures", a.conservation_failures},
          {"cycles", a.cycles},
          {"boundary_excess", a.boundary_excess},
          {"claim_checks", a.claim_checks},
          {"claim_failures", a.claim_failures},
          {"examples", a.examples},
          {"claims_hold", a.claims_hold()}};
}

}  // namespace snarkflow::proofcheck
