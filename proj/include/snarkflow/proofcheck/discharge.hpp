#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/graph.hpp"
#include "snarkflow/proofcheck/catalog.hpp"
#include "snarkflow/rational.hpp"
#include "snarkflow/valuations.hpp"

namespace snarkflow::proofcheck {

class UnclassifiableBlock : public std::runtime_error {
 public:
  UnclassifiableBlock(int block, const std::string& what) : std::runtime_error(what), block_(block) {}
  int block() const { return block_; }

 private:
  int block_;
};

struct Boundaries {
  std::vector<char> left, right;
  int left_count() const { return static_cast<int>(std::count(left.begin(), left.end(), 1)); }
  int right_count() const { return static_cast<int>(std::count(right.begin(), right.end(), 1)); }
};

namespace detail {

/// Is there no path inside block i through V - S from (from ∖ S) to `to`?
inline bool no_block_path(const Graph& g, const std::array<int, 7>& blk, const VertexSet& s, std::array<int, 2> from,
                          std::array<int, 2> to) {
  std::vector<int> stack;
  VertexSet seen(g.n());
  for (int l : from)
    if (!s.contains(blk[l])) {
      stack.push_back(blk[l]);
      seen.insert(blk[l]);
    }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == blk[to[0]] || x == blk[to[1]]) return false;
    for (const auto& inc : g.incident(x)) {
      const int y = inc.other;
      if (s.contains(y) || seen.contains(y)) continue;
      if (std::find(blk.begin(), blk.end(), y) == blk.end()) continue;
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return true;
}

}  // namespace detail

inline Boundaries detect_boundaries(const LabeledGraph& lg, const BlockIndexing& bi, const VertexSet& s) {
  const int L = bi.block_count;
  for (int hub : bi.hub)
    if (!s.contains(hub)) throw std::invalid_argument("boundaries are defined with the hub in S");
  Boundaries out{std::vector<char>(L, 0), std::vector<char>(L, 0)};
  for (int i = 0; i < L; ++i) {
    const auto& cur = bi.blocks[i];
    const auto& nx = bi.blocks[(i + 1) % L];
    const auto& pv = bi.blocks[(i + L - 1) % L];
    auto in = [&](const std::array<int, 7>& blk, int l) { return s.contains(blk[l]); };
    const bool left = (!in(nx, kA) && in(cur, kB) && in(nx, kF)) || (!in(nx, kF) && in(nx, kA) && in(cur, kG)) ||
                      (!in(nx, kA) && !in(nx, kF) && in(cur, kB) && in(cur, kG)) ||
                      ((!in(cur, kB) || !in(cur, kG)) && detail::no_block_path(lg.graph, cur, s, {kB, kG}, {kA, kF}));
    const bool right = (!in(pv, kB) && in(cur, kA) && in(pv, kG)) || (!in(pv, kG) && in(pv, kB) && in(cur, kF)) ||
                       (!in(pv, kB) && !in(pv, kG) && in(cur, kA) && in(cur, kF)) ||
                       ((!in(cur, kA) || !in(cur, kF)) && detail::no_block_path(lg.graph, cur, s, {kA, kF}, {kB, kG}));
    out.left[i] = left;
    out.right[i] = right;
  }
  return out;
}

inline Boundaries detect_boundaries(const LabeledGraph& lg, const VertexSet& s) {
  return detect_boundaries(lg, block_indexing(lg), s);
}

/// Side 0 is "from the left neighbour", side 1 "from the right neighbour".
struct ChargeLedger {
  std::vector<std::string> types;
  int cut_size = 0;
  std::vector<Rational> initial;
  std::vector<Rational> charge;
  Rational hub_bucket;
  std::vector<std::array<int, 2>> edge_receipts;
  std::vector<std::array<Rational, 2>> step2_in;
  std::vector<std::array<Rational, 2>> step3_in;
  std::vector<std::string> log;
  bool cycle = false;

  Rational total() const {
    Rational t = hub_bucket;
    for (const auto& c : charge) t += c;
    return t;
  }
  bool conserved() const { return total() == Rational(cut_size); }
};

inline Rational charge_cap(const Boundaries& bd, int i) {
  return Rational(2 + 3 * bd.left[i] + 3 * bd.right[i]);
}

/// Runs the three steps with the given directed type per block.
inline ChargeLedger discharge_with_types(const LabeledGraph& lg, const BlockIndexing& bi, const VertexSet& s,
                                         const std::vector<int>& type_ids) {
  const int L = bi.block_count;
  if (static_cast<int>(type_ids.size()) != L) throw std::invalid_argument("one type per block is required");
  const auto& dt = directed_types();
  ChargeLedger led;
  for (int t : type_ids) led.types.push_back(dt.at(t).id);
  led.charge.assign(L, Rational(0));
  led.edge_receipts.assign(L, {0, 0});
  led.step2_in.assign(L, {Rational(0), Rational(0)});
  led.step3_in.assign(L, {Rational(0), Rational(0)});

  std::vector<int> block_of(lg.graph.n(), -1);
  for (int i = 0; i < L; ++i)
    for (int v : bi.blocks[i]) block_of[v] = i;

  for (const auto& e : lg.graph.edges()) {
    if (s.contains(e.u) == s.contains(e.v)) continue;
    const int x = s.contains(e.u) ? e.u : e.v;
    const int y = x == e.u ? e.v : e.u;
    ++led.cut_size;
    const int i = block_of[x];
    if (i < 0) {
      led.hub_bucket += Rational(1);
      continue;
    }
    led.charge[i] += Rational(1);
    if (block_of[y] == (i + L - 1) % L && block_of[y] != i) ++led.edge_receipts[i][0];
    if (block_of[y] == (i + 1) % L && block_of[y] != i) ++led.edge_receipts[i][1];
  }
  led.initial = led.charge;

  auto move = [&](int from, int to, const Rational& amount, const char* step) {
    led.charge[from] -= amount;
    led.charge[to] += amount;
    led.log.push_back(std::string(step) + ": " + led.types[from] + "@" + std::to_string(from) + " -> " +
                      led.types[to] + "@" + std::to_string(to) + " " + amount.str());
  };

  for (int i = 0; i < L; ++i) {
    const Rational r = step2_right_amount(led.types[i]);
    const Rational l = step2_left_amount(led.types[i]);
    if (r > Rational(0)) {
      move(i, (i + 1) % L, r, "step2");
      led.step2_in[(i + 1) % L][0] += r;
    }
    if (l > Rational(0)) {
      move(i, (i + L - 1) % L, l, "step2");
      led.step2_in[(i + L - 1) % L][1] += l;
    }
  }

  // A packet passes over forwarders until it reaches another block.
  const Rational half(1, 2);
  for (int i = 0; i < L; ++i) {
    if (!step3_sender(led.types[i])) continue;
    for (int d : {1, -1}) {
      int j = (i + d + L) % L;
      int steps = 0;
      while (step3_forwarder(led.types[j]) && steps < L) {
        j = (j + d + L) % L;
        ++steps;
      }
      if (steps >= L) led.cycle = true;
      move(i, j, half, "step3");
      led.step3_in[j][d == 1 ? 0 : 1] += half;
    }
  }
  return led;
}

inline std::vector<int> classify_blocks(const BlockIndexing& bi, const Valuation& b, const VertexSet& s) {
  std::vector<int> ids;
  for (int i = 0; i < bi.block_count; ++i) {
    auto t = block_type_of(bi, b, s, i);
    if (!t) throw UnclassifiableBlock(i, "block " + std::to_string(i) + " matches no catalogued type");
    ids.push_back(*t);
  }
  return ids;
}

/// Classifies every block and discharges; throws UnclassifiableBlock.
inline ChargeLedger discharge(const LabeledGraph& lg, const Valuation& b, const VertexSet& s) {
  const BlockIndexing bi = block_indexing(lg);
  return discharge_with_types(lg, bi, s, classify_blocks(bi, b, s));
}

/// (b, S) on the reduced Goldberg graph with one block per type.
struct SequenceInstance {
  LabeledGraph graph;
  BlockIndexing indexing;
  Valuation b;
  VertexSet s;
  std::vector<int> types;
};

/// Overwrites b, S and the types of an instance built for the same length.
inline void assign_sequence(SequenceInstance& inst, const std::vector<int>& type_ids) {
  const int L = inst.indexing.block_count;
  if (static_cast<int>(type_ids.size()) != L) throw std::invalid_argument("sequence length does not match instance");
  const int n = inst.graph.graph.n();
  inst.types = type_ids;
  inst.b.assign(n, 0);
  inst.s = VertexSet(n);
  const auto& dt = directed_types();
  int sum = 0;
  for (int i = 0; i < L; ++i) {
    const auto& p = dt.at(type_ids[i]).pattern;
    for (int l = 0; l < 7; ++l) {
      const int v = inst.indexing.blocks[i][l];
      inst.b[v] = p.colour[l];
      sum += p.colour[l];
      if ((p.membership >> l) & 1U) inst.s.insert(v);
    }
  }
  const int h = inst.indexing.hub[0];
  inst.b[h] = -sum;
  inst.s.insert(h);
}

inline SequenceInstance sequence_instance(const std::vector<int>& type_ids) {
  const int L = static_cast<int>(type_ids.size());
  if (L < 3 || L % 2 == 0) throw std::invalid_argument("sequence length must be odd and at least 3");
  SequenceInstance inst{reduced_goldberg((L - 1) / 2), {}, {}, {}, {}};
  inst.indexing = block_indexing(inst.graph);
  assign_sequence(inst, type_ids);
  return inst;
}

class IncompatibleSequence : public std::invalid_argument {
 public:
  IncompatibleSequence(int position, const std::string& what) : std::invalid_argument(what), position_(position) {}
  /// Block i whose right neighbour disagrees with it.
  int position() const { return position_; }

 private:
  int position_;
};

/// Discharge of an abstract cyclic sequence, boundary edges included.
/// Throws IncompatibleSequence when neighbours disagree on shared vertices.
inline ChargeLedger discharge_abstract(const std::vector<int>& type_ids) {
  const auto& dt = directed_types();
  const int L = static_cast<int>(type_ids.size());
  for (int i = 0; i < L; ++i) {
    const auto& x = dt.at(type_ids[i]);
    const auto& y = dt.at(type_ids[(i + 1) % L]);
    if (!membership_compatible(x.pattern, y.pattern))
      throw IncompatibleSequence(i, x.id + " followed by " + y.id + " disagree on a_{i+1}, f_{i+1}, b_i or g_i");
  }
  const auto inst = sequence_instance(type_ids);
  return discharge_with_types(inst.graph, inst.indexing, inst.s, type_ids);
}

inline nlohmann::json ledger_to_json(const ChargeLedger& led, const Boundaries* bd = nullptr) {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t i = 0; i < led.charge.size(); ++i) {
    nlohmann::json b{{"block", i},
                     {"type", led.types[i]},
                     {"initial", led.initial[i].str()},
                     {"final", led.charge[i].str()}};
    if (bd) {
      b["left_boundary"] = bool(bd->left[i]);
      b["right_boundary"] = bool(bd->right[i]);
      b["cap"] = charge_cap(*bd, static_cast<int>(i)).str();
    }
    blocks.push_back(b);
  }
  return {{"cut_size", led.cut_size}, {"hub_bucket", led.hub_bucket.str()}, {"conserved", led.conserved()},
          {"cycle", led.cycle},       {"blocks", blocks},                    {"log", led.log}};
}

}  // namespace snarkflow::proofcheck
