#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "snarkflow/families.hpp"
#include "snarkflow/graph.hpp"
#include "snarkflow/maxflow.hpp"
#include "snarkflow/rational.hpp"

namespace snarkflow {

/// No nowhere-zero flow can exist: the graph has a bridge.
class BridgeError : public std::invalid_argument {
 public:
  BridgeError() : std::invalid_argument("graph has a bridge") {}
};

/// A search ran past its wall-clock budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

/// Optional wall-clock limit threaded through the long searches.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                     std::chrono::duration<double>(seconds))) {}
  bool expired() const { return active_ && std::chrono::steady_clock::now() > end_; }
  void check() const {
    if (expired()) throw BudgetExceeded();
  }

 private:
  bool active_ = false;
  std::chrono::steady_clock::time_point end_{};
};

struct FlowCertificate {
  Rational r;
  std::vector<Edge> orientation;  // (tail, head) per edge
  std::vector<Rational> values;
};

struct IntegerFlow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<Edge> orientation;
  std::vector<std::int64_t> values;
};

struct FlowCheck {
  bool ok = true;
  int edge = -1;
  int vertex = -1;
  std::string message;
};

inline FlowCheck verify_circular_flow(const Graph& g, const FlowCertificate& cert, const Rational& r) {
  if (static_cast<int>(cert.values.size()) != g.m() || static_cast<int>(cert.orientation.size()) != g.m())
    throw std::invalid_argument("certificate covers " + std::to_string(cert.values.size()) + " edges, graph has " +
                                std::to_string(g.m()));
  const Rational one(1), top = r - Rational(1);
  for (int e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edge(e);
    const auto [t, h] = cert.orientation[e];
    if (!((t == u && h == v) || (t == v && h == u)))
      return {false, e, -1, "edge " + std::to_string(e) + " orientation does not match its endpoints"};
    if (cert.values[e] < one || cert.values[e] > top)
      return {false, e, -1,
              "edge " + std::to_string(e) + " value " + cert.values[e].str() + " outside [1, " + top.str() + "]"};
  }
  std::vector<Rational> net(g.n());
  for (int e = 0; e < g.m(); ++e) {
    net[cert.orientation[e].v] += cert.values[e];
    net[cert.orientation[e].u] -= cert.values[e];
  }
  for (int v = 0; v < g.n(); ++v)
    if (net[v] != Rational(0))
      return {false, -1, v, "vertex " + std::to_string(v) + " has net inflow " + net[v].str()};
  return {};
}

inline FlowCertificate integer_to_circular(const IntegerFlow& f) {
  FlowCertificate c;
  c.r = Rational(f.p, f.q);
  c.orientation = f.orientation;
  for (auto x : f.values) c.values.emplace_back(x, f.q);
  return c;
}

namespace detail {

/// Orientation branching. A node fixes the direction of a prefix of the
/// edges; it survives if the circulation with [q, p-q] on fixed edges and
/// [-(p-q), p-q] on open edges is feasible.
class IntegerFlowSearch {
 public:
  IntegerFlowSearch(const Graph& g, std::int64_t p, std::int64_t q, const Deadline& deadline)
      : g_(g), p_(p), q_(q), deadline_(deadline), dir_(g.m(), -1), in_(g.n(), 0), out_(g.n(), 0), open_(g.n(), 0) {
    for (int v = 0; v < g.n(); ++v) open_[v] = g.degree(v);
    order_ = edge_order(g);
  }

  std::optional<IntegerFlow> run() {
    if (g_.m() == 0) return IntegerFlow{p_, q_, {}, {}};
    if (!dfs(0)) return std::nullopt;
    return result_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  std::int64_t p_, q_;
  const Deadline& deadline_;
  std::vector<int> order_;
  std::vector<int> dir_;  // -1 open, 0 = u->v, 1 = v->u
  std::vector<int> in_, out_, open_;
  IntegerFlow result_;
  std::uint64_t nodes_ = 0;

  // Edges sorted by the BFS position of their later endpoint, so vertices
  // close early.
  static std::vector<int> edge_order(const Graph& g) {
    std::vector<int> pos(g.n(), -1), queue;
    int next = 0;
    for (int s = 0; s < g.n(); ++s) {
      if (pos[s] != -1) continue;
      pos[s] = next++;
      queue.assign(1, s);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto [e, w] : g.incident(queue[i]))
          if (pos[w] == -1) {
            pos[w] = next++;
            queue.push_back(w);
          }
    }
    std::vector<int> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      auto key = [&](int e) {
        auto [u, v] = g.edge(e);
        return std::pair(std::max(pos[u], pos[v]), std::min(pos[u], pos[v]));
      };
      return key(a) < key(b);
    });
    return order;
  }

  bool vertex_ok(int v) const {
    const std::int64_t lo = q_, hi = p_ - q_;
    return out_[v] * lo <= hi * (in_[v] + open_[v]) && in_[v] * lo <= hi * (out_[v] + open_[v]);
  }

  std::vector<BoundedArc> arcs() const {
    std::vector<BoundedArc> a;
    a.reserve(g_.m());
    for (int e = 0; e < g_.m(); ++e) {
      auto [u, v] = g_.edge(e);
      if (dir_[e] == -1)
        a.push_back({u, v, -(p_ - q_), p_ - q_});
      else if (dir_[e] == 0)
        a.push_back({u, v, q_, p_ - q_});
      else
        a.push_back({v, u, q_, p_ - q_});
    }
    return a;
  }

  void set(int e, int d) {
    auto [u, v] = g_.edge(e);
    dir_[e] = d;
    --open_[u];
    --open_[v];
    if (d == 0) {
      ++out_[u];
      ++in_[v];
    } else {
      ++out_[v];
      ++in_[u];
    }
  }
  void unset(int e) {
    auto [u, v] = g_.edge(e);
    if (dir_[e] == 0) {
      --out_[u];
      --in_[v];
    } else {
      --out_[v];
      --in_[u];
    }
    dir_[e] = -1;
    ++open_[u];
    ++open_[v];
  }

  bool dfs(std::size_t idx) {
    ++nodes_;
    if ((nodes_ & 1023) == 0) deadline_.check();
    if (idx == order_.size()) {
      auto a = arcs();
      auto vals = find_circulation(g_.n(), a);
      if (vals.empty()) return false;
      result_ = IntegerFlow{p_, q_, {}, {}};
      for (std::size_t e = 0; e < a.size(); ++e) {
        result_.orientation.push_back({a[e].from, a[e].to});
        result_.values.push_back(vals[e]);
      }
      return true;
    }
    const int e = order_[idx];
    auto [u, v] = g_.edge(e);
    // Reversing every edge maps flows to flows, so the first edge is fixed.
    const int choices = idx == 0 ? 1 : 2;
    for (int d = 0; d < choices; ++d) {
      set(e, d);
      if (vertex_ok(u) && vertex_ok(v) && circulation_feasible(g_.n(), arcs()) && dfs(idx + 1)) return true;
      unset(e);
    }
    return false;
  }
};

}  // namespace detail

/// Integer flow with every value in [q, p-q], or nullopt if none exists.
inline std::optional<IntegerFlow> find_integer_flow(const Graph& g, std::int64_t p, std::int64_t q,
                                                    const Deadline& deadline = {}) {
  if (q < 1 || p <= 2 * q) throw std::invalid_argument("need p > 2q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
  if (!is_bridgeless(g)) throw BridgeError();
  detail::IntegerFlowSearch search(g, p, q, deadline);
  return search.run();
}

/// Reduced fractions in (2, 6] with denominator at most cap, ascending.
inline std::vector<Rational> flow_candidates(std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("denominator cap must be positive");
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= cap; ++q)
    for (std::int64_t p = 2 * q + 1; p <= 6 * q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

struct PhiResult {
  Rational phi;
  FlowCertificate certificate;
};

/// Least candidate r = p/q (q <= cap) admitting a flow, by binary search.
inline PhiResult phi_via_flows(const Graph& g, std::int64_t cap = 0, const Deadline& deadline = {}) {
  if (!is_bridgeless(g)) throw BridgeError();
  if (cap <= 0) cap = std::max(1, g.n());
  const auto ladder = flow_candidates(cap);
  auto attempt = [&](const Rational& r) { return find_integer_flow(g, r.num(), r.den(), deadline); };
  auto top = attempt(ladder.back());
  if (!top) throw std::logic_error("no 6-flow found on a bridgeless graph");
  std::size_t lo = 0, hi = ladder.size() - 1;  // answer in [lo, hi]; hi is feasible
  IntegerFlow best = *top;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto f = attempt(ladder[mid])) {
      hi = mid;
      best = *f;
    } else {
      lo = mid + 1;
    }
  }
  return {ladder[hi], integer_to_circular(best)};
}

struct EdgeColoring {
  std::vector<int> colour;  // 1..3 per edge
};

namespace detail {

/// All proper colourings of the edges with colours 1..3 (vertices may have
/// degree below 3; their missing colours are free). Calls visit(colours);
/// stops early when visit returns false.
template <typename Visit>
bool for_each_edge_3_coloring(const Graph& g, Visit&& visit) {
  std::vector<int> pos(g.n(), -1), queue;
  std::vector<int> order;
  std::vector<char> placed(g.m(), 0);
  int next = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (pos[s] != -1) continue;
    pos[s] = next++;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto [e, w] : g.incident(queue[i])) {
        if (!placed[e]) {
          placed[e] = 1;
          order.push_back(e);
        }
        if (pos[w] == -1) {
          pos[w] = next++;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> colour(g.m(), 0);
  std::vector<int> used(g.n(), 0);  // bitmask of colours present at v
  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!keep_going) return;
    if (i == order.size()) {
      keep_going = visit(colour);
      return;
    }
    const int e = order[i];
    auto [u, v] = g.edge(e);
    for (int c = 1; c <= 3 && keep_going; ++c) {
      const int bit = 1 << c;
      if ((used[u] & bit) || (used[v] & bit)) continue;
      colour[e] = c;
      used[u] |= bit;
      used[v] |= bit;
      self(self, i + 1);
      used[u] &= ~bit;
      used[v] &= ~bit;
      colour[e] = 0;
    }
  };
  rec(rec, 0);
  return keep_going;
}

}  // namespace detail

inline std::optional<EdgeColoring> three_edge_color(const Graph& g) {
  if (!g.is_cubic()) throw std::invalid_argument("three_edge_color needs a cubic graph");
  std::optional<EdgeColoring> found;
  detail::for_each_edge_3_coloring(g, [&](const std::vector<int>& c) {
    found = EdgeColoring{c};
    return false;
  });
  return found;
}

struct ParityReport {
  bool holds = true;
  long colourings = 0;
  std::vector<int> counterexample;  // colours of the gadget edges, when it fails
};

/// For every proper 3-edge-colouring of g: colour(l1) == colour(l2) iff
/// colour(r1) != colour(r2).
inline ParityReport dangling_pair_parity(const Graph& g, int l1, int l2, int r1, int r2) {
  ParityReport rep;
  detail::for_each_edge_3_coloring(g, [&](const std::vector<int>& c) {
    ++rep.colourings;
    const bool left_equal = c[l1] == c[l2];
    const bool right_differ = c[r1] != c[r2];
    if (left_equal != right_differ) {
      rep.holds = false;
      rep.counterexample = c;
      return false;
    }
    return true;
  });
  return rep;
}

/// Extended block i with its induced edges; the edge to the hub dangles.
inline ParityReport extended_block_parity(const LabeledGraph& lg, int i) {
  const BlockIndexing bi = block_indexing(lg);
  if (i < 0 || i >= bi.block_count) throw std::out_of_range("block index out of range");
  const auto verts = bi.extended(i);
  std::vector<int> local(lg.graph.n(), -1);
  for (std::size_t j = 0; j < verts.size(); ++j) local[verts[j]] = static_cast<int>(j);
  std::vector<Edge> edges;
  int l1 = -1, l2 = -1, r1 = -1, r2 = -1;
  const auto& blk = bi.blocks[i];
  const auto& out = bi.outside[i];
  for (auto [u, v] : lg.graph.edges()) {
    if (local[u] < 0 || local[v] < 0) continue;
    const int id = static_cast<int>(edges.size());
    auto is = [&](int x, int y) { return (u == x && v == y) || (u == y && v == x); };
    if (is(out[kL1], blk[kA])) l1 = id;
    if (is(out[kL2], blk[kF])) l2 = id;
    if (is(blk[kB], out[kR1])) r1 = id;
    if (is(blk[kG], out[kR2])) r2 = id;
    edges.push_back({local[u], local[v]});
  }
  if (l1 < 0 || l2 < 0 || r1 < 0 || r2 < 0) throw std::logic_error("extended block is missing a connecting edge");
  return dangling_pair_parity(Graph(static_cast<int>(verts.size()), std::move(edges)), l1, l2, r1, r2);
}

inline nlohmann::json certificate_to_json(const FlowCertificate& c) {
  nlohmann::json j;
  j["r"] = c.r.str();
  j["orientation"] = nlohmann::json::array();
  for (auto [t, h] : c.orientation) j["orientation"].push_back({t, h});
  j["values"] = nlohmann::json::array();
  for (const auto& v : c.values) j["values"].push_back(v.str());
  return j;
}

inline FlowCertificate certificate_from_json(const nlohmann::json& j) {
  FlowCertificate c;
  try {
    c.r = Rational::parse(j.at("r").get<std::string>());
    for (const auto& e : j.at("orientation")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("orientation entries must be pairs");
      c.orientation.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    for (const auto& v : j.at("values")) c.values.push_back(Rational::parse(v.get<std::string>()));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("certificate JSON: ") + ex.what());
  }
  if (c.orientation.size() != c.values.size()) throw std::invalid_argument("orientation and values differ in length");
  return c;
}

}  // namespace snarkflow
