#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace snarkflow {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int edge;
  int other;
};

/// Undirected multigraph with positional edge identity. Loops are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const auto [u, v] = edges_[e];
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
      if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
      incidence_[u].push_back({e, v});
      incidence_[v].push_back({e, u});
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(int e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<Incidence>& incident(int v) const { return incidence_.at(v); }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(incidence_.at(v).size()); }

  [[nodiscard]] bool is_cubic() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != 3) return false;
    return true;
  }

  [[nodiscard]] bool has_parallel_edges() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges_.size());
    for (auto [u, v] : edges_) keys.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
  }

  [[nodiscard]] std::vector<std::vector<bool>> adjacency_matrix() const {
    std::vector<std::vector<bool>> a(n_, std::vector<bool>(n_, false));
    for (auto [u, v] : edges_) a[u][v] = a[v][u] = true;
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Subset of [0, n) stored as a bit vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members) insert(v);
  }
  template <typename Range>
  static VertexSet of(int n, const Range& members) {
    VertexSet s(n);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  [[nodiscard]] int universe() const { return n_; }
  [[nodiscard]] bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void toggle(int v) {
    check(v);
    words_[v >> 6] ^= std::uint64_t{1} << (v & 63);
  }
  [[nodiscard]] int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  [[nodiscard]] bool empty() const { return size() == 0; }

  [[nodiscard]] VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }
  [[nodiscard]] VertexSet operator|(const VertexSet& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  [[nodiscard]] VertexSet operator&(const VertexSet& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  [[nodiscard]] VertexSet operator-(const VertexSet& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  [[nodiscard]] std::vector<int> members() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members() <=> b.members(); }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;

  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  template <typename Op>
  VertexSet combine(const VertexSet& o, Op op) const {
    if (o.n_ != n_) throw std::invalid_argument("vertex sets over different universes");
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
    r.trim();
    return r;
  }
};

inline void require_bound(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::invalid_argument("vertex set is not bound to this graph");
}

struct Boundary {
  int size = 0;
  std::vector<int> edges;
};

/// Edges with exactly one end in s.
inline Boundary boundary(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  Boundary b;
  for (int e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edge(e);
    if (s.contains(u) != s.contains(v)) b.edges.push_back(e);
  }
  b.size = static_cast<int>(b.edges.size());
  return b;
}

/// Connected parts of the subgraph induced by s, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  std::vector<VertexSet> parts;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack;
  for (int start = 0; start < g.n(); ++start) {
    if (!s.contains(start) || seen[start]) continue;
    VertexSet part(g.n());
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      part.insert(x);
      for (auto [e, y] : g.incident(x)) {
        if (s.contains(y) && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return components_within(g, VertexSet::full(g.n())).size() == 1;
}

struct Contraction {
  Graph graph;
  /// vertex_map[old] = new index; the merged vertex is the last one.
  std::vector<int> vertex_map;
};

/// Merges all of x into one vertex appended after the surviving vertices.
/// Edges keep their relative order; edges inside x are dropped.
inline Contraction contract(const Graph& g, const VertexSet& x) {
  require_bound(g, x);
  if (x.empty()) throw std::invalid_argument("contraction set is empty");
  std::vector<int> map(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!x.contains(v)) map[v] = next++;
  const int merged = next++;
  for (int v = 0; v < g.n(); ++v)
    if (x.contains(v)) map[v] = merged;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (map[u] == map[v]) continue;
    edges.push_back({map[u], map[v]});
  }
  return {Graph(next, std::move(edges)), std::move(map)};
}

/// True iff no edge is a bridge. Parallel edges are never bridges.
inline bool is_bridgeless(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        auto [e, w] = inc[f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) return false;
        }
      }
    }
  }
  return true;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (auto [e, y] : g.incident(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Length of a shortest cycle; parallel edges count as 2-cycles. -1 if acyclic.
inline int girth(const Graph& g) {
  int best = -1;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), via(g.n(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (auto [e, y] : g.incident(x)) {
        if (e == via[x]) continue;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          int len = dist[x] + dist[y] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace snarkflow
