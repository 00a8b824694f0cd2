#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace snarkflow {

/// Dinic max-flow on 64-bit integer capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int n) : n_(n), head_(n, -1) {}

  int node_count() const { return n_; }

  /// Returns the arc id; arc id ^ 1 is its reverse.
  int add_arc(int from, int to, std::int64_t cap) {
    if (cap < 0) throw std::invalid_argument("negative capacity");
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    original_.push_back(cap);
    original_.push_back(0);
    return id;
  }

  std::int64_t flow_on(int arc) const { return original_[arc] - cap_[arc]; }

  std::int64_t solve(int s, int t) {
    std::int64_t total = 0;
    level_.assign(n_, -1);
    iter_.assign(n_, -1);
    while (bfs(s, t)) {
      for (int v = 0; v < n_; ++v) iter_[v] = head_[v];
      while (true) {
        std::int64_t f = dfs(s, t, kInf);
        if (f == 0) break;
        total += f;
      }
    }
    return total;
  }

  /// Vertices reachable from s in the residual graph (the minimal source side).
  std::vector<char> source_side(int s) const { return reach(s, false); }

  /// Vertices that cannot reach t in the residual graph (the maximal source side).
  std::vector<char> maximal_source_side(int t) const {
    auto r = reach(t, true);
    for (auto& x : r) x = !x;
    return r;
  }

 private:
  int n_;
  std::vector<int> head_, to_, next_, level_, iter_;
  std::vector<std::int64_t> cap_, original_;

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (int a = head_[v]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push_back(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a != -1; a = next_[a]) {
      int w = to_[a];
      if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
      std::int64_t got = dfs(w, t, std::min(limit, cap_[a]));
      if (got > 0) {
        cap_[a] -= got;
        cap_[a ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<char> reach(int start, bool backwards) const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a = head_[v]; a != -1; a = next_[a]) {
        // forward: residual arc v->w; backwards: residual arc w->v (stored at a^1).
        const std::int64_t c = backwards ? cap_[a ^ 1] : cap_[a];
        if (c > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }
};

/// Circulation with lower and upper bounds on each arc (Hoffman).
struct BoundedArc {
  int from;
  int to;
  std::int64_t lo;
  std::int64_t hi;
};

/// Returns a feasible integral circulation, or an empty vector if none exists.
/// The second overload only answers feasibility.
inline std::vector<std::int64_t> find_circulation(int n, const std::vector<BoundedArc>& arcs, bool* feasible = nullptr) {
  MaxFlow mf(n + 2);
  const int s = n, t = n + 1;
  std::vector<std::int64_t> excess(n, 0);
  std::vector<int> ids;
  ids.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.lo > a.hi) {
      if (feasible) *feasible = false;
      return {};
    }
    ids.push_back(mf.add_arc(a.from, a.to, a.hi - a.lo));
    excess[a.to] += a.lo;
    excess[a.from] -= a.lo;
  }
  std::int64_t need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      mf.add_arc(s, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      mf.add_arc(v, t, -excess[v]);
    }
  }
  const bool ok = mf.solve(s, t) == need;
  if (feasible) *feasible = ok;
  if (!ok) return {};
  std::vector<std::int64_t> out;
  out.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) out.push_back(arcs[i].lo + mf.flow_on(ids[i]));
  return out;
}

inline bool circulation_feasible(int n, const std::vector<BoundedArc>& arcs) {
  bool ok = false;
  find_circulation(n, arcs, &ok);
  return ok;
}

}  // namespace snarkflow
