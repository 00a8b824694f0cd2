#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "snarkflow/flows.hpp"
#include "snarkflow/graph.hpp"
#include "snarkflow/maxflow.hpp"
#include "snarkflow/rational.hpp"

namespace snarkflow {

/// b(v) per vertex; +1 on a cubic vertex is white, -1 black.
using Valuation = std::vector<int>;

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotOrientable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_valuation(const Graph& g, const Valuation& b) {
  if (static_cast<int>(b.size()) != g.n()) throw std::invalid_argument("valuation size does not match the graph");
  for (int v = 0; v < g.n(); ++v)
    if (((b[v] - g.degree(v)) % 2) != 0)
      throw ParityError("b(" + std::to_string(v) + ") = " + std::to_string(b[v]) + " has the wrong parity for degree " +
                        std::to_string(g.degree(v)));
}

inline long long valuation_sum(const Valuation& b, const VertexSet& s) {
  long long t = 0;
  for (int v : s.members()) t += b[v];
  return t;
}

inline Valuation negate(Valuation b) {
  for (auto& x : b) x = -x;
  return b;
}

/// (∂ + b)/(∂ - b) + 1.
inline Rational phi_from_counts(long long cut, long long bs) {
  if (cut == 0) throw std::domain_error("set has empty boundary");
  if (cut - bs <= 0) throw std::domain_error("boundary does not exceed b(S)");
  return Rational(cut + bs, cut - bs) + Rational(1);
}

inline Rational phi_set(const Graph& g, const Valuation& b, const VertexSet& s) {
  require_bound(g, s);
  return phi_from_counts(boundary(g, s).size, valuation_sum(b, s));
}

/// t = (r - 2)/r: phi(S,b) > r iff b(S) > t ∂(S) (when ∂(S) > b(S)).
inline Rational excess_slope(const Rational& r) {
  if (r <= Rational(2)) throw std::invalid_argument("r must exceed 2");
  return (r - Rational(2)) / r;
}

/// Inverse of excess_slope applied to a ratio x = b(S)/∂(S).
inline Rational phi_from_ratio(const Rational& x) { return (Rational(1) + x) / (Rational(1) - x) + Rational(1); }

namespace detail {

struct ExcessCut {
  std::int64_t value = 0;     // scaled by the slope denominator
  std::vector<char> minimal;  // minimal maximiser
  std::vector<char> maximal;  // maximal maximiser
};

/// max over S (forced_in ⊆ S, S ∩ forced_out = ∅, S ⊆ region) of
/// den·b(S) − num·∂(S). ∂ counts every edge of g leaving S.
inline ExcessCut excess_cut(const Graph& g, const Valuation& b, std::int64_t num, std::int64_t den,
                            const std::vector<char>* region = nullptr, int forced_in = -1, int forced_out = -1) {
  const int n = g.n();
  MaxFlow mf(n + 2);
  const int s = n, t = n + 1;
  std::int64_t positive = 0;
  auto in_region = [&](int v) { return region == nullptr || (*region)[v]; };
  for (int v = 0; v < n; ++v) {
    if (!in_region(v)) continue;
    const std::int64_t w = den * b[v];
    if (w > 0) {
      mf.add_arc(s, v, w);
      positive += w;
    } else if (w < 0) {
      mf.add_arc(v, t, -w);
    }
  }
  for (auto [u, v] : g.edges()) {
    const bool iu = in_region(u), iv = in_region(v);
    if (iu && iv) {
      mf.add_arc(u, v, num);
      mf.add_arc(v, u, num);
    } else if (iu) {
      mf.add_arc(u, t, num);
    } else if (iv) {
      mf.add_arc(v, t, num);
    }
  }
  if (forced_in >= 0) mf.add_arc(s, forced_in, MaxFlow::kInf);
  if (forced_out >= 0) mf.add_arc(forced_out, t, MaxFlow::kInf);
  const std::int64_t cut = mf.solve(s, t);
  ExcessCut r;
  r.value = positive - cut;
  auto lo = mf.source_side(s);
  auto hi = mf.maximal_source_side(t);
  r.minimal.assign(lo.begin(), lo.begin() + n);
  r.maximal.assign(hi.begin(), hi.begin() + n);
  if (region)
    for (int v = 0; v < n; ++v)
      if (!(*region)[v]) r.maximal[v] = 0;
  return r;
}

inline VertexSet to_set(const std::vector<char>& mask) {
  VertexSet s(static_cast<int>(mask.size()));
  for (int v = 0; v < static_cast<int>(mask.size()); ++v)
    if (mask[v]) s.insert(v);
  return s;
}

struct ProperMax {
  std::int64_t value = 0;
  VertexSet witness;
};

/// Exact maximum over sets with nonempty boundary. When neither extreme
/// maximiser is proper, every proper set separates some component root r from
/// some w of the same component, in one of two ways; each case is one cut.
inline ProperMax proper_excess(const Graph& g, const Valuation& b, std::int64_t num, std::int64_t den) {
  if (g.m() == 0) throw std::invalid_argument("graph has no set with nonempty boundary");
  ExcessCut whole = excess_cut(g, b, num, den);
  for (const auto* mask : {&whole.minimal, &whole.maximal}) {
    VertexSet s = to_set(*mask);
    if (boundary(g, s).size != 0) return {whole.value, s};
  }
  std::optional<ProperMax> best;
  const auto parts = components_within(g, VertexSet::full(g.n()));
  for (const auto& part : parts) {
    const auto members = part.members();
    if (members.size() < 2) continue;
    const int root = members.front();
    for (std::size_t j = 1; j < members.size(); ++j) {
      const int w = members[j];
      for (int flip = 0; flip < 2; ++flip) {
        ExcessCut c = flip == 0 ? excess_cut(g, b, num, den, nullptr, root, w) : excess_cut(g, b, num, den, nullptr, w, root);
        if (!best || c.value > best->value) best = ProperMax{c.value, to_set(c.minimal)};
      }
    }
  }
  return *best;
}

}  // namespace detail

struct CutOracleResult {
  Rational value;  // max of b(S) − t ∂(S) over S with ∂(S) ≠ 0
  VertexSet witness;
};

inline CutOracleResult max_excess(const Graph& g, const Valuation& b, const Rational& t) {
  if (t <= Rational(0) || t >= Rational(1)) throw std::invalid_argument("slope t must lie strictly between 0 and 1");
  require_valuation(g, b);
  auto pm = detail::proper_excess(g, b, t.num(), t.den());
  return {Rational(pm.value, t.den()), pm.witness};
}

/// Some S ⊑ G with phi(S,b) > r (or b(S) >= ∂(S)), else nullopt.
inline std::optional<VertexSet> violating_set(const Graph& g, const Valuation& b, const Rational& r) {
  const Rational t = excess_slope(r);
  require_valuation(g, b);
  auto whole = detail::excess_cut(g, b, t.num(), t.den());
  if (whole.value <= 0) return std::nullopt;
  VertexSet s = detail::to_set(whole.minimal);
  if (boundary(g, s).size != 0) return s;
  auto pm = detail::proper_excess(g, b, t.num(), t.den());
  if (pm.value > 0) return pm.witness;
  return std::nullopt;
}

enum class ValuationMode { balanced, orientable };

struct ValuationCheck {
  bool ok = true;
  std::optional<VertexSet> witness;
};

inline constexpr int kExhaustiveLimit = 22;

namespace detail {

/// Visits every subset of [0,n) in Gray-code order with its b(S) and ∂(S).
/// Stops when visit returns false.
template <typename Visit>
void for_each_subset(const Graph& g, const Valuation& b, Visit&& visit) {
  const int n = g.n();
  if (n > 30) throw std::invalid_argument("subset enumeration limited to 30 vertices");
  std::uint32_t mask = 0;
  long long bs = 0, cut = 0;
  if (!visit(mask, bs, cut)) return;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int v = std::countr_zero(i);
    const bool entering = !((mask >> v) & 1U);
    for (auto [e, w] : g.incident(v)) {
      const bool w_in = (mask >> w) & 1U;
      cut += (w_in == entering) ? -1 : 1;
    }
    mask ^= (1U << v);
    bs += entering ? b[v] : -b[v];
    if (!visit(mask, bs, cut)) return;
  }
}

inline VertexSet mask_to_set(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) s.insert(v);
  return s;
}

}  // namespace detail

inline ValuationCheck validate_valuation(const Graph& g, const Valuation& b, ValuationMode mode) {
  require_valuation(g, b);
  const bool strict = mode == ValuationMode::orientable;
  if (g.n() <= kExhaustiveLimit) {
    std::optional<std::uint32_t> bad;
    detail::for_each_subset(g, b, [&](std::uint32_t mask, long long bs, long long cut) {
      if (bs > cut || (strict && cut != 0 && bs >= cut)) {
        bad = mask;
        return false;
      }
      return true;
    });
    if (bad) return {false, detail::mask_to_set(g.n(), *bad)};
    return {};
  }
  auto whole = detail::excess_cut(g, b, 1, 1);
  if (whole.value > 0) return {false, detail::to_set(whole.minimal)};
  if (strict && g.m() > 0) {
    auto pm = detail::proper_excess(g, b, 1, 1);
    if (pm.value >= 0) return {false, pm.witness};
  }
  return {};
}

/// phi(b) = max over S ⊑ G of phi(S,b). Needs Σb = 0 and b orientable.
inline Rational phi_valuation(const Graph& g, const Valuation& b) {
  require_valuation(g, b);
  long long total = 0;
  for (int x : b) total += x;
  if (total != 0) throw std::invalid_argument("valuation must sum to zero");
  if (g.m() == 0) throw std::invalid_argument("graph has no edges");
  if (detail::proper_excess(g, b, 1, 1).value >= 0) throw NotOrientable("valuation is not orientable");
  if (std::all_of(b.begin(), b.end(), [](int x) { return x == 0; })) return Rational(2);
  // Dinkelbach on the ratio b(S)/∂(S), starting from the best single vertex.
  Rational t(0);
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) t = std::max(t, Rational(b[v], g.degree(v)));
  while (true) {
    auto pm = detail::proper_excess(g, b, t.num(), t.den());
    if (pm.value <= 0) return phi_from_ratio(t);
    t = Rational(valuation_sum(b, pm.witness), boundary(g, pm.witness).size);
  }
}

/// Brute-force phi(b) over all subsets; the reference for small graphs.
inline Rational phi_valuation_exhaustive(const Graph& g, const Valuation& b) {
  require_valuation(g, b);
  std::optional<Rational> best;
  detail::for_each_subset(g, b, [&](std::uint32_t, long long bs, long long cut) {
    if (cut == 0) return true;
    if (bs >= cut) throw NotOrientable("valuation is not orientable");
    Rational x = phi_from_counts(cut, bs);
    if (!best || x > *best) best = x;
    return true;
  });
  if (!best) throw std::invalid_argument("graph has no edges");
  return *best;
}

inline Valuation flow_to_valuation(const Graph& g, const FlowCertificate& cert) {
  auto check = verify_circular_flow(g, cert, cert.r);
  if (!check.ok) throw std::invalid_argument("certificate does not verify: " + check.message);
  Valuation b(g.n(), 0);
  for (auto [tail, head] : cert.orientation) {
    ++b[head];
    --b[tail];
  }
  return b;
}

/// Every value (∂ + β)/(∂ − β) + 1 with 1 <= ∂ <= m, |β| < ∂, β ≡ ∂ (mod 2).
inline std::vector<Rational> attainable_set_values(int m) {
  std::set<Rational> vals;
  for (int cut = 1; cut <= m; ++cut)
    for (int beta = -cut + 2; beta < cut; beta += 2) vals.insert(phi_from_counts(cut, beta));
  return {vals.begin(), vals.end()};
}

namespace detail {

/// Depth-first search over valuations in vertex-index order with ascending
/// values. A prefix is cut when some S inside the assigned vertices has
/// b(S) > t ∂(S), or −b(S) > t ∂(S) (its complement then violates once Σb = 0).
class ValuationSearch {
 public:
  ValuationSearch(const Graph& g, const Deadline& deadline) : g_(g), deadline_(deadline), b_(g.n(), 0) {
    for (int v = 0; v < g.n(); ++v) {
      const int d = g.degree(v);
      std::vector<int> opts;
      for (int x = -(d - 2); x <= d - 2; x += 2) opts.push_back(x);
      if (d <= 1) opts.clear();
      options_.push_back(opts);
    }
    slack_.assign(g.n() + 1, 0);
    for (int v = g.n() - 1; v >= 0; --v) slack_[v] = slack_[v + 1] + std::max(0, g.degree(v) - 2);
  }

  std::uint64_t nodes() const { return nodes_; }

  /// leaf(b) returns the new bound (or nullopt to stop); the search continues
  /// with the tightened bound.
  void run(Rational bound, bool break_sign_symmetry, const std::function<std::optional<Rational>(const Valuation&)>& leaf) {
    bound_ = bound;
    t_ = excess_slope(bound);
    leaf_ = &leaf;
    stop_ = false;
    symmetric_ = break_sign_symmetry;
    region_.assign(g_.n(), 0);
    if (g_.n() == 0) return;
    dfs(0, 0);
  }

 private:
  const Graph& g_;
  const Deadline& deadline_;
  Valuation b_;
  std::vector<std::vector<int>> options_;
  std::vector<long long> slack_;
  std::vector<char> region_;
  Rational bound_, t_;
  const std::function<std::optional<Rational>(const Valuation&)>* leaf_ = nullptr;
  bool stop_ = false;
  bool symmetric_ = false;
  std::uint64_t nodes_ = 0;

  bool prefix_ok() {
    if (excess_cut(g_, b_, t_.num(), t_.den(), &region_).value > 0) return false;
    Valuation neg = negate(b_);
    return excess_cut(g_, neg, t_.num(), t_.den(), &region_).value <= 0;
  }

  void dfs(int v, long long sum) {
    if (stop_) return;
    ++nodes_;
    if ((nodes_ & 255) == 0) deadline_.check();
    if (v == g_.n()) {
      auto next = (*leaf_)(b_);
      if (!next) {
        stop_ = true;
        return;
      }
      bound_ = *next;
      t_ = excess_slope(bound_);
      return;
    }
    if (options_[v].empty()) throw BridgeError();
    region_[v] = 1;
    for (int x : options_[v]) {
      if (stop_) break;
      if (symmetric_ && v == 0 && x > 0) break;
      const long long s = sum + x;
      if (s > slack_[v + 1] || -s > slack_[v + 1]) continue;
      b_[v] = x;
      if (prefix_ok()) dfs(v + 1, s);
    }
    b_[v] = 0;
    region_[v] = 0;
  }
};

}  // namespace detail

struct ValuationPhi {
  Rational phi;
  Valuation b;
  std::uint64_t nodes = 0;
};

/// Exact phi(G) as the minimum of phi(b); returns the lexicographically least
/// minimising valuation.
inline ValuationPhi phi_via_valuations(const Graph& g, const Deadline& deadline = {}) {
  if (!is_bridgeless(g)) throw BridgeError();
  if (g.m() == 0) throw std::invalid_argument("graph has no edges");
  const auto ladder = attainable_set_values(g.m());
  std::optional<ValuationPhi> best;
  detail::ValuationSearch search(g, deadline);
  // At r = 4m + 2 the slope is 2m/(2m+1), which rejects exactly the sets with
  // b(S) >= ∂(S); the first leaf is then any orientable valuation.
  const Rational start(4 * g.m() + 2);
  search.run(start, true, [&](const Valuation& b) -> std::optional<Rational> {
    Rational phi = phi_valuation(g, b);
    best = ValuationPhi{phi, b, 0};
    auto it = std::lower_bound(ladder.begin(), ladder.end(), phi);
    if (it == ladder.begin()) return std::nullopt;
    return *(it - 1);
  });
  if (!best) throw std::logic_error("no orientable valuation found on a bridgeless graph");
  best->nodes = search.nodes();
  return *best;
}

/// Calls visit on every orientable valuation with Σb = 0 and phi(b) <= bound,
/// in lexicographic order. visit returns false to stop.
inline std::uint64_t enumerate_valuations(const Graph& g, const Rational& bound,
                                          const std::function<bool(const Valuation&)>& visit,
                                          const Deadline& deadline = {}) {
  detail::ValuationSearch search(g, deadline);
  search.run(bound, false, [&](const Valuation& b) -> std::optional<Rational> {
    if (!visit(b)) return std::nullopt;
    return bound;
  });
  return search.nodes();
}

/// Calls visit on every S with forced_in ⊆ S, ∂(S) ≠ 0 and phi(S,b) = target,
/// where target = phi(b). Branches on membership in index order and prunes
/// with a forced cut.
inline void enumerate_optimal_sets(const Graph& g, const Valuation& b, const Rational& target, int forced_in,
                                   const std::function<void(const VertexSet&)>& visit) {
  const Rational t = excess_slope(target);
  const int n = g.n();
  // Membership: 1 in, 0 out, -1 open. Forced vertices are wired as infinite arcs.
  std::vector<int> state(n, -1);
  if (forced_in >= 0) state[forced_in] = 1;
  auto best_completion = [&]() {
    MaxFlow mf(n + 2);
    const int s = n, tt = n + 1;
    std::int64_t positive = 0;
    for (int v = 0; v < n; ++v) {
      const std::int64_t w = t.den() * b[v];
      if (w > 0) {
        mf.add_arc(s, v, w);
        positive += w;
      } else if (w < 0) {
        mf.add_arc(v, tt, -w);
      }
      if (state[v] == 1) mf.add_arc(s, v, MaxFlow::kInf);
      if (state[v] == 0) mf.add_arc(v, tt, MaxFlow::kInf);
    }
    for (auto [u, v] : g.edges()) {
      mf.add_arc(u, v, t.num());
      mf.add_arc(v, u, t.num());
    }
    return positive - mf.solve(s, tt);
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (best_completion() < 0) return;
    while (v < n && state[v] != -1) ++v;
    if (v == n) {
      VertexSet S(n);
      for (int x = 0; x < n; ++x)
        if (state[x] == 1) S.insert(x);
      if (boundary(g, S).size != 0) visit(S);
      return;
    }
    for (int choice : {1, 0}) {
      state[v] = choice;
      self(self, v + 1);
    }
    state[v] = -1;
  };
  rec(rec, 0);
}

/// Some connected X with |X| <= max_size and phi(X,b) >= rho or phi(X,-b) >=
/// rho (a set with b(X) >= ∂(X) also counts), else nullopt.
inline std::optional<VertexSet> scan_small_sets(const Graph& g, const Valuation& b, const Rational& rho, int max_size) {
  require_valuation(g, b);
  const int n = g.n();
  if (n > 64) throw std::invalid_argument("small-set scan limited to 64 vertices");
  std::vector<std::uint64_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  auto hits = [&](std::uint64_t x) {
    VertexSet s = detail::mask_to_set(n, x);
    const long long cut = boundary(g, s).size;
    if (cut == 0) return false;
    const long long bs = valuation_sum(b, s);
    for (long long sb : {bs, -bs}) {
      if (sb >= cut) return true;
      if (phi_from_counts(cut, sb) >= rho) return true;
    }
    return false;
  };
  std::optional<std::uint64_t> found;
  // Connected sets with least vertex v: extend only by vertices > v.
  auto extend = [&](auto&& self, std::uint64_t sub, std::uint64_t frontier, std::uint64_t above, int size) -> void {
    if (found) return;
    if (hits(sub)) {
      found = sub;
      return;
    }
    if (size == max_size) return;
    std::uint64_t ext = frontier;
    while (ext && !found) {
      const int w = std::countr_zero(ext);
      ext &= ext - 1;
      std::uint64_t grown = sub | (std::uint64_t{1} << w);
      std::uint64_t excl = nbr[w] & above & ~grown;
      for (std::uint64_t y = sub; y; y &= y - 1) excl &= ~nbr[std::countr_zero(y)];
      self(self, grown, ext | excl, above, size + 1);
    }
  };
  for (int v = 0; v < n && !found; ++v) {
    const std::uint64_t above = v + 1 >= 64 ? 0 : ~((std::uint64_t{2} << v) - 1);
    extend(extend, std::uint64_t{1} << v, nbr[v] & above, above, 1);
  }
  if (found) return detail::mask_to_set(n, *found);
  return std::nullopt;
}

struct LemmaCheck {
  std::string lemma;
  std::string status;  // pass | fail | skipped
  std::optional<VertexSet> witness;
  std::string detail;
};

/// Executable forms of the complement, split, boundary-colour, swap and
/// boundary-size lemmas on one instance. swap_limit bounds |T|.
inline std::vector<LemmaCheck> lemma_suite(const Graph& g, const Valuation& b, const VertexSet& s, int k,
                                           int swap_limit = 4) {
  require_bound(g, s);
  std::vector<LemmaCheck> out;
  const int n = g.n();
  const auto cut = boundary(g, s).size;
  if (cut == 0) return {{"preconditions", "skipped", std::nullopt, "empty boundary"}};
  Rational phib;
  try {
    phib = phi_valuation(g, b);
  } catch (const std::invalid_argument& ex) {
    return {{"preconditions", "skipped", std::nullopt, ex.what()}};
  }
  const Rational phis = phi_set(g, b, s);
  const VertexSet comp = s.complement();

  {
    LemmaCheck c{"complement", "pass", std::nullopt, ""};
    if (phi_set(g, negate(b), comp) != phis) c = {"complement", "fail", s, "phi(S,b) != phi(V-S,-b)"};
    out.push_back(c);
  }
  auto split_check = [&](const std::string& name, const VertexSet& side, bool on_complement) {
    LemmaCheck c{name, "skipped", std::nullopt, "premise not met"};
    if (phis != phib) return c;
    auto parts = components_within(g, side);
    if (parts.size() < 2) return c;
    // Each component against the rest of the side.
    c.status = "pass";
    c.detail.clear();
    for (const auto& a : parts) {
      const VertexSet rest = side - a;
      for (const auto* piece : {&a, &rest}) {
        const VertexSet target = on_complement ? piece->complement() : *piece;
        if (boundary(g, target).size == 0) continue;
        if (phi_set(g, b, target) != phib) {
          c.status = "fail";
          c.witness = target;
          c.detail = "part does not attain phi(b)";
          return c;
        }
      }
    }
    return c;
  };
  out.push_back(split_check("split-inside", s, false));
  out.push_back(split_check("split-outside", comp, true));

  {
    LemmaCheck c{"boundary-colours", "skipped", std::nullopt, "premise not met"};
    if (phis == phib && phib > Rational(3)) {
      c = {"boundary-colours", "pass", std::nullopt, ""};
      for (auto [u, v] : g.edges()) {
        if (s.contains(u) == s.contains(v)) continue;
        const int in = s.contains(u) ? u : v, outv = s.contains(u) ? v : u;
        if ((g.degree(in) == 3 && b[in] != 1) || (g.degree(outv) == 3 && b[outv] != -1)) {
          c = {"boundary-colours", "fail", VertexSet(n, {in, outv}), "boundary edge with wrong colours"};
          break;
        }
      }
    }
    out.push_back(c);
  }

  {
    LemmaCheck c{"swap", "skipped", std::nullopt, "no swap set found"};
    int tried = 0;
    auto consider = [&](const VertexSet& T) {
      if (valuation_sum(b, T) != 0) return true;
      const bool inside = (T - s).empty();
      const bool outside = (T & s).empty();
      if (!inside && !outside) return true;
      int to_s = 0, total = 0;
      for (auto [u, v] : g.edges()) {
        if (T.contains(u) == T.contains(v)) continue;
        const int other = T.contains(u) ? v : u;
        ++total;
        to_s += s.contains(other) ? 1 : 0;
      }
      if (total == 0 || 2 * to_s != total) return true;
      VertexSet moved = inside ? s - T : s | T;
      if (boundary(g, moved).size == 0) return true;
      ++tried;
      if (phi_set(g, b, moved) != phis) {
        c = {"swap", "fail", T, "phi changed after moving T"};
        return false;
      }
      return true;
    };
    // Connected T up to swap_limit vertices.
    std::vector<int> cur;
    std::function<bool(int)> grow = [&](int start) -> bool {
      VertexSet T = VertexSet::of(n, cur);
      if (!consider(T)) return false;
      if (static_cast<int>(cur.size()) == swap_limit) return true;
      for (int v = start; v < n; ++v) {
        if (T.contains(v)) continue;
        cur.push_back(v);
        bool ok = grow(v + 1);
        cur.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    for (int v = 0; v < n && c.status != "fail"; ++v) {
      cur = {v};
      if (!grow(v + 1)) break;
    }
    if (c.status != "fail" && tried > 0) c = {"swap", "pass", std::nullopt, std::to_string(tried) + " swap sets"};
    out.push_back(c);
  }

  {
    LemmaCheck c{"large-boundary", "skipped", std::nullopt, "premise not met"};
    if (k >= 1 && phis > Rational(4) && phis < Rational(4) + Rational(1, k)) {
      c = cut >= 4 * k + 5 ? LemmaCheck{"large-boundary", "pass", std::nullopt, ""}
                           : LemmaCheck{"large-boundary", "fail", s, "boundary " + std::to_string(cut)};
    }
    out.push_back(c);
  }
  return out;
}

inline nlohmann::json valuation_to_json(const Valuation& b) { return {{"b", b}}; }

inline Valuation valuation_from_json(const nlohmann::json& j) {
  try {
    return j.at("b").get<Valuation>();
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("valuation JSON: ") + ex.what());
  }
}

inline nlohmann::json lemma_report_to_json(const std::vector<LemmaCheck>& rep) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : rep) {
    nlohmann::json j{{"lemma", c.lemma}, {"status", c.status}, {"detail", c.detail}};
    j["witness"] = c.witness ? nlohmann::json(c.witness->members()) : nlohmann::json(nullptr);
    out.push_back(j);
  }
  return out;
}

}  // namespace snarkflow
