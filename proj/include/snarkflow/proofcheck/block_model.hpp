#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkflow/families.hpp"

namespace snarkflow::proofcheck {

// Abstract extended block: letters a..g, then b_{i-1}, g_{i-1}, a_{i+1},
// f_{i+1}, then the hub.
enum ExtVertex : int { xA = 0, xB, xC, xD, xE, xF, xG, xL1, xL2, xR1, xR2, xH };
inline constexpr int kExtCount = 12;

inline constexpr std::array<std::array<int, 2>, 13> kExtEdges{{{xA, xB},
                                                               {xA, xE},
                                                               {xB, xC},
                                                               {xC, xD},
                                                               {xD, xE},
                                                               {xC, xF},
                                                               {xE, xG},
                                                               {xF, xG},
                                                               {xA, xL1},
                                                               {xF, xL2},
                                                               {xB, xR1},
                                                               {xG, xR2},
                                                               {xD, xH}}};

/// +1 white, -1 black, indexed by letter.
using Colouring = std::array<int, 7>;

inline std::string colouring_str(const Colouring& c) {
  std::string s;
  for (int x : c) s.push_back(x > 0 ? 'W' : 'B');
  return s;
}

inline Colouring parse_colouring(const std::string& s) {
  if (s.size() != 7) throw std::invalid_argument("colouring needs 7 letters");
  Colouring c{};
  for (int i = 0; i < 7; ++i) {
    if (s[i] != 'W' && s[i] != 'B') throw std::invalid_argument("colouring letters are W or B");
    c[i] = s[i] == 'W' ? 1 : -1;
  }
  return c;
}

inline Colouring switched(Colouring c) {
  for (auto& x : c) x = -x;
  return c;
}

/// Permutation of the 12 abstract vertices induced by a block symmetry. Each
/// outside vertex follows the letter it hangs on.
inline std::array<int, kExtCount> ext_permutation(BlockSymmetry kind) {
  const auto p = block_letter_automorphism(kind);
  std::array<int, kExtCount> out{};
  for (int l = 0; l < 7; ++l) out[l] = p[l];
  const std::array<std::pair<int, int>, 4> hang{{{xL1, xA}, {xL2, xF}, {xR1, xB}, {xR2, xG}}};
  for (auto [slot, letter] : hang)
    for (auto [slot2, letter2] : hang)
      if (letter2 == p[letter]) out[slot] = slot2;
  out[xH] = xH;
  return out;
}

/// result[perm[v]] = c[v].
inline Colouring permute(const Colouring& c, const std::array<int, 7>& perm) {
  Colouring r{};
  for (int v = 0; v < 7; ++v) r[perm[v]] = c[v];
  return r;
}

inline std::array<int, 7> letter_part(const std::array<int, kExtCount>& p) {
  std::array<int, 7> r{};
  for (int v = 0; v < 7; ++v) r[v] = p[v];
  return r;
}

// ---------------------------------------------------------------- colourings

/// Every path on three vertices inside the block, as (end, middle, end).
inline std::vector<std::array<int, 3>> block_three_paths() {
  std::vector<std::array<int, 3>> out;
  std::array<std::vector<int>, 7> nb;
  for (auto [u, v] : kBlockEdges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (int m = 0; m < 7; ++m)
    for (std::size_t i = 0; i < nb[m].size(); ++i)
      for (std::size_t j = i + 1; j < nb[m].size(); ++j) out.push_back({nb[m][i], m, nb[m][j]});
  return out;
}

/// No monochromatic 3-path, and neither colour used exactly twice on the
/// block (the block is the union of its two 5-circuits a b c d e, c d e g f).
inline bool colouring_admissible(const Colouring& c) {
  for (auto [x, m, y] : block_three_paths())
    if (c[x] == c[m] && c[m] == c[y]) return false;
  const int whites = static_cast<int>(std::count(c.begin(), c.end(), 1));
  return whites != 2 && 7 - whites != 2;
}

/// Representatives fixing the configuration numbers.
inline const std::array<std::string, 4>& configuration_representatives() {
  static const std::array<std::string, 4> reps{"BWBWWWB", "WBWBWBB", "BWBWBBW", "BBWBWBW"};
  return reps;
}

struct ConfigurationClass {
  int id = 0;  // 1..4, 0 if no representative matches
  std::vector<Colouring> members;
};

/// Admissible colourings grouped by colour switching and reversing.
inline std::vector<ConfigurationClass> enumerate_configurations() {
  const auto rev = letter_part(ext_permutation(BlockSymmetry::reverse));
  std::vector<Colouring> survivors;
  for (int bits = 0; bits < 128; ++bits) {
    Colouring c{};
    for (int v = 0; v < 7; ++v) c[v] = (bits >> (6 - v)) & 1 ? -1 : 1;
    if (colouring_admissible(c)) survivors.push_back(c);
  }
  std::map<std::string, std::set<std::string>> orbits;
  for (const auto& c : survivors) {
    std::set<std::string> orbit;
    for (const auto& x : {c, permute(c, rev)}) {
      orbit.insert(colouring_str(x));
      orbit.insert(colouring_str(switched(x)));
    }
    orbits[*orbit.begin()] = orbit;
  }
  std::vector<ConfigurationClass> out;
  for (const auto& [key, orbit] : orbits) {
    ConfigurationClass cls;
    for (const auto& s : orbit) cls.members.push_back(parse_colouring(s));
    const auto& reps = configuration_representatives();
    for (int i = 0; i < 4; ++i)
      if (orbit.count(reps[i])) cls.id = i + 1;
    out.push_back(cls);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

// ------------------------------------------------------------- local rules

enum Rule : unsigned {
  kRuleBoundaryColours = 1U,  // R1
  kRuleSwap = 2U,             // R2
  kRuleConfined = 4U,         // R3
  kRulePatterns = 8U,         // R4
};
inline constexpr unsigned kPaperRules = kRuleBoundaryColours | kRuleSwap | kRuleConfined | kRulePatterns;
inline constexpr unsigned kRelaxedRules = kRuleBoundaryColours | kRuleConfined;

inline unsigned parse_rule(const std::string& s) {
  if (s == "R1") return kRuleBoundaryColours;
  if (s == "R2") return kRuleSwap;
  if (s == "R3") return kRuleConfined;
  if (s == "R4") return kRulePatterns;
  throw std::invalid_argument("unknown rule id " + s);
}

/// A full assignment on the extended block: colours on the 11 non-hub
/// vertices (hub entry ignored) and S-membership as a 12-bit mask, hub in S.
struct ExtAssignment {
  std::array<int, kExtCount> colour{};
  unsigned in_s = 0;
  bool in(int v) const { return (in_s >> v) & 1U; }
};

namespace detail {

inline const std::array<unsigned, kExtCount>& ext_neighbours() {
  static const auto nb = [] {
    std::array<unsigned, kExtCount> m{};
    for (auto [u, v] : kExtEdges) {
      m[u] |= 1U << v;
      m[v] |= 1U << u;
    }
    return m;
  }();
  return nb;
}

inline bool boundary_colours_ok(const ExtAssignment& x, unsigned s) {
  for (auto [u, v] : kExtEdges) {
    for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
      if (((s >> p) & 1U) && !((s >> q) & 1U)) {
        if (p != xH && x.colour[p] != 1) return false;
        if (q != xH && x.colour[q] != -1) return false;
      }
    }
  }
  return true;
}

inline std::vector<unsigned> components(unsigned side) {
  const auto& nb = ext_neighbours();
  std::vector<unsigned> out;
  unsigned left = side;
  while (left) {
    unsigned comp = left & (~left + 1);
    unsigned frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      unsigned add = nb[v] & side & ~comp;
      comp |= add;
      frontier |= add;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

constexpr unsigned kBlockMask = 0x7FU;
constexpr unsigned kAllMask = (1U << kExtCount) - 1;

/// Some component of S or of its complement lies inside the block.
inline bool confined(unsigned s) {
  for (unsigned side : {s, kAllMask & ~s})
    for (unsigned c : components(side))
      if ((c & ~kBlockMask) == 0) return true;
  return false;
}

inline bool swaps_ok(const ExtAssignment& x) {
  const auto& nb = ext_neighbours();
  const unsigned s = x.in_s;
  for (auto [u, v] : kBlockEdges) {
    const unsigned t = (1U << u) | (1U << v);
    const bool inside = (s & t) == t;
    const bool outside = (s & t) == 0;
    if (!inside && !outside) continue;
    if (x.colour[u] + x.colour[v] != 0) continue;
    int cross = 0, to_s = 0;
    for (int w : {u, v})
      for (unsigned y = nb[w] & ~t; y; y &= y - 1) {
        ++cross;
        to_s += (s >> std::countr_zero(y)) & 1U;
      }
    if (2 * to_s != cross) continue;
    const unsigned moved = inside ? (s & ~t) : (s | t);
    if (!boundary_colours_ok(x, moved) || confined(moved)) return false;
    if (outside) {
      // S ∪ T stays connected when every part of T touches S.
      bool all_touch = true;
      for (unsigned c : components(t)) {
        unsigned touch = 0;
        for (unsigned y = c; y; y &= y - 1) touch |= nb[std::countr_zero(y)];
        if ((touch & s) == 0) all_touch = false;
      }
      if (all_touch) return false;
    }
  }
  return true;
}

/// Connected subsets of the extended block without the hub, up to 7 vertices.
inline const std::vector<unsigned>& ext_connected_sets() {
  static const auto sets = [] {
    const auto& nb = ext_neighbours();
    std::set<unsigned> found;
    std::vector<unsigned> stack;
    for (int v = 0; v < xH; ++v) stack.push_back(1U << v);
    while (!stack.empty()) {
      unsigned s = stack.back();
      stack.pop_back();
      if (!found.insert(s).second) continue;
      if (std::popcount(s) == 7) continue;
      unsigned border = 0;
      for (unsigned y = s; y; y &= y - 1) border |= nb[std::countr_zero(y)];
      border &= ~s & ~(1U << xH);
      for (unsigned y = border; y; y &= y - 1) stack.push_back(s | (y & (~y + 1)));
    }
    return std::vector<unsigned>(found.begin(), found.end());
  }();
  return sets;
}

/// phi(X, ±b) >= 9/2 on a connected X (cubic vertices only): 9|b(X)| >= 5∂(X).
inline bool patterns_ok(const ExtAssignment& x) {
  const auto& nb = ext_neighbours();
  for (unsigned s : ext_connected_sets()) {
    int internal2 = 0, bs = 0, size = 0;
    for (unsigned y = s; y; y &= y - 1) {
      const int v = std::countr_zero(y);
      internal2 += std::popcount(nb[v] & s);
      bs += x.colour[v];
      ++size;
    }
    const int cut = 3 * size - internal2;
    if (9 * std::abs(bs) >= 5 * cut) return false;
  }
  return true;
}

}  // namespace detail

inline bool rules_hold(const ExtAssignment& x, unsigned rules) {
  if ((rules & kRulePatterns) && !detail::patterns_ok(x)) return false;
  if ((rules & kRuleBoundaryColours) && !detail::boundary_colours_ok(x, x.in_s)) return false;
  if ((rules & kRuleConfined) && detail::confined(x.in_s)) return false;
  if ((rules & kRuleSwap) && !detail::swaps_ok(x)) return false;
  return true;
}

enum class Outside : int { in, out, free };

inline char outside_char(Outside o) { return o == Outside::in ? 'I' : o == Outside::out ? 'O' : '-'; }

inline Outside parse_outside(char c) {
  if (c == 'I') return Outside::in;
  if (c == 'O') return Outside::out;
  if (c == '-') return Outside::free;
  throw std::invalid_argument("outside constraint letters are I, O or -");
}

/// Colouring, block membership (bit l = letter l in S) and constraints on
/// b_{i-1}, g_{i-1}, a_{i+1}, f_{i+1}.
struct BlockPattern {
  Colouring colour{};
  unsigned membership = 0;
  std::array<Outside, 4> outside{Outside::free, Outside::free, Outside::free, Outside::free};

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;
  friend auto operator<=>(const BlockPattern& a, const BlockPattern& b) {
    return std::tie(a.colour, a.membership, a.outside) <=> std::tie(b.colour, b.membership, b.outside);
  }
};

/// "ABCdefg": upper case = in S.
inline std::string membership_str(unsigned m) {
  std::string s;
  for (int l = 0; l < 7; ++l) s.push_back(static_cast<char>((m >> l) & 1U ? 'A' + l : 'a' + l));
  return s;
}

inline unsigned parse_membership(const std::string& s) {
  if (s.size() != 7) throw std::invalid_argument("membership needs 7 letters");
  unsigned m = 0;
  for (int l = 0; l < 7; ++l) {
    if (s[l] == 'A' + l)
      m |= 1U << l;
    else if (s[l] != 'a' + l)
      throw std::invalid_argument("membership letters must spell abcdefg");
  }
  return m;
}

inline std::string outside_str(const std::array<Outside, 4>& o) {
  std::string s;
  for (auto x : o) s.push_back(outside_char(x));
  return s;
}

inline BlockPattern transform(const BlockPattern& p, BlockSymmetry kind) {
  const auto perm = ext_permutation(kind);
  BlockPattern r;
  r.colour = permute(p.colour, letter_part(perm));
  for (int l = 0; l < 7; ++l)
    if ((p.membership >> l) & 1U) r.membership |= 1U << perm[l];
  for (int s = 0; s < 4; ++s) r.outside[perm[xL1 + s] - xL1] = p.outside[s];
  return r;
}

/// Patterns surviving the rules for one colouring: for every membership, the
/// outside memberships for which some outside colouring passes.
inline std::vector<BlockPattern> block_patterns(const Colouring& c, unsigned rules) {
  std::vector<BlockPattern> out;
  for (unsigned mem = 0; mem < 128; ++mem) {
    std::vector<unsigned> allowed;
    for (unsigned om = 0; om < 16; ++om) {
      ExtAssignment x;
      x.in_s = mem | (om << xL1) | (1U << xH);
      for (int l = 0; l < 7; ++l) x.colour[l] = c[l];
      bool good = false;
      for (unsigned oc = 0; oc < 16 && !good; ++oc) {
        for (int s = 0; s < 4; ++s) x.colour[xL1 + s] = (oc >> s) & 1U ? -1 : 1;
        good = rules_hold(x, rules);
      }
      if (good) allowed.push_back(om);
    }
    if (allowed.empty()) continue;
    BlockPattern p;
    p.colour = c;
    p.membership = mem;
    for (int s = 0; s < 4; ++s) {
      bool all_in = true, all_out = true;
      for (unsigned om : allowed) ((om >> s) & 1U ? all_out : all_in) = false;
      p.outside[s] = all_in ? Outside::in : all_out ? Outside::out : Outside::free;
    }
    out.push_back(p);
  }
  return out;
}

/// Basic types of a configuration: patterns on the representative colouring
/// and its switch, identified with their reverse when both occur.
inline std::vector<BlockPattern> enumerate_block_types(int configuration, unsigned rules) {
  if (configuration < 1 || configuration > 3)
    throw std::invalid_argument("block types are enumerated for configurations 1..3");
  const Colouring rep = parse_colouring(configuration_representatives()[configuration - 1]);
  std::set<BlockPattern> all;
  for (const auto& c : {rep, switched(rep)})
    for (const auto& p : block_patterns(c, rules)) all.insert(p);
  std::vector<BlockPattern> basic;
  for (const auto& p : all) {
    const auto r = transform(p, BlockSymmetry::reverse);
    if (all.count(r) && r < p) continue;
    basic.push_back(p);
  }
  return basic;
}

}  // namespace snarkflow::proofcheck
