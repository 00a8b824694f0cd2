#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "snarkflow/families.hpp"
#include "snarkflow/proofcheck/block_model.hpp"
#include "snarkflow/rational.hpp"
#include "snarkflow/valuations.hpp"

namespace snarkflow::proofcheck {

/// name, colouring a..g, membership (upper case in S), outside b_{i-1} g_{i-1}
/// a_{i+1} f_{i+1} (I in, O out, - free).
inline constexpr std::string_view kCatalogTable = R"(A_1 BWBWWWB ABCDEFG I--I
B_1 BWBWWWB aBCDEFG O--I
C_1 BWBWWWB ABCDEFg I--O
D_1 BWBWWWB aBCDEFg O--O
E_1 BWBWWWB abcDEfg OOOO
F_1 WBWBBBW ABCDEFG -II-
G_1 WBWBBBW AbCDEFG IIO-
H_1 WBWBBBW ABCDEfG -OII
I_1 WBWBBBW ABCdefg IOIO
J_1 WBWBBBW abCdeFG OIOI
K_1 WBWBBBW AbcdefG IOOI
L_1 WBWBBBW Abcdefg I-OO
M_1 WBWBBBW abcdefG OO-I
N_1 WBWBBBW abcdefg O--O
A_2 WBWBWBB ABCDEFG -III
B_2 BWBWBWW ABCDEFG I---
C_2 BWBWBWW abcDefg -OOO
D_2 WBWBWBB AbCDEFG -IOI
E_2 WBWBWBB ABCDEfg --I-
F_2 BWBWBWW aBCDeFG O---
G_2 WBWBWBB AbCDEfg I-O-
H_2 WBWBWBB abcdefg O---
A_3 BWBWBBW ABCDEFG II--
B_3 WBWBWWB ABCDEFG --II
C_3 WBWBWWB AbCDEFG --OI
D_3 BWBWBBW aBcDefG OOII
E_3 BWBWBBW aBcDefg --IO
F_3 BWBWBBW abcDefG --OI
G_3 BWBWBBW abcDefg --OO
H_3 BWBWBBW aBCDeFG OIII
I_3 BWBWBBW ABcDEfG IOII
J_3 WBWBWWB ABCDEFg --IO
K_3 WBWBWWB AbCDEFg --OO
L_3 WBWBWWB abcdefg OO--
A_4 BBWBWBW ABCDEFG III-
B_4 WWBWBWB ABCDEFG ---I
C_4 WWBWBWB abcDefg OOO-
D_4 BBWBWBW ABCDEfG IOI-
E_4 BBWBWBW abCDEFG -I--
F_4 WWBWBWB ABCDeFg ---O
G_4 BBWBWBW abCDEfG -O-I
H_4 BBWBWBW abcdefg ---O
)";

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline constexpr std::uint64_t kCatalogChecksum = 0x51c9d265bcec3e52ULL;
static_assert(fnv1a64(kCatalogTable) == kCatalogChecksum, "catalog table was edited");

struct CatalogEntry {
  std::string name;  // "E_1"
  int configuration = 0;
  BlockPattern pattern;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const auto entries = [] {
    std::vector<CatalogEntry> out;
    std::istringstream in{std::string(kCatalogTable)};
    std::string name, col, mem, outs;
    while (in >> name >> col >> mem >> outs) {
      CatalogEntry e;
      e.name = name;
      e.configuration = name.back() - '0';
      e.pattern.colour = parse_colouring(col);
      e.pattern.membership = parse_membership(mem);
      if (outs.size() != 4) throw std::logic_error("bad outside field in catalog");
      for (int s = 0; s < 4; ++s) e.pattern.outside[s] = parse_outside(outs[s]);
      out.push_back(e);
    }
    return out;
  }();
  return entries;
}

/// A catalog entry or its reverse ("X^T").
struct DirectedType {
  std::string id;
  int base = 0;  // index into catalog()
  bool transposed = false;
  BlockPattern pattern;
};

inline const std::vector<DirectedType>& directed_types() {
  static const auto types = [] {
    std::vector<DirectedType> out;
    const auto& cat = catalog();
    for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
      out.push_back({cat[i].name, i, false, cat[i].pattern});
      out.push_back({cat[i].name + "^T", i, true, transform(cat[i].pattern, BlockSymmetry::reverse)});
    }
    return out;
  }();
  return types;
}

inline int directed_index(const std::string& id) {
  const auto& d = directed_types();
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[i].id == id) return i;
  throw std::out_of_range("no block type " + id);
}

inline std::string transpose_id(const std::string& id) {
  if (id.size() > 2 && id.ends_with("^T")) return id.substr(0, id.size() - 2);
  return id + "^T";
}

// ------------------------------------------------------------ charge rules

/// Amount sent to the right neighbour in the second step.
inline Rational step2_right_amount(const std::string& id) {
  static const std::map<std::string, Rational> table{
      {"I_1^T", Rational(2)}, {"J_1", Rational(2)},   {"K_1", Rational(2)},   {"K_1^T", Rational(2)},
      {"L_1^T", Rational(2)}, {"M_1", Rational(2)},   {"E_2", Rational(2)},   {"E_3", Rational(2)},
      {"F_3", Rational(2)},   {"E_4^T", Rational(2)}, {"G_2^T", Rational(5, 2)}, {"G_4", Rational(5, 2)}};
  auto it = table.find(id);
  return it == table.end() ? Rational(0) : it->second;
}

inline Rational step2_left_amount(const std::string& id) { return step2_right_amount(transpose_id(id)); }

inline bool step3_sender(const std::string& id) { return id == "E_1" || id == "E_1^T"; }

inline bool step3_forwarder(const std::string& id) {
  return id == "C_2" || id == "C_2^T" || id == "G_3" || id == "G_3^T" || id == "C_4" || id == "C_4^T";
}

/// One record per directed type: id, configuration, colouring (±1),
/// membership, outside (in|out|free), step2 and step3 roles.
inline nlohmann::json catalog_to_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : directed_types()) {
    const auto& p = t.pattern;
    std::vector<bool> mem;
    for (int l = 0; l < 7; ++l) mem.push_back((p.membership >> l) & 1U);
    std::vector<std::string> outside;
    for (auto o : p.outside) outside.push_back(o == Outside::in ? "in" : o == Outside::out ? "out" : "free");
    nlohmann::json step2 = nullptr;
    const Rational r = step2_right_amount(t.id), l = step2_left_amount(t.id);
    if (r > Rational(0) && l > Rational(0))
      step2 = {{"dir", "both"}, {"amount", r.str()}};
    else if (r > Rational(0))
      step2 = {{"dir", "right"}, {"amount", r.str()}};
    else if (l > Rational(0))
      step2 = {{"dir", "left"}, {"amount", l.str()}};
    nlohmann::json step3 = nullptr;
    if (step3_sender(t.id)) step3 = "sender";
    if (step3_forwarder(t.id)) step3 = "forwarder";
    out.push_back({{"id", t.id},
                   {"configuration", catalog()[t.base].configuration},
                   {"colouring", std::vector<int>(p.colour.begin(), p.colour.end())},
                   {"membership", mem},
                   {"outside", outside},
                   {"step2", step2},
                   {"step3", step3}});
  }
  return out;
}

inline std::string catalog_checksum_hex() {
  std::ostringstream hex;
  hex << std::hex << kCatalogChecksum;
  return hex.str();
}

// ------------------------------------------------------------ matching

/// X at block i followed by Y at block i+1 agree on the shared vertices.
inline bool membership_compatible(const BlockPattern& x, const BlockPattern& y) {
  auto agrees = [](Outside o, unsigned mem, int letter) {
    if (o == Outside::free) return true;
    return (o == Outside::in) == bool((mem >> letter) & 1U);
  };
  return agrees(x.outside[kR1], y.membership, kA) && agrees(x.outside[kR2], y.membership, kF) &&
         agrees(y.outside[kL1], x.membership, kB) && agrees(y.outside[kL2], x.membership, kG);
}

/// Directed type of block i under (b, S), if any pattern matches.
inline std::optional<int> block_type_of(const BlockIndexing& bi, const Valuation& b, const VertexSet& s, int i) {
  const auto& blk = bi.blocks.at(i);
  const auto& outv = bi.outside.at(i);
  const auto& types = directed_types();
  for (int t = 0; t < static_cast<int>(types.size()); ++t) {
    const auto& p = types[t].pattern;
    bool ok = true;
    for (int l = 0; l < 7 && ok; ++l) {
      ok = b[blk[l]] == p.colour[l] && s.contains(blk[l]) == bool((p.membership >> l) & 1U);
    }
    for (int o = 0; o < 4 && ok; ++o)
      if (p.outside[o] != Outside::free) ok = s.contains(outv[o]) == (p.outside[o] == Outside::in);
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<int> block_type_of(const LabeledGraph& lg, const Valuation& b, const VertexSet& s, int i) {
  return block_type_of(block_indexing(lg), b, s, i);
}

}  // namespace snarkflow::proofcheck
