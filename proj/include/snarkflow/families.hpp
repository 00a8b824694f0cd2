#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkflow/graph.hpp"

namespace snarkflow {

enum class Family { goldberg, reduced_goldberg, flower, petersen, other };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::goldberg: return "goldberg";
    case Family::reduced_goldberg: return "reduced-goldberg";
    case Family::flower: return "flower";
    case Family::petersen: return "petersen";
    default: return "other";
  }
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "goldberg") return Family::goldberg;
  if (s == "reduced-goldberg") return Family::reduced_goldberg;
  if (s == "flower") return Family::flower;
  if (s == "petersen") return Family::petersen;
  return std::nullopt;
}

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  int k = 0;
  Family family = Family::other;

  int index_of(const std::string& name) const {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::out_of_range("no vertex labelled " + name);
    return static_cast<int>(it - labels.begin());
  }
  /// Blocks are indexed modulo 2k+1; only meaningful for the Goldberg families.
  int block_count() const { return 2 * k + 1; }
};

namespace detail {

inline void require_k(int k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
}

inline std::string sub(char letter, int i) { return std::string(1, letter) + "_" + std::to_string(i); }

}  // namespace detail

// Block letters a..g occupy offsets 0..6 inside a block.
enum BlockLetter : int { kA = 0, kB, kC, kD, kE, kF, kG };
inline constexpr char kBlockLetters[7] = {'a', 'b', 'c', 'd', 'e', 'f', 'g'};

/// The 8 edges inside one block, as letter pairs.
inline constexpr std::array<std::array<int, 2>, 8> kBlockEdges{{
    {kA, kB}, {kA, kE}, {kB, kC}, {kC, kD}, {kD, kE}, {kC, kF}, {kE, kG}, {kF, kG}}};

/// G_{2k+1}: vertex 8i + letter, letters a..h.
inline LabeledGraph goldberg(int k) {
  detail::require_k(k);
  const int L = 2 * k + 1;
  auto id = [L](int i, int letter) { return 8 * (((i % L) + L) % L) + letter; };
  const int h = 7;
  std::vector<Edge> edges;
  for (int i = 0; i < L; ++i) {
    edges.push_back({id(i, kA), id(i, kB)});
    edges.push_back({id(i, kB), id(i + 1, kA)});
    edges.push_back({id(i, kA), id(i, kE)});
    edges.push_back({id(i, kB), id(i, kC)});
    edges.push_back({id(i, kC), id(i, kD)});
    edges.push_back({id(i, kD), id(i, kE)});
    edges.push_back({id(i, kC), id(i, kF)});
    edges.push_back({id(i, kE), id(i, kG)});
    edges.push_back({id(i, kF), id(i, kG)});
    edges.push_back({id(i, kG), id(i + 1, kF)});
    edges.push_back({id(i, kD), id(i, h)});
    edges.push_back({id(i, h), id(i + 1, h)});
  }
  LabeledGraph lg{Graph(8 * L, std::move(edges)), {}, k, Family::goldberg};
  for (int i = 0; i < L; ++i)
    for (char c : std::string("abcdefgh")) lg.labels.push_back(detail::sub(c, i));
  return lg;
}

/// H_{2k+1}: the h_i of G_{2k+1} merged into one hub "h" (last index); block
/// vertices become 7i + letter.
inline LabeledGraph reduced_goldberg(int k) {
  LabeledGraph g = goldberg(k);
  const int L = 2 * k + 1;
  VertexSet hubs(g.graph.n());
  for (int i = 0; i < L; ++i) hubs.insert(8 * i + 7);
  Contraction c = contract(g.graph, hubs);
  LabeledGraph out{std::move(c.graph), std::vector<std::string>(7 * L + 1), k, Family::reduced_goldberg};
  for (int v = 0; v < g.graph.n(); ++v)
    if (!hubs.contains(v)) out.labels[c.vertex_map[v]] = g.labels[v];
  out.labels.back() = "h";
  return out;
}

/// Flower snark on {x_i, y_i, z_i, w_i}: w_i joined to x_i, y_i, z_i; x forms a
/// (2k+1)-cycle; y and z are crossed into one (4k+2)-cycle.
inline LabeledGraph flower_snark(int k) {
  detail::require_k(k);
  const int L = 2 * k + 1;
  auto id = [L](int i, int part) { return 4 * (i % L) + part; };
  enum { X, Y, Z, W };
  std::vector<Edge> edges;
  for (int i = 0; i < L; ++i) {
    edges.push_back({id(i, W), id(i, X)});
    edges.push_back({id(i, W), id(i, Y)});
    edges.push_back({id(i, W), id(i, Z)});
    edges.push_back({id(i, X), id(i + 1, X)});
    edges.push_back({id(i, Y), id(i + 1, Z)});
    edges.push_back({id(i, Z), id(i + 1, Y)});
  }
  LabeledGraph lg{Graph(4 * L, std::move(edges)), {}, k, Family::flower};
  for (int i = 0; i < L; ++i)
    for (char c : std::string("xyzw")) lg.labels.push_back(detail::sub(c, i));
  return lg;
}

/// Outer 5-cycle u_0..u_4, spokes u_i v_i, inner pentagram v_i v_{i+2}.
inline LabeledGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  LabeledGraph lg{Graph(10, std::move(edges)), {}, 0, Family::petersen};
  for (int i = 0; i < 5; ++i) lg.labels.push_back(detail::sub('u', i));
  for (int i = 0; i < 5; ++i) lg.labels.push_back(detail::sub('v', i));
  return lg;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

inline LabeledGraph make_family(Family f, int k) {
  switch (f) {
    case Family::goldberg: return goldberg(k);
    case Family::reduced_goldberg: return reduced_goldberg(k);
    case Family::flower: return flower_snark(k);
    case Family::petersen: return petersen();
    default: throw std::invalid_argument("no generator for this family");
  }
}

/// Extended-block additions, in order: b_{i-1}, g_{i-1}, a_{i+1}, f_{i+1}.
enum OutsideSlot : int { kL1 = 0, kL2, kR1, kR2 };

struct BlockIndexing {
  int block_count = 0;
  /// blocks[i][letter] = vertex index of letter_i.
  std::vector<std::array<int, 7>> blocks;
  /// outside[i][slot] = b_{i-1}, g_{i-1}, a_{i+1}, f_{i+1}.
  std::vector<std::array<int, 4>> outside;
  /// h for reduced graphs; h_i per block for the full snark.
  std::vector<int> hub;

  std::vector<int> extended(int i) const {
    std::vector<int> v(blocks.at(i).begin(), blocks.at(i).end());
    v.insert(v.end(), outside.at(i).begin(), outside.at(i).end());
    return v;
  }
};

inline BlockIndexing block_indexing(const LabeledGraph& lg) {
  if (lg.family != Family::goldberg && lg.family != Family::reduced_goldberg)
    throw std::invalid_argument("block indexing needs a Goldberg or reduced Goldberg graph");
  const int L = lg.block_count();
  std::map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(lg.labels.size()); ++v) index[lg.labels[v]] = v;
  auto at = [&](char c, int i) { return index.at(detail::sub(c, ((i % L) + L) % L)); };
  BlockIndexing bi;
  bi.block_count = L;
  for (int i = 0; i < L; ++i) {
    std::array<int, 7> blk{};
    for (int l = 0; l < 7; ++l) blk[l] = at(kBlockLetters[l], i);
    bi.blocks.push_back(blk);
    bi.outside.push_back({at('b', i - 1), at('g', i - 1), at('a', i + 1), at('f', i + 1)});
    bi.hub.push_back(lg.family == Family::goldberg ? at('h', i) : index.at("h"));
  }
  return bi;
}

enum class BlockSymmetry { reverse, twist };

/// Letter permutation (perm[letter] = image letter) of the abstract block.
/// Found by brute force: the lexicographically first automorphism of the
/// 8-edge block graph sending a to b (reverse) or a to g (twist).
inline std::array<int, 7> block_letter_automorphism(BlockSymmetry kind) {
  const int target = kind == BlockSymmetry::reverse ? kB : kG;
  std::array<std::array<bool, 7>, 7> adj{};
  for (auto [u, v] : kBlockEdges) adj[u][v] = adj[v][u] = true;
  std::array<int, 7> p{};
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[kA] != target) continue;
    bool ok = true;
    for (auto [u, v] : kBlockEdges)
      if (!adj[p[u]][p[v]]) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  throw std::logic_error("block graph has no automorphism of the requested kind");
}

/// The same automorphism expressed on vertex indices of block i of lg:
/// result[j] is the image of blocks[i][j]. Checked against the graph's edges.
inline std::array<int, 7> block_automorphism(const LabeledGraph& lg, int i, BlockSymmetry kind) {
  const BlockIndexing bi = block_indexing(lg);
  if (i < 0 || i >= bi.block_count) throw std::out_of_range("block index out of range");
  const auto perm = block_letter_automorphism(kind);
  const auto& blk = bi.blocks[i];
  std::array<int, 7> out{};
  for (int l = 0; l < 7; ++l) out[l] = blk[perm[l]];

  auto inside = [&](int v) { return std::find(blk.begin(), blk.end(), v) != blk.end(); };
  auto pos = [&](int v) { return static_cast<int>(std::find(blk.begin(), blk.end(), v) - blk.begin()); };
  std::vector<std::pair<int, int>> before, after;
  for (auto [u, v] : lg.graph.edges()) {
    if (!inside(u) || !inside(v)) continue;
    before.emplace_back(std::min(u, v), std::max(u, v));
    int a = out[pos(u)], b = out[pos(v)];
    after.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  if (before != after) throw std::logic_error("block permutation does not preserve the block edges");
  return out;
}

}  // namespace snarkflow
