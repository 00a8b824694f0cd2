#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "snarkflow/graph.hpp"

namespace snarkflow {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

inline int graph6_byte(char c) {
  int x = static_cast<unsigned char>(c);
  if (x < 63 || x > 126) throw FormatError("graph6: byte outside printable range 63..126");
  return x - 63;
}

}  // namespace detail

/// Decodes one graph6 line (optional ">>graph6<<" header, trailing newline allowed).
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim_line(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw FormatError("graph6: empty input");
  if (text[0] == ':' || text[0] == ';') throw FormatError("graph6: sparse6 input is not supported");
  if (text[0] == '&') throw FormatError("graph6: digraph6 input is not supported");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = detail::graph6_byte(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw FormatError("graph6: truncated size field");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | detail::graph6_byte(text[i]);
    if (n < 63) throw FormatError("graph6: non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw FormatError("graph6: truncated size field");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | detail::graph6_byte(text[i]);
    if (n < 258048) throw FormatError("graph6: non-canonical size field");
    pos = 8;
  }
  if (n > 100000) throw FormatError("graph6: vertex count out of supported range");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) throw FormatError("graph6: truncated adjacency field");
  if (text.size() - pos > bytes) throw FormatError("graph6: trailing data after adjacency field");

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = detail::graph6_byte(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < static_cast<std::int64_t>(bytes) * 6; ++k) {
    int byte = detail::graph6_byte(text[pos + k / 6]);
    if ((byte >> (5 - k % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

/// Encodes the adjacency of a simple graph; vertex order is kept as is.
inline std::string emit_graph6(const Graph& g) {
  if (g.has_parallel_edges()) throw std::invalid_argument("graph6 cannot encode parallel edges");
  const std::int64_t n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  const auto adj = g.adjacency_matrix();
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// {"n": int, "edges": [[u, v], ...]}; extra keys are ignored.
inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("graph JSON: each edge must be a pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("graph JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("graph JSON: ") + ex.what());
  }
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

/// Accepts either a JSON graph object or a graph6 line.
inline Graph parse_graph_text(std::string_view text) {
  auto t = detail::trim_line(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(std::string("graph JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  auto nl = t.find('\n');
  if (nl != std::string_view::npos) t = t.substr(0, nl);
  return parse_graph6(t);
}

}  // namespace snarkflow
