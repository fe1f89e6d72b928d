#ifndef WORDREP_GRAPH_IO_HPP
#define WORDREP_GRAPH_IO_HPP

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "wordrep/graph.hpp"

namespace wordrep {

// graph6 short form, n <= 62: one header byte n+63, then the upper
// triangle bits x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into
// 6-bit groups, each group offset by 63.

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 0 || n > 62)
    throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
  size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  size_t groups = (bits + 5) / 6;
  if (text.size() != 1 + groups)
    throw std::invalid_argument("graph6: payload length mismatch");
  Graph g(n);
  size_t bit = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u, ++bit) {
      unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
      unsigned val = static_cast<unsigned>(c - 63);
      if ((val >> (5 - bit % 6)) & 1u) g.add_edge(u, v);
    }
  }
  // trailing pad bits must be zero
  for (size_t b = bit; b < groups * 6; ++b) {
    unsigned char c = static_cast<unsigned char>(text[1 + b / 6]);
    if ((static_cast<unsigned>(c - 63) >> (5 - b % 6)) & 1u)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

inline std::string serialize_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  size_t groups = (bits + 5) / 6;
  std::string payload(groups, static_cast<char>(63));
  size_t bit = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u, ++bit) {
      if (g.has_edge(u, v))
        payload[bit / 6] = static_cast<char>(payload[bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  out += payload;
  return out;
}

// Edge-list text: first line "n", then one "u v" line per edge with
// 1 <= u < v <= n. Duplicates and loops are rejected.

inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  Graph g;
  std::set<std::pair<int, int>> seen;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1)
        throw std::invalid_argument("edgelist: bad vertex count line");
      std::string rest;
      if (ls >> rest) throw std::invalid_argument("edgelist: trailing tokens on count line");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw std::invalid_argument("edgelist: line " + std::to_string(lineno) + " needs two vertices");
    std::string rest;
    if (ls >> rest)
      throw std::invalid_argument("edgelist: line " + std::to_string(lineno) + " has trailing tokens");
    if (u == v)
      throw std::invalid_argument("edgelist: loop at line " + std::to_string(lineno));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n)
      throw std::invalid_argument("edgelist: vertex out of range at line " + std::to_string(lineno));
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("edgelist: duplicate edge at line " + std::to_string(lineno));
    g.add_edge(u, v);
  }
  if (n < 0) throw std::invalid_argument("edgelist: empty input");
  return g;
}

inline std::string serialize_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Format autodetection: edge lists start with a decimal digit, graph6
/// header bytes are always >= '?' (63).
inline Graph parse_graph_auto(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t'))
    ++i;
  if (i == text.size()) throw std::invalid_argument("graph: empty input");
  char c = text[i];
  if (c >= '0' && c <= '9') return parse_edgelist(text.substr(i));
  return parse_graph6(text.substr(i));
}

}  // namespace wordrep

#endif
