#ifndef WORDREP_GRAPH_HPP
#define WORDREP_GRAPH_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

/**
 * A simple labeled graph on the vertex set {1..n}. Adjacency is symmetric
 * and irreflexive. Equality is labeled equality; there is no isomorphism
 * machinery here.
 */
class Graph {
public:
  Graph() : n_(0) {}

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * static_cast<size_t>(n), false) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  }

  int vertex_count() const { return n_; }

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1," +
                                  std::to_string(n_) + "]");
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[idx(u, v)] = false;
    adj_[idx(v, u)] = false;
  }

  bool has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return adj_[idx(u, v)];
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
      if (has_edge(v, u)) out.push_back(u);
    return out;
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  size_t edge_count() const {
    size_t m = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (has_edge(u, v)) ++m;
    return m;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  /// Strict total order so graphs can key maps and sets.
  friend bool operator<(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.adj_ < b.adj_;
  }

private:
  size_t idx(int u, int v) const {
    return static_cast<size_t>(u - 1) * static_cast<size_t>(n_) + static_cast<size_t>(v - 1);
  }

  int n_;
  std::vector<bool> adj_;
};

// ---- generators ----

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty_graph: n >= 1 required");
  return Graph(n);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n, 1);
  return g;
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Wheel with rim cycle 1..rim and hub rim+1 adjacent to every rim vertex.
inline Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_graph: rim >= 3 required");
  Graph g(rim + 1);
  for (int v = 1; v < rim; ++v) g.add_edge(v, v + 1);
  g.add_edge(rim, 1);
  for (int v = 1; v <= rim; ++v) g.add_edge(v, rim + 1);
  return g;
}

// ---- structural queries ----

/// A subgraph together with the original id of each remaining vertex;
/// original_id[v - 1] is the source-graph id of the new vertex v.
struct Subgraph {
  Graph graph;
  std::vector<int> original_id;
};

inline Subgraph induced_subgraph(const Graph& g, const std::set<int>& keep) {
  for (int v : keep) g.check_vertex(v);
  std::vector<int> ids(keep.begin(), keep.end());
  Graph h(static_cast<int>(ids.size()));
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (g.has_edge(ids[i], ids[j]))
        h.add_edge(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return {std::move(h), std::move(ids)};
}

inline Subgraph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  std::set<int> keep;
  for (int u = 1; u <= g.vertex_count(); ++u)
    if (u != v) keep.insert(u);
  return induced_subgraph(g, keep);
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp, stack{s};
    seen[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return components(g).size() == 1;
}

/// Size of a largest clique, by branch and bound on candidate sets.
inline int max_clique_size(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  std::vector<int> clique;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cand) {
    if (static_cast<int>(clique.size() + cand.size()) <= best) return;
    if (cand.empty()) {
      best = std::max(best, static_cast<int>(clique.size()));
      return;
    }
    std::vector<int> rest = cand;
    while (!rest.empty()) {
      if (static_cast<int>(clique.size() + rest.size()) <= best) return;
      int v = rest.back();
      rest.pop_back();
      clique.push_back(v);
      std::vector<int> next;
      for (int u : rest)
        if (g.has_edge(u, v)) next.push_back(u);
      grow(next);
      clique.pop_back();
    }
  };
  std::vector<int> all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  grow(all);
  return best;
}

/// Vertices whose removal keeps the rest of the graph connected.
inline std::vector<int> non_cut_vertices(const Graph& g) {
  std::vector<int> out;
  int n = g.vertex_count();
  if (n == 1) return {1};
  for (int v = 1; v <= n; ++v) {
    Subgraph rest = delete_vertex(g, v);
    if (is_connected(rest.graph)) out.push_back(v);
  }
  return out;
}

}  // namespace wordrep

#endif
