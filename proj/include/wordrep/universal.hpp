#ifndef WORDREP_UNIVERSAL_HPP
#define WORDREP_UNIVERSAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/**
 * A concatenation of permutations of {1..n}, kept blockwise. `heads`
 * witnesses that every vertex starts at least one block, which is what
 * the inductive construction consumes when it inserts the next vertex.
 */
class PermutationalWord {
public:
  PermutationalWord(int n, std::vector<std::vector<Letter>> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("block size mismatch");
      std::vector<bool> seen(static_cast<size_t>(n_) + 1, false);
      for (Letter x : b) {
        if (x < 1 || x > n_ || seen[static_cast<size_t>(x)])
          throw std::invalid_argument("block is not a permutation");
        seen[static_cast<size_t>(x)] = true;
      }
    }
    rebuild_heads();
  }

  int n() const { return n_; }
  size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<Letter>>& blocks() const { return blocks_; }

  /// Lowest block index headed by v, if any.
  const std::map<Letter, size_t>& heads() const { return heads_; }

  bool every_vertex_heads_a_block() const {
    return static_cast<int>(heads_.size()) == n_;
  }

  Word to_word() const {
    std::vector<Letter> v;
    v.reserve(blocks_.size() * static_cast<size_t>(n_));
    for (const auto& b : blocks_) v.insert(v.end(), b.begin(), b.end());
    return Word(std::move(v));
  }

  std::string str() const { return to_word().str_blocks(static_cast<size_t>(n_)); }

private:
  void rebuild_heads() {
    heads_.clear();
    for (size_t i = 0; i < blocks_.size(); ++i)
      heads_.try_emplace(blocks_[i].front(), i);
  }

  int n_;
  std::vector<std::vector<Letter>> blocks_;
  std::map<Letter, size_t> heads_;
};

/// Doubles block i. Pair counts are unchanged, so the represented graph
/// is the same at every level.
inline PermutationalWord duplicate_block(const PermutationalWord& w, size_t i) {
  if (i >= w.block_count()) throw std::invalid_argument("duplicate_block: bad index");
  auto blocks = w.blocks();
  blocks.insert(blocks.begin() + static_cast<long>(i), blocks[i]);
  return PermutationalWord(w.n(), std::move(blocks));
}

/// Counters reported by the universal constructions.
struct UniversalStats {
  /// Steps where the inserted vertex dominated the rest and every block
  /// was consumed as a chosen head block, fixed by duplicating one block
  /// before the step so a block headed by the new vertex survives.
  int corner_duplications = 0;
};

namespace detail {

/// One inductive step: extends blocks over V\{v} to blocks over V, given
/// the adjacency of v. Keeps every old vertex heading a block and makes
/// v head one as well.
inline std::vector<std::vector<Letter>> insert_vertex_step(std::vector<std::vector<Letter>> blocks,
                                                           const std::vector<Letter>& old_vertices,
                                                           Letter v,
                                                           const std::vector<bool>& adjacent_to_v,
                                                           UniversalStats* stats) {
  std::map<Letter, size_t> chosen;  // k_j: lowest block headed by j
  for (size_t i = 0; i < blocks.size(); ++i)
    chosen.try_emplace(blocks[i].front(), i);

  bool dominates = true;
  for (Letter j : old_vertices)
    if (!adjacent_to_v[static_cast<size_t>(j)]) dominates = false;
  if (dominates && chosen.size() == blocks.size()) {
    // no block would survive headed by v
    blocks.insert(blocks.begin(), blocks.front());
    for (auto& [j, idx] : chosen) ++idx;
    chosen[blocks.front().front()] = 0;
    if (stats) ++stats->corner_duplications;
  }

  std::vector<std::vector<Letter>> out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    Letter j = blocks[i].front();
    auto it = chosen.find(j);
    if (it != chosen.end() && it->second == i) {
      std::vector<Letter> jn{j, v};
      jn.insert(jn.end(), blocks[i].begin() + 1, blocks[i].end());
      if (adjacent_to_v[static_cast<size_t>(j)]) {
        out.push_back(std::move(jn));
      } else {
        std::vector<Letter> nj{v, j};
        nj.insert(nj.end(), blocks[i].begin() + 1, blocks[i].end());
        out.push_back(jn);
        out.push_back(std::move(nj));
        out.push_back(std::move(jn));
      }
    } else {
      std::vector<Letter> np{v};
      np.insert(np.end(), blocks[i].begin(), blocks[i].end());
      out.push_back(std::move(np));
    }
  }
  return out;
}

inline std::vector<std::vector<Letter>> base_pair(Letter a, Letter b, bool edge, bool short_base) {
  std::vector<std::vector<Letter>> blocks{{a, b}, {b, a}};
  if (short_base) return blocks;  // the connected construction starts from an edge
  blocks.push_back({a, b});
  blocks.push_back(edge ? std::vector<Letter>{a, b} : std::vector<Letter>{b, a});
  return blocks;
}

}  // namespace detail

/**
 * Permutational 2-11-representant of an arbitrary graph on n >= 2
 * vertices, built by recursion on the highest vertex. The block count is
 * at most n^2 - n + 2 and every vertex heads a block. The output is
 * engine-verified before it is returned.
 */
inline PermutationalWord represent2(const Graph& g, UniversalStats* stats = nullptr) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("represent2: n >= 2 required");

  std::vector<std::vector<Letter>> blocks;
  if (n == 2) {
    blocks = detail::base_pair(1, 2, g.has_edge(1, 2), false);
  } else {
    Subgraph rest = delete_vertex(g, n);  // vertices keep their ids 1..n-1
    PermutationalWord sub = represent2(rest.graph, stats);
    std::vector<Letter> old_vertices;
    for (Letter j = 1; j < n; ++j) old_vertices.push_back(j);
    std::vector<bool> adj(static_cast<size_t>(n) + 1, false);
    for (int u : g.neighbors(n)) adj[static_cast<size_t>(u)] = true;
    blocks = detail::insert_vertex_step(sub.blocks(), old_vertices, n, adj, stats);
  }

  PermutationalWord result(n, std::move(blocks));
  size_t bound = static_cast<size_t>(n) * static_cast<size_t>(n) - static_cast<size_t>(n) + 2;
  if (result.block_count() > bound) throw std::logic_error("represent2: block bound exceeded");
  if (!result.every_vertex_heads_a_block())
    throw std::logic_error("represent2: head condition violated");
  if (!verify_representation(result.to_word(), g, 2).pass)
    throw std::logic_error("represent2: output failed verification");
  return result;
}

namespace detail {

inline PermutationalWord represent2_connected_impl(const Graph& g, UniversalStats* stats) {
  int n = g.vertex_count();
  if (n == 2) {
    // connected on two vertices is a single edge
    return PermutationalWord(2, base_pair(1, 2, true, true));
  }

  // remove the smallest-id vertex that keeps the rest connected; every
  // connected graph on >= 2 vertices has one
  auto candidates = non_cut_vertices(g);
  int v = candidates.front();

  Subgraph rest = delete_vertex(g, v);
  PermutationalWord sub = represent2_connected_impl(rest.graph, stats);

  // lift the sub-result from ids 1..n-1 back to this level's ids
  std::vector<std::vector<Letter>> blocks;
  for (const auto& b : sub.blocks()) {
    std::vector<Letter> lifted;
    for (Letter x : b) lifted.push_back(rest.original_id[static_cast<size_t>(x - 1)]);
    blocks.push_back(std::move(lifted));
  }

  std::vector<Letter> old_vertices;
  for (Letter u = 1; u <= n; ++u)
    if (u != v) old_vertices.push_back(u);
  std::vector<bool> adj(static_cast<size_t>(n) + 1, false);
  for (int u : g.neighbors(v)) adj[static_cast<size_t>(u)] = true;
  blocks = insert_vertex_step(std::move(blocks), old_vertices, v, adj, stats);
  return PermutationalWord(n, std::move(blocks));
}

}  // namespace detail

/**
 * Permutational 2-11-representant of a connected graph with the tighter
 * block bound n^2 - 3n + 4, obtained by always removing a non-cut vertex
 * of positive degree and starting from the two-block base.
 */
inline PermutationalWord represent2_connected(const Graph& g, UniversalStats* stats = nullptr) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("represent2_connected: n >= 2 required");
  if (!is_connected(g)) throw std::invalid_argument("represent2_connected: graph must be connected");

  PermutationalWord result = detail::represent2_connected_impl(g, stats);

  size_t bound = static_cast<size_t>(n) * static_cast<size_t>(n) - 3 * static_cast<size_t>(n) + 4;
  if (result.block_count() > bound)
    throw std::logic_error("represent2_connected: block bound exceeded");
  if (!result.every_vertex_heads_a_block())
    throw std::logic_error("represent2_connected: head condition violated");
  if (!verify_representation(result.to_word(), g, 2).pass)
    throw std::logic_error("represent2_connected: output failed verification");
  return result;
}

/// Pads a permutational word to exactly `target` blocks by duplicating
/// its first block; the represented graph is unchanged.
inline PermutationalWord pad_to_block_count(const PermutationalWord& w, size_t target) {
  if (target < w.block_count())
    throw std::invalid_argument("pad_to_block_count: target below current count");
  PermutationalWord out = w;
  while (out.block_count() < target) out = duplicate_block(out, 0);
  return out;
}

}  // namespace wordrep

#endif
