#ifndef WORDREP_TEST_HELPERS_HPP
#define WORDREP_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep::testing {

using Rng = std::mt19937;

/// Random word over the full alphabet {1..n}: one copy of each letter
/// plus `extra` random letters, shuffled.
inline Word random_word(int n, int extra, Rng& rng) {
  std::vector<Letter> v;
  for (Letter x = 1; x <= n; ++x) v.push_back(x);
  std::uniform_int_distribution<int> pick(1, n);
  for (int i = 0; i < extra; ++i) v.push_back(pick(rng));
  std::shuffle(v.begin(), v.end(), rng);
  return Word(std::move(v));
}

inline Word random_uniform_word(int n, int t, Rng& rng) {
  std::vector<Letter> v;
  for (Letter x = 1; x <= n; ++x)
    for (int c = 0; c < t; ++c) v.push_back(x);
  std::shuffle(v.begin(), v.end(), rng);
  return Word(std::move(v));
}

inline Word random_permutational_word(int n, int blocks, Rng& rng) {
  std::vector<Letter> v;
  std::vector<Letter> block;
  for (Letter x = 1; x <= n; ++x) block.push_back(x);
  for (int b = 0; b < blocks; ++b) {
    std::shuffle(block.begin(), block.end(), rng);
    v.insert(v.end(), block.begin(), block.end());
  }
  return Word(std::move(v));
}

inline Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_connected_graph(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    // knit components together with a random spanning chain
    std::vector<int> order;
    for (int v = 1; v <= n; ++v) order.push_back(v);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i)
      if (!is_connected(g)) g.add_edge(order[static_cast<size_t>(i - 1)], order[static_cast<size_t>(i)]);
    if (is_connected(g)) return g;
  }
}

inline std::set<Letter> random_subset(int n, Rng& rng) {
  std::set<Letter> out;
  std::bernoulli_distribution coin(0.5);
  for (Letter x = 1; x <= n; ++x)
    if (coin(rng)) out.insert(x);
  return out;
}

}  // namespace wordrep::testing

#endif
