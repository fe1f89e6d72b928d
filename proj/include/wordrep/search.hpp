#ifndef WORDREP_SEARCH_HPP
#define WORDREP_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/universal.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/**
 * Search limits. `max_copies_per_letter` is the per-letter multiplicity
 * cap; with `uniform_only` it is the exact multiplicity, and with
 * `permutational_only` it is the block count cap. Results are identical
 * for every `worker_hint`.
 */
struct SearchBudget {
  int max_copies_per_letter = 3;
  bool uniform_only = false;
  bool permutational_only = false;
  std::uint64_t node_limit = 2'000'000;
  int worker_hint = 1;

  std::string family_name() const {
    if (uniform_only) return "uniform" + std::to_string(max_copies_per_letter);
    if (permutational_only) return "permutational<=" + std::to_string(max_copies_per_letter);
    return "general<=" + std::to_string(max_copies_per_letter);
  }
};

enum class SearchOutcome {
  Found,            // witness returned
  AbsentInFamily,   // the whole family was enumerated, no representant
  BudgetExhausted,  // node limit hit before a verdict
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetExhausted;
  std::optional<Word> witness;
  std::uint64_t nodes = 0;
};

namespace search_detail {

inline Graph relabel_graph(const Graph& g, const std::vector<int>& psi) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges())
    out.add_edge(psi[static_cast<size_t>(u)], psi[static_cast<size_t>(v)]);
  return out;
}

inline Word relabel_word(const Word& w, const std::vector<int>& map) {
  std::vector<Letter> v;
  v.reserve(w.size());
  for (Letter x : w.letters()) v.push_back(map[static_cast<size_t>(x)]);
  return Word(std::move(v));
}

/// All distinct relabelings of g, each with the inverse map that carries
/// a word over the relabeled graph back to a word over g. Ordered by the
/// lexicographic rank of the first permutation producing each graph.
struct Target {
  Graph graph;
  std::vector<int> back;  // back[letter in relabeled word] = letter over g
};

inline std::vector<Target> distinct_relabelings(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> psi(static_cast<size_t>(n) + 1);
  std::iota(psi.begin(), psi.end(), 0);
  std::map<Graph, size_t> seen;
  std::vector<Target> out;
  do {
    Graph h = relabel_graph(g, psi);
    if (seen.count(h)) continue;
    seen[h] = out.size();
    std::vector<int> back(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) back[static_cast<size_t>(psi[static_cast<size_t>(v)])] = v;
    out.push_back({std::move(h), std::move(back)});
  } while (std::next_permutation(psi.begin() + 1, psi.end()));
  return out;
}

enum class Family { Uniform, Permutational, General };

/**
 * Depth-first enumeration of canonical words (letters first occur in
 * increasing order) against one fixed target graph. Prunes a branch when
 * an edge pair already exceeds k or a non-edge pair can no longer reach
 * k+1 occurrences.
 */
class Dfs {
public:
  Dfs(const Graph& target, int k, Family family, int copies, std::uint64_t node_limit)
      : target_(target),
        k_(k),
        n_(target.vertex_count()),
        family_(family),
        copies_(copies),
        node_limit_(node_limit) {
    rem_.assign(static_cast<size_t>(n_) + 1, copies_);
    prev_.assign(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0);
    counts_.assign(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0);
    block_used_.assign(static_cast<size_t>(n_) + 1, false);
  }

  /// Runs the enumeration to the first hit, exhaustion, or node limit.
  void run() {
    if (family_ == Family::General) {
      for (int len = n_; len <= n_ * copies_ && !found_ && !limit_hit_; ++len) {
        target_len_ = static_cast<size_t>(len);
        rec();
      }
    } else if (family_ == Family::Permutational) {
      // the copy budget caps the block count; shorter words first
      for (int blocks = 1; blocks <= copies_ && !found_ && !limit_hit_; ++blocks) {
        target_len_ = static_cast<size_t>(n_) * static_cast<size_t>(blocks);
        rec();
      }
    } else {
      target_len_ = static_cast<size_t>(n_) * static_cast<size_t>(copies_);
      rec();
    }
  }

  bool found() const { return found_.has_value(); }
  const Word& witness() const { return *found_; }
  bool limit_hit() const { return limit_hit_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t found_at() const { return found_at_; }

private:
  size_t pair_idx(Letter a, Letter b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(b);
  }
  int& count_ref(Letter a, Letter b) {
    if (a > b) std::swap(a, b);
    return counts_[pair_idx(a, b)];
  }
  Letter& prev_ref(Letter a, Letter b) {
    if (a > b) std::swap(a, b);
    return prev_[pair_idx(a, b)];
  }

  void rec() {
    if (found_ || limit_hit_) return;
    size_t pos = cur_.size();
    if (pos == target_len_) {
      if (complete_word_valid()) {
        found_ = Word(cur_);
        found_at_ = nodes_;
      }
      return;
    }
    Letter cap = std::min<Letter>(n_, max_used_ + 1);
    for (Letter a = 1; a <= cap; ++a) {
      if (rem_[static_cast<size_t>(a)] == 0) continue;
      if (family_ == Family::Permutational && block_used_[static_cast<size_t>(a)]) continue;
      if (family_ == Family::General) {
        // every unused letter still needs a slot
        int unused = n_ - max_used_ - (a > max_used_ ? 1 : 0);
        if (static_cast<size_t>(unused) > target_len_ - pos - 1) continue;
      }
      if (nodes_ >= node_limit_) {
        limit_hit_ = true;
        return;
      }
      ++nodes_;
      if (try_place(a)) {
        rec();
        unplace(a);
        if (found_ || limit_hit_) return;
      }
    }
  }

  /// Applies letter a; returns false (after rolling back) when pruned.
  bool try_place(Letter a) {
    undo_.push_back({a, max_used_, {}});
    auto& changes = undo_.back().prev_changes;
    bool ok = true;
    for (Letter b = 1; b <= n_; ++b) {
      if (b == a) continue;
      Letter& p = prev_ref(a, b);
      changes.push_back({b, p});
      if (p == a) ++count_ref(a, b);
      p = a;
      int c = count_ref(a, b);
      if (target_.has_edge(a, b)) {
        if (c > k_) ok = false;
      } else {
        int potential = c + (rem_[static_cast<size_t>(a)] - 1) + rem_[static_cast<size_t>(b)];
        if (potential < k_ + 1) ok = false;
      }
      if (!ok) break;
    }
    --rem_[static_cast<size_t>(a)];
    max_used_ = std::max(max_used_, a);
    cur_.push_back(a);
    if (family_ == Family::Permutational) {
      block_used_[static_cast<size_t>(a)] = true;
      if (cur_.size() % static_cast<size_t>(n_) == 0)
        block_used_.assign(static_cast<size_t>(n_) + 1, false);
    }
    if (!ok) unplace(a);
    return ok;
  }

  void unplace(Letter a) {
    if (family_ == Family::Permutational) {
      if (cur_.size() % static_cast<size_t>(n_) == 0) {
        // restore the mask of the block this letter belongs to
        block_used_.assign(static_cast<size_t>(n_) + 1, false);
        size_t start = (cur_.size() - 1) / static_cast<size_t>(n_) * static_cast<size_t>(n_);
        for (size_t i = start; i + 1 < cur_.size(); ++i)
          block_used_[static_cast<size_t>(cur_[i])] = true;
      } else {
        block_used_[static_cast<size_t>(a)] = false;
      }
    }
    cur_.pop_back();
    ++rem_[static_cast<size_t>(a)];
    const auto& u = undo_.back();
    max_used_ = u.old_max_used;
    for (auto it = u.prev_changes.rbegin(); it != u.prev_changes.rend(); ++it) {
      Letter b = it->first;
      if (it->second == a) --count_ref(a, b);  // the placement incremented this pair
      prev_ref(a, b) = it->second;
    }
    undo_.pop_back();
  }

  bool complete_word_valid() {
    for (Letter x = 1; x <= n_; ++x) {
      if (family_ == Family::Uniform && rem_[static_cast<size_t>(x)] != 0) return false;
      if (family_ == Family::General && rem_[static_cast<size_t>(x)] == copies_) return false;
      for (Letter y = x + 1; y <= n_; ++y)
        if (!target_.has_edge(x, y) && count_ref(x, y) <= k_) return false;
    }
    return true;
  }

  struct Undo {
    Letter letter;
    Letter old_max_used;
    std::vector<std::pair<Letter, Letter>> prev_changes;  // (other letter, old prev)
  };

  const Graph& target_;
  int k_;
  int n_;
  Family family_;
  int copies_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_at_ = 0;
  bool limit_hit_ = false;
  std::vector<int> rem_;
  std::vector<Letter> cur_;
  std::vector<int> counts_;
  std::vector<Letter> prev_;
  std::vector<bool> block_used_;
  int max_used_ = 0;
  size_t target_len_ = 0;
  std::optional<Word> found_;
  std::vector<Undo> undo_;
};

struct UnitResult {
  bool found = false;
  Word witness;
  bool completed = false;  // full subtree enumerated
  std::uint64_t nodes = 0;
  std::uint64_t found_at = 0;
};

}  // namespace search_detail

/**
 * Finds a word k-11-representing the labeled graph g within the budget's
 * family, or reports that none exists in the family, or that the node
 * limit ran out first. Words are enumerated in canonical form (letters
 * first occur in increasing order) against every distinct relabeling of
 * g, which covers the full family exactly once. Deterministic for any
 * worker count: workers split the relabeled targets and results merge in
 * target order with sequential node accounting.
 */
inline SearchResult find_representant(const Graph& g, int k, const SearchBudget& budget) {
  if (g.vertex_count() < 1) throw std::invalid_argument("find_representant: empty graph");
  if (budget.max_copies_per_letter < 1)
    throw std::invalid_argument("find_representant: positive copy budget required");
  if (budget.node_limit == 0) return {SearchOutcome::BudgetExhausted, std::nullopt, 0};
  using namespace search_detail;

  Family family = Family::General;
  if (budget.uniform_only) family = Family::Uniform;
  if (budget.permutational_only) family = Family::Permutational;

  std::vector<Target> targets = distinct_relabelings(g);
  std::vector<UnitResult> results(targets.size());

  int workers = std::max(1, budget.worker_hint);
  workers = std::min<int>(workers, static_cast<int>(targets.size()));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      Dfs dfs(targets[i].graph, k, family, budget.max_copies_per_letter, budget.node_limit);
      dfs.run();
      UnitResult& r = results[i];
      r.nodes = dfs.nodes();
      r.completed = !dfs.limit_hit();
      if (dfs.found()) {
        r.found = true;
        r.found_at = dfs.found_at();
        r.witness = relabel_word(dfs.witness(), targets[i].back);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // merge with sequential semantics so any worker count agrees
  SearchResult out;
  std::uint64_t acc = 0;
  for (const UnitResult& r : results) {
    if (r.found && acc + r.found_at <= budget.node_limit) {
      out.outcome = SearchOutcome::Found;
      out.witness = r.witness;
      out.nodes = acc + r.found_at;
      if (!verify_representation(*out.witness, g, k).pass)
        throw std::logic_error("find_representant: witness failed verification");
      return out;
    }
    if (r.found || !r.completed || acc + r.nodes > budget.node_limit) {
      // a sequential run would hit the node limit inside this unit
      out.outcome = SearchOutcome::BudgetExhausted;
      out.nodes = budget.node_limit;
      return out;
    }
    acc += r.nodes;
  }
  out.outcome = SearchOutcome::AbsentInFamily;
  out.nodes = acc;
  return out;
}

/// Exhaustive decision over all 2-uniform words: true exactly when the
/// labeled graph has a chord-diagram realization.
inline bool is_circle_graph(const Graph& g, int cap = 8) {
  if (g.vertex_count() > cap)
    throw std::invalid_argument("is_circle_graph: vertex count exceeds cap");
  SearchBudget b;
  b.uniform_only = true;
  b.max_copies_per_letter = 2;
  b.node_limit = std::numeric_limits<std::uint64_t>::max();
  b.worker_hint = 1;
  SearchResult r = find_representant(g, 0, b);
  return r.outcome == SearchOutcome::Found;
}

// ---- transitive orientation ----

/// An orientation of every edge of a graph.
struct Orientation {
  int n = 0;
  std::vector<std::pair<int, int>> directed;  // (u, v) means u -> v

  bool is_transitive_for(const Graph& g) const {
    std::vector<std::vector<bool>> d(static_cast<size_t>(n) + 1,
                                     std::vector<bool>(static_cast<size_t>(n) + 1, false));
    for (auto [u, v] : directed) d[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
          if (d[static_cast<size_t>(u)][static_cast<size_t>(v)] &&
              d[static_cast<size_t>(v)][static_cast<size_t>(w)] &&
              !d[static_cast<size_t>(u)][static_cast<size_t>(w)])
            return false;
    for (auto [u, v] : directed)
      if (!g.has_edge(u, v)) return false;
    return directed.size() == g.edge_count();
  }
};

namespace search_detail {

class OrientationSearch {
public:
  explicit OrientationSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    dir_.assign(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0);
    edges_ = g.edges();
  }

  std::optional<Orientation> run() {
    if (solve(0)) {
      Orientation o;
      o.n = n_;
      for (auto [u, v] : edges_) o.directed.push_back(dir(u, v) == 1 ? std::make_pair(u, v)
                                                                     : std::make_pair(v, u));
      return o;
    }
    return std::nullopt;
  }

private:
  int dir(int u, int v) const { return dir_[static_cast<size_t>(u) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(v)]; }
  void set_dir(int u, int v, int d) {
    dir_[static_cast<size_t>(u) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(v)] = d;
    dir_[static_cast<size_t>(v) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(u)] = -d;
  }

  /// Orients u -> v and propagates transitivity; records assignments in
  /// `trail` so the caller can roll back. Returns false on contradiction.
  bool assign(int u, int v, std::vector<std::pair<int, int>>& trail) {
    std::vector<std::pair<int, int>> queue{{u, v}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      int cur = dir(a, b);
      if (cur == 1) continue;
      if (cur == -1) return false;
      set_dir(a, b, 1);
      trail.push_back({a, b});
      for (int c = 1; c <= n_; ++c) {
        if (c == a || c == b) continue;
        // a -> b -> c forces a -> c, which must be an edge
        if (dir(b, c) == 1) {
          if (!g_.has_edge(a, c)) return false;
          queue.push_back({a, c});
        }
        // c -> a -> b forces c -> b
        if (dir(c, a) == 1) {
          if (!g_.has_edge(c, b)) return false;
          queue.push_back({c, b});
        }
      }
    }
    return true;
  }

  bool solve(size_t from) {
    size_t i = from;
    while (i < edges_.size() && dir(edges_[i].first, edges_[i].second) != 0) ++i;
    if (i == edges_.size()) return true;
    auto [u, v] = edges_[i];
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<std::pair<int, int>> trail;
      int a = attempt == 0 ? u : v;
      int b = attempt == 0 ? v : u;
      if (assign(a, b, trail) && solve(i + 1)) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) set_dir(it->first, it->second, 0);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> dir_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace search_detail

/// A transitive orientation of g, if one exists.
inline std::optional<Orientation> transitive_orientation(const Graph& g, int cap = 16) {
  if (g.vertex_count() > cap)
    throw std::invalid_argument("transitive_orientation: vertex count exceeds cap");
  search_detail::OrientationSearch s(g);
  auto o = s.run();
  if (o && !o->is_transitive_for(g))
    throw std::logic_error("transitive_orientation: internal check failed");
  return o;
}

/**
 * A concatenation of linear extensions of a transitive orientation of g
 * in which every incomparable pair appears in both relative orders; such
 * a word 0-11-represents g. Throws when g has no transitive orientation.
 */
inline Word permutational_representant(const Graph& g, int cap = 16) {
  auto orient = transitive_orientation(g, cap);
  if (!orient) throw std::invalid_argument("permutational_representant: not a comparability graph");
  int n = g.vertex_count();
  std::vector<std::vector<bool>> less(static_cast<size_t>(n) + 1,
                                      std::vector<bool>(static_cast<size_t>(n) + 1, false));
  for (auto [u, v] : orient->directed) less[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;

  auto reaches = [&](const std::vector<std::vector<bool>>& rel, int from, int to) {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    std::vector<int> stack{from};
    seen[static_cast<size_t>(from)] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      if (a == to) return true;
      for (int b = 1; b <= n; ++b)
        if (rel[static_cast<size_t>(a)][static_cast<size_t>(b)] && !seen[static_cast<size_t>(b)]) {
          seen[static_cast<size_t>(b)] = true;
          stack.push_back(b);
        }
    }
    return false;
  };

  auto topo = [&](const std::vector<std::vector<bool>>& rel) {
    std::vector<int> indeg(static_cast<size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (rel[static_cast<size_t>(u)][static_cast<size_t>(v)]) ++indeg[static_cast<size_t>(v)];
    std::vector<int> order;
    std::vector<bool> done(static_cast<size_t>(n) + 1, false);
    for (int step = 0; step < n; ++step) {
      for (int v = 1; v <= n; ++v) {
        if (!done[static_cast<size_t>(v)] && indeg[static_cast<size_t>(v)] == 0) {
          order.push_back(v);
          done[static_cast<size_t>(v)] = true;
          for (int u = 1; u <= n; ++u)
            if (rel[static_cast<size_t>(v)][static_cast<size_t>(u)]) --indeg[static_cast<size_t>(u)];
          break;
        }
      }
    }
    return order;
  };

  // needed[u][v]: some block must place v before u
  std::vector<std::vector<bool>> needed(static_cast<size_t>(n) + 1,
                                        std::vector<bool>(static_cast<size_t>(n) + 1, false));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && !g.has_edge(u, v)) needed[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;

  std::vector<Letter> letters;
  int guard = 0;
  for (;;) {
    bool any = false;
    for (int u = 1; u <= n && !any; ++u)
      for (int v = 1; v <= n && !any; ++v)
        if (needed[static_cast<size_t>(u)][static_cast<size_t>(v)]) any = true;
    // every comparable pair already alternates across blocks; emit at
    // least one block even for complete graphs
    if (!any && !letters.empty()) break;

    auto rel = less;
    // the first block is a plain linear extension; later blocks greedily
    // add still-needed orders that stay acyclic
    if (!letters.empty()) {
      for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
          if (!needed[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
          if (rel[static_cast<size_t>(v)][static_cast<size_t>(u)] || reaches(rel, u, v)) continue;
          rel[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
        }
      }
    }
    std::vector<int> block = topo(rel);
    if (static_cast<int>(block.size()) != n)
      throw std::logic_error("permutational_representant: extension failed");
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j)
        needed[static_cast<size_t>(block[j])][static_cast<size_t>(block[i])] = false;
    letters.insert(letters.end(), block.begin(), block.end());
    if (++guard > 2 * n * n) throw std::logic_error("permutational_representant: no progress");
  }

  Word w(std::move(letters));
  if (!permutational_block_count(w))
    throw std::logic_error("permutational_representant: output not permutational");
  if (!verify_representation(w, g, 0).pass)
    throw std::logic_error("permutational_representant: output failed verification");
  return w;
}

// ---- minimum level ----

struct MinLevelResult {
  int level = 2;
  Word witness;
  bool exact = false;  // true when every smaller level is impossible outright
  SearchOutcome below[2] = {SearchOutcome::BudgetExhausted, SearchOutcome::BudgetExhausted};
  std::uint64_t nodes = 0;
};

/**
 * Smallest level in {0,1,2} with a witness found: levels 0 and 1 go
 * through the budgeted search, level 2 always succeeds via the universal
 * permutational construction. A nonzero answer is an upper bound only
 * ("<="), because absence below it is established only for the searched
 * family.
 */
inline MinLevelResult min_level(const Graph& g, const SearchBudget& budget) {
  if (g.vertex_count() < 2) throw std::invalid_argument("min_level: n >= 2 required");
  MinLevelResult out;
  for (int k = 0; k <= 1; ++k) {
    SearchResult r = find_representant(g, k, budget);
    out.below[k] = r.outcome;
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::Found) {
      out.level = k;
      out.witness = *r.witness;
      out.exact = (k == 0);
      return out;
    }
  }
  out.level = 2;
  out.witness = represent2(g).to_word();
  out.exact = false;
  return out;
}

// ---- census ----

struct CensusRow {
  std::string graph6;
  int n = 0;
  int k_claimed = 0;
  std::string qualifier;  // "=", "<=", ">" (absent in family), "?" (budget ran out)
  std::string witness;
  std::string family;
  std::uint64_t nodes = 0;
};

namespace search_detail {

inline CensusRow census_one(const Graph& g, int max_level, const SearchBudget& budget) {
  CensusRow row;
  row.graph6 = serialize_graph6(g);
  row.n = g.vertex_count();
  row.family = budget.family_name();
  bool any_budget_gap = false;
  for (int k = 0; k <= std::min(max_level, 1); ++k) {
    SearchResult r = find_representant(g, k, budget);
    row.nodes += r.nodes;
    if (r.outcome == SearchOutcome::Found) {
      row.k_claimed = k;
      row.qualifier = (k == 0) ? "=" : "<=";
      row.witness = r.witness->str();
      return row;
    }
    if (r.outcome == SearchOutcome::BudgetExhausted) any_budget_gap = true;
  }
  if (max_level >= 2 && g.vertex_count() >= 2) {
    row.k_claimed = 2;
    row.qualifier = "<=";
    row.witness = represent2(g).to_word().str();
    row.family = "universal";
    return row;
  }
  row.k_claimed = max_level;
  row.qualifier = any_budget_gap ? "?" : ">";
  return row;
}

}  // namespace search_detail

/// Census over an explicit graph list, in input order.
inline std::vector<CensusRow> census(const std::vector<Graph>& graphs, int max_level,
                                     const SearchBudget& budget) {
  std::vector<CensusRow> rows;
  rows.reserve(graphs.size());
  for (const Graph& g : graphs) rows.push_back(search_detail::census_one(g, max_level, budget));
  return rows;
}

/// All labeled graphs on n vertices, enumerated by edge mask over the
/// pair order (1,2) (1,3) ... (1,n) (2,3) ...
inline std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("all_labeled_graphs: n must be in [1,7]");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(size_t{1} << pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<CensusRow> census(int n, int max_level, const SearchBudget& budget) {
  if (n < 1 || n > 7) throw std::invalid_argument("census: n must be in [1,7]");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  std::vector<CensusRow> rows;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    rows.push_back(search_detail::census_one(g, max_level, budget));
  }
  return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "graph6,n,k_claimed,qualifier,witness_word,family,nodes_expanded\n";
  for (const auto& r : rows) {
    out += "\"" + r.graph6 + "\"," + std::to_string(r.n) + "," + std::to_string(r.k_claimed) + "," +
           r.qualifier + ",\"" + r.witness + "\"," + r.family + "," + std::to_string(r.nodes) + "\n";
  }
  return out;
}

}  // namespace wordrep

#endif
