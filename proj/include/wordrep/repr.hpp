#ifndef WORDREP_REPR_HPP
#define WORDREP_REPR_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/**
 * Pattern-11 counts for every unordered pair of letters, computed in one
 * pass. Letters are assumed to lie in {1..n}.
 */
class PairCounts {
public:
  PairCounts(const Word& w, int n) : n_(n), counts_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {
    // prev[x][y] remembers which of the pair occurred last.
    std::vector<Letter> prev(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0);
    for (Letter a : w.letters()) {
      for (Letter b = 1; b <= n; ++b) {
        if (b == a) continue;
        Letter lo = std::min(a, b), hi = std::max(a, b);
        Letter& p = prev[static_cast<size_t>(lo) * static_cast<size_t>(n + 1) + static_cast<size_t>(hi)];
        if (p == a) ++counts_[key(lo, hi)];
        p = a;
      }
    }
  }

  int at(Letter x, Letter y) const {
    Letter lo = std::min(x, y), hi = std::max(x, y);
    return counts_[key(lo, hi)];
  }

private:
  size_t key(Letter lo, Letter hi) const {
    return static_cast<size_t>(lo - 1) * static_cast<size_t>(n_) + static_cast<size_t>(hi - 1);
  }

  int n_;
  std::vector<int> counts_;
};

/// A word paired with a level and its cached pair counts.
class ReprClaim {
public:
  ReprClaim(Word w, int k)
      : word_(std::move(w)), level_(k), n_(validated_n(word_)), counts_(word_, n_) {
    uniform_ = uniformity(word_);
    permutational_blocks_ = permutational_block_count(word_);
  }

  const Word& word() const { return word_; }
  int level() const { return level_; }
  int n() const { return n_; }
  std::optional<int> uniform() const { return uniform_; }
  std::optional<int> permutational_blocks() const { return permutational_blocks_; }
  int count(Letter x, Letter y) const { return counts_.at(x, y); }

private:
  static int validated_n(const Word& w) {
    if (w.empty()) throw std::invalid_argument("representant words must be nonempty");
    if (!w.alphabet_is_range())
      throw std::invalid_argument("word alphabet must be exactly {1..n}");
    return w.max_letter();
  }

  Word word_;
  int level_;
  int n_;
  PairCounts counts_;
  std::optional<int> uniform_;
  std::optional<int> permutational_blocks_;
};

/// The graph on {1..n} whose edges are the pairs with at most k
/// occurrences of the pattern 11 in their induced subword.
inline Graph graph_of_word(const Word& w, int k) {
  if (k < 0) throw std::invalid_argument("level k must be >= 0");
  if (w.empty()) throw std::invalid_argument("graph_of_word: empty word");
  if (!w.alphabet_is_range())
    throw std::invalid_argument("graph_of_word: word alphabet must be exactly {1..n}");
  int n = w.max_letter();
  PairCounts counts(w, n);
  Graph g(n);
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = x + 1; y <= n; ++y)
      if (counts.at(x, y) <= k) g.add_edge(x, y);
  return g;
}

struct Violation {
  Letter x = 0;
  Letter y = 0;
  int count = 0;
  bool edge_expected = false;  // true: pair is an edge but count > k

  std::string describe(int k) const {
    std::string s = "pair {" + std::to_string(x) + "," + std::to_string(y) + "} count " +
                    std::to_string(count);
    if (edge_expected)
      s += " > " + std::to_string(k) + " but edge expected";
    else
      s += " <= " + std::to_string(k) + " but non-edge expected";
    return s;
  }
};

struct Verdict {
  bool pass = false;
  std::vector<Violation> violations;
};

/// Checks whether w k-11-represents g, reporting every violating pair.
inline Verdict verify_representation(const Word& w, const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("level k must be >= 0");
  if (w.empty()) throw std::invalid_argument("verify: empty word");
  if (!w.alphabet_is_range() || w.max_letter() != g.vertex_count())
    throw std::invalid_argument("verify: word alphabet must equal the graph vertex set");
  int n = g.vertex_count();
  PairCounts counts(w, n);
  Verdict v;
  for (Letter x = 1; x <= n; ++x) {
    for (Letter y = x + 1; y <= n; ++y) {
      int c = counts.at(x, y);
      bool edge = g.has_edge(x, y);
      if (edge && c > k) v.violations.push_back({x, y, c, true});
      if (!edge && c <= k) v.violations.push_back({x, y, c, false});
    }
  }
  v.pass = v.violations.empty();
  return v;
}

enum class Side { Left, Right };

/// Level shift: prepends the reversed initial permutation (or appends the
/// reversed final permutation). Adds exactly one pattern-11 occurrence to
/// every pair, so a k-representant becomes a (k+1)-representant of the
/// same graph.
inline Word extend_level(const Word& w, Side side) {
  if (w.empty()) throw std::invalid_argument("extend_level: empty word");
  if (side == Side::Left) return concat(reversed(initial_permutation(w)), w);
  return concat(w, reversed(final_permutation(w)));
}

/// ww; a 0-representant of a graph doubled is a 1-representant of it.
inline Word doubled(const Word& w) {
  if (w.empty()) throw std::invalid_argument("doubled: empty word");
  return concat(w, w);
}

/// Prepends copies of the initial permutation until every letter occurs
/// at least min_count times. Pair counts are unchanged, so the
/// represented graph is unchanged at every level.
inline Word pad_occurrences(const Word& w, int min_count) {
  if (w.empty()) throw std::invalid_argument("pad_occurrences: empty word");
  size_t min_mult = w.size();
  LetterSet alpha = w.alphabet();
  for (Letter x : alpha) min_mult = std::min(min_mult, w.count(x));
  int copies = 0;
  if (static_cast<size_t>(min_count) > min_mult)
    copies = min_count - static_cast<int>(min_mult);
  if (copies == 0) return w;
  Word pi = initial_permutation(w);
  Word out = w;
  for (int i = 0; i < copies; ++i) out = concat(pi, out);
  return out;
}

namespace detail {

/// Compares counts over pairs of letters that actually occur in `a`;
/// words here may have alphabet gaps.
inline bool pair_counts_equal(const Word& a, const Word& b) {
  int n = std::max(a.max_letter(), b.max_letter());
  PairCounts ca(a, n), cb(b, n);
  LetterSet alpha = a.alphabet();
  for (Letter x : alpha)
    for (Letter y : alpha)
      if (x < y && ca.at(x, y) != cb.at(x, y)) return false;
  return true;
}

}  // namespace detail

/// A word with the same pair counts as w that starts with i and ends
/// with j. One prepended initial permutation and one appended final
/// permutation are enough; the trim is checked post hoc and an internal
/// error is raised if any pair count moved.
inline Word with_endpoints(const Word& w, Letter i, Letter j) {
  if (w.empty()) throw std::invalid_argument("with_endpoints: empty word");
  if (!w.contains(i) || !w.contains(j))
    throw std::invalid_argument("with_endpoints: letters must be in the alphabet");
  std::vector<Letter> v;
  if (w.letters().front() != i) {
    const Word pi = initial_permutation(w);
    size_t start = 0;
    while (pi.at(start) != i) ++start;
    v.insert(v.end(), pi.letters().begin() + static_cast<long>(start), pi.letters().end());
  }
  v.insert(v.end(), w.letters().begin(), w.letters().end());
  if (w.letters().back() != j) {
    const Word sigma = final_permutation(w);
    size_t stop = sigma.size();
    while (sigma.at(stop - 1) != j) --stop;
    v.insert(v.end(), sigma.letters().begin(), sigma.letters().begin() + static_cast<long>(stop));
  }
  Word out{std::move(v)};
  if (!detail::pair_counts_equal(w, out))
    throw std::logic_error("with_endpoints: trim changed a pair count");
  return out;
}

}  // namespace wordrep

#endif
