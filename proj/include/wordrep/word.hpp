#ifndef WORDREP_WORD_HPP
#define WORDREP_WORD_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep {

/// Vertex letters are 1-based positive integers.
using Letter = int;

using LetterSet = std::set<Letter>;

/**
 * A finite sequence of positive letters. Words are immutable value types;
 * every operation returns a new word. The empty word is a legal value for
 * intermediate results (restrictions); representation-level operations
 * reject it at their own boundary.
 */
class Word {
public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter x : letters_) {
      if (x < 1) throw std::invalid_argument("word letters must be >= 1");
    }
  }

  /// Parses whitespace-separated positive integers. '/' tokens are
  /// accepted as block separators and ignored.
  static Word parse(std::string_view text) {
    std::vector<Letter> letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "/") continue;
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad word token: " + tok);
      }
      if (pos != tok.size() || v < 1)
        throw std::invalid_argument("bad word token: " + tok);
      letters.push_back(static_cast<Letter>(v));
    }
    return Word(std::move(letters));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(size_t i) const { return letters_.at(i); }

  LetterSet alphabet() const {
    return LetterSet(letters_.begin(), letters_.end());
  }

  Letter max_letter() const {
    Letter m = 0;
    for (Letter x : letters_) m = std::max(m, x);
    return m;
  }

  /// True when the alphabet is exactly {1, ..., max_letter()}.
  bool alphabet_is_range() const {
    if (empty()) return false;
    Letter m = max_letter();
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (Letter x : letters_) seen[static_cast<size_t>(x)] = true;
    for (Letter x = 1; x <= m; ++x)
      if (!seen[static_cast<size_t>(x)]) return false;
    return true;
  }

  size_t count(Letter x) const {
    return static_cast<size_t>(std::count(letters_.begin(), letters_.end(), x));
  }

  bool contains(Letter x) const {
    return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  /// Rendering with '/' between consecutive blocks of the given length.
  std::string str_blocks(size_t block_len) const {
    if (block_len == 0) return str();
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) {
        out += ' ';
        if (i % block_len == 0) out += "/ ";
      }
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> v = a.letters();
  v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(v));
}

/// Subsequence keeping exactly the letters in `keep`, order preserved.
/// A selection disjoint from the alphabet yields the empty word.
inline Word restrict_to(const Word& w, const LetterSet& keep) {
  std::vector<Letter> v;
  for (Letter x : w.letters())
    if (keep.count(x)) v.push_back(x);
  return Word(std::move(v));
}

/// Leftmost occurrence of every letter, in order of first appearance.
/// The result is a permutation of the alphabet.
inline Word initial_permutation(const Word& w) {
  if (w.empty()) throw std::invalid_argument("initial_permutation: empty word");
  std::vector<Letter> v;
  LetterSet seen;
  for (Letter x : w.letters())
    if (seen.insert(x).second) v.push_back(x);
  return Word(std::move(v));
}

/// Rightmost occurrence of every letter, kept in position order.
inline Word final_permutation(const Word& w) {
  if (w.empty()) throw std::invalid_argument("final_permutation: empty word");
  std::vector<Letter> v;
  LetterSet seen;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    if (seen.insert(*it).second) v.push_back(*it);
  std::reverse(v.begin(), v.end());
  return Word(std::move(v));
}

inline Word reversed(const Word& w) {
  std::vector<Letter> v(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(v));
}

/// Number of adjacent equal pairs in the subword induced by {x, y}; this
/// counts occurrences of the factors xx and yy, so "xxx" contributes 2.
inline int count_pattern11(const Word& w, Letter x, Letter y) {
  if (x == y) throw std::invalid_argument("count_pattern11: x == y");
  int count = 0;
  Letter prev = 0;
  for (Letter a : w.letters()) {
    if (a != x && a != y) continue;
    if (a == prev) ++count;
    prev = a;
  }
  return count;
}

/// The common multiplicity t when every letter occurs exactly t times.
inline std::optional<int> uniformity(const Word& w) {
  if (w.empty()) throw std::invalid_argument("uniformity: empty word");
  std::vector<int> mult(static_cast<size_t>(w.max_letter()) + 1, 0);
  for (Letter x : w.letters()) ++mult[static_cast<size_t>(x)];
  int t = 0;
  for (int m : mult) {
    if (m == 0) continue;
    if (t == 0) t = m;
    if (m != t) return std::nullopt;
  }
  return t;
}

/// Writing w = uv with |u| = split, returns vu.
inline Word cyclic_shift(const Word& w, size_t split) {
  if (split > w.size())
    throw std::invalid_argument("cyclic_shift: split out of range");
  std::vector<Letter> v;
  v.reserve(w.size());
  v.insert(v.end(), w.letters().begin() + static_cast<long>(split), w.letters().end());
  v.insert(v.end(), w.letters().begin(), w.letters().begin() + static_cast<long>(split));
  return Word(std::move(v));
}

/// Number of blocks when w is a concatenation of permutations of its own
/// alphabet; absent otherwise.
inline std::optional<int> permutational_block_count(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("permutational_block_count: empty word");
  LetterSet alpha = w.alphabet();
  size_t n = alpha.size();
  if (w.size() % n != 0) return std::nullopt;
  size_t blocks = w.size() / n;
  for (size_t b = 0; b < blocks; ++b) {
    LetterSet block(w.letters().begin() + static_cast<long>(b * n),
                    w.letters().begin() + static_cast<long>((b + 1) * n));
    if (block != alpha) return std::nullopt;
  }
  return static_cast<int>(blocks);
}

/// Relabels letters to {1..n} by increasing original value. Returns the
/// compact word and the map from new letter to original letter.
struct CompactWord {
  Word word;
  std::vector<Letter> original;  // original[new - 1] = old letter
};

inline CompactWord compact_relabel(const Word& w) {
  LetterSet alpha = w.alphabet();
  std::vector<Letter> original(alpha.begin(), alpha.end());
  std::vector<Letter> to_new(static_cast<size_t>(w.max_letter()) + 1, 0);
  for (size_t i = 0; i < original.size(); ++i)
    to_new[static_cast<size_t>(original[i])] = static_cast<Letter>(i + 1);
  std::vector<Letter> v;
  v.reserve(w.size());
  for (Letter x : w.letters()) v.push_back(to_new[static_cast<size_t>(x)]);
  return {Word(std::move(v)), std::move(original)};
}

}  // namespace wordrep

#endif
