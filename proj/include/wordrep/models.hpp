#ifndef WORDREP_MODELS_HPP
#define WORDREP_MODELS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Exact rational with a small decimal-oriented surface: parses integers
/// and decimal fractions, prints back as a decimal.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational parse(std::string_view text) {
    std::string s(text);
    size_t dot = s.find('.');
    try {
      if (dot == std::string::npos) {
        size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return integer(v);
      }
      std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 15) throw std::invalid_argument("");
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-") whole += '0';
      size_t pos = 0;
      std::int64_t w = std::stoll(whole, &pos);
      if (pos != whole.size()) throw std::invalid_argument("");
      std::int64_t scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      pos = 0;
      std::int64_t f = std::stoll(frac, &pos);
      if (pos != frac.size() || f < 0) throw std::invalid_argument("");
      std::int64_t n = (w < 0 || neg) ? w * scale - f : w * scale + f;
      return Rational(n, scale);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }

  /// Exact decimal rendering; denominators here always divide a power of
  /// ten because values come from decimal input or integer positions.
  std::string str() const {
    std::int64_t d = den;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
    // scale the numerator so the denominator becomes a power of ten
    std::int64_t dd = den;
    int twos = 0, fives = 0;
    while (dd % 2 == 0) dd /= 2, ++twos;
    while (dd % 5 == 0) dd /= 5, ++fives;
    int digits = std::max(twos, fives);
    std::int64_t mul = 1;
    for (int i = twos; i < digits; ++i) mul *= 2;
    for (int i = fives; i < digits; ++i) mul *= 5;
    std::int64_t scaled = num * mul;
    bool neg = scaled < 0;
    std::string ds = std::to_string(neg ? -scaled : scaled);
    while (ds.size() <= static_cast<size_t>(digits)) ds.insert(ds.begin(), '0');
    if (digits > 0) ds.insert(ds.end() - digits, '.');
    return (neg ? "-" : "") + ds;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
};

/**
 * A family of closed intervals with pairwise distinct endpoints, one per
 * vertex. Overlaps always have positive length because no two endpoints
 * coincide.
 */
struct IntervalModel {
  std::map<int, std::pair<Rational, Rational>> intervals;  // vertex -> (lo, hi)

  void validate() const {
    std::vector<Rational> all;
    for (const auto& [v, iv] : intervals) {
      if (v < 1) throw std::invalid_argument("interval model: vertex ids must be >= 1");
      if (!(iv.first < iv.second))
        throw std::invalid_argument("interval model: lo < hi required for vertex " + std::to_string(v));
      all.push_back(iv.first);
      all.push_back(iv.second);
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i + 1 < all.size(); ++i)
      if (all[i] == all[i + 1]) throw std::invalid_argument("interval model: duplicate endpoint");
  }

  /// Intersection graph; vertices must be exactly 1..n.
  Graph intersection_graph() const {
    int n = static_cast<int>(intervals.size());
    for (int v = 1; v <= n; ++v)
      if (!intervals.count(v))
        throw std::invalid_argument("interval model: vertices must be exactly 1..n");
    Graph g(n);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        const auto& a = intervals.at(u);
        const auto& b = intervals.at(v);
        if (a.first < b.second && b.first < a.second) g.add_edge(u, v);
      }
    }
    return g;
  }

  static IntervalModel parse(std::string_view text) {
    IntervalModel m;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      int v;
      std::string lo, hi;
      if (!(ls >> v)) continue;
      if (!(ls >> lo >> hi)) throw std::invalid_argument("interval model: bad line: " + line);
      if (m.intervals.count(v))
        throw std::invalid_argument("interval model: duplicate vertex " + std::to_string(v));
      m.intervals[v] = {Rational::parse(lo), Rational::parse(hi)};
    }
    m.validate();
    return m;
  }

  std::string str() const {
    std::string out;
    for (const auto& [v, iv] : intervals)
      out += std::to_string(v) + " " + iv.first.str() + " " + iv.second.str() + "\n";
    return out;
  }
};

/// Reads off the 2-uniform word of endpoint labels in increasing order.
/// The graph of the result at level 1 is the model's intersection graph.
inline Word interval_to_word(const IntervalModel& m) {
  m.validate();
  if (m.intervals.empty()) throw std::invalid_argument("interval_to_word: empty model");
  std::vector<std::pair<Rational, int>> pts;
  for (const auto& [v, iv] : m.intervals) {
    pts.push_back({iv.first, v});
    pts.push_back({iv.second, v});
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Letter> letters;
  for (const auto& [r, v] : pts) letters.push_back(v);
  return Word(std::move(letters));
}

/// Interval per letter spanning its two positions in a 2-uniform word.
inline IntervalModel word_to_intervals(const Word& w) {
  if (uniformity(w) != 2) throw std::invalid_argument("word_to_intervals: word must be 2-uniform");
  IntervalModel m;
  for (size_t i = 0; i < w.size(); ++i) {
    Letter v = w.at(i);
    auto it = m.intervals.find(v);
    if (it == m.intervals.end())
      m.intervals[v] = {Rational::integer(static_cast<std::int64_t>(i) + 1),
                        Rational::integer(static_cast<std::int64_t>(i) + 1)};
    else
      it->second.second = Rational::integer(static_cast<std::int64_t>(i) + 1);
  }
  m.validate();
  return m;
}

/// Interval per letter from leftmost to rightmost occurrence of an
/// r-uniform word; the graph of w at level 2r-3 is its intersection graph.
inline IntervalModel runiform_to_intervals(const Word& w, int r) {
  if (r < 2) throw std::invalid_argument("runiform_to_intervals: r >= 2 required");
  if (uniformity(w) != r)
    throw std::invalid_argument("runiform_to_intervals: word is not " + std::to_string(r) + "-uniform");
  IntervalModel m;
  for (size_t i = 0; i < w.size(); ++i) {
    Letter v = w.at(i);
    auto it = m.intervals.find(v);
    if (it == m.intervals.end())
      m.intervals[v] = {Rational::integer(static_cast<std::int64_t>(i) + 1),
                        Rational::integer(static_cast<std::int64_t>(i) + 1)};
    else
      it->second.second = Rational::integer(static_cast<std::int64_t>(i) + 1);
  }
  m.validate();
  return m;
}

/// Placement rule for the r-2 extra copies inserted between a letter's
/// two endpoint copies; any placement yields the same graph at 2r-3.
enum class InsertPlacement { AfterFirst, BeforeSecond };

/// Endpoint word of the model with r-2 extra copies of each letter
/// inserted between its two endpoint letters.
inline Word intervals_to_runiform(const IntervalModel& m, int r,
                                  InsertPlacement placement = InsertPlacement::AfterFirst) {
  if (r < 2) throw std::invalid_argument("intervals_to_runiform: r >= 2 required");
  Word base = interval_to_word(m);
  std::vector<Letter> out;
  LetterSet seen;
  for (size_t i = 0; i < base.size(); ++i) {
    Letter v = base.at(i);
    bool first = seen.insert(v).second;
    if (!first && placement == InsertPlacement::BeforeSecond)
      for (int c = 0; c < r - 2; ++c) out.push_back(v);
    out.push_back(v);
    if (first && placement == InsertPlacement::AfterFirst)
      for (int c = 0; c < r - 2; ++c) out.push_back(v);
  }
  return Word(std::move(out));
}

/**
 * A sequence of n*r points on a convex curve, each colored by a label in
 * {1..n} used exactly r times. Only the order of the points matters, so
 * the curve itself is never stored.
 */
struct Coloring {
  int n = 0;
  int r = 0;
  std::vector<Letter> sequence;

  Coloring() = default;
  Coloring(int n_, int r_, std::vector<Letter> seq) : n(n_), r(r_), sequence(std::move(seq)) {
    validate();
  }

  void validate() const {
    if (n < 1 || r < 1) throw std::invalid_argument("coloring: n, r >= 1 required");
    if (sequence.size() != static_cast<size_t>(n) * static_cast<size_t>(r))
      throw std::invalid_argument("coloring: sequence length must be n*r");
    std::vector<int> mult(static_cast<size_t>(n) + 1, 0);
    for (Letter x : sequence) {
      if (x < 1 || x > n) throw std::invalid_argument("coloring: label out of range");
      ++mult[static_cast<size_t>(x)];
    }
    for (int v = 1; v <= n; ++v)
      if (mult[static_cast<size_t>(v)] != r)
        throw std::invalid_argument("coloring: label " + std::to_string(v) + " must occur exactly r times");
  }

  /// 1-based ranks of the points colored v, in increasing order.
  std::vector<int> positions(Letter v) const {
    std::vector<int> out;
    for (size_t i = 0; i < sequence.size(); ++i)
      if (sequence[i] == v) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  Word word() const { return Word(sequence); }

  static Coloring parse(std::string_view text, int r) {
    Word w = Word::parse(text);
    int n = w.max_letter();
    return Coloring(n, r, w.letters());
  }

  std::string str() const { return Word(sequence).str(); }
};

/// Number of crossing segment pairs between two piecewise linear curves
/// through points in convex position, given the curves' sorted position
/// ranks. Two segments cross exactly when their endpoint ranks strictly
/// interleave around the convex order.
inline int chord_crossings(const std::vector<int>& pos_i, const std::vector<int>& pos_j) {
  for (int a : pos_i)
    for (int b : pos_j)
      if (a == b) throw std::invalid_argument("chord_crossings: overlapping ranks");
  auto sorted = [](const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end());
  };
  if (!sorted(pos_i) || !sorted(pos_j))
    throw std::invalid_argument("chord_crossings: position lists must be sorted");
  int crossings = 0;
  for (size_t s = 0; s + 1 < pos_i.size(); ++s) {
    int a1 = pos_i[s], b1 = pos_i[s + 1];
    for (size_t t = 0; t + 1 < pos_j.size(); ++t) {
      int a2 = pos_j[t], b2 = pos_j[t + 1];
      bool a2_inside = a1 < a2 && a2 < b1;
      bool b2_inside = a1 < b2 && b2 < b1;
      if (a2_inside != b2_inside) ++crossings;
    }
  }
  return crossings;
}

/// Graph on {1..n} whose edges are the label pairs with at least m
/// crossings between their curves.
inline Graph m_intersection_graph(const Coloring& c, int m) {
  c.validate();
  int bound = 2 * c.r - 3;
  if (m < 1 || m > bound)
    throw std::invalid_argument("m_intersection_graph: m must lie in [1, 2r-3]");
  Graph g(c.n);
  for (Letter i = 1; i <= c.n; ++i) {
    auto pi = c.positions(i);
    for (Letter j = i + 1; j <= c.n; ++j) {
      if (chord_crossings(pi, c.positions(j)) >= m) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace wordrep

#endif
