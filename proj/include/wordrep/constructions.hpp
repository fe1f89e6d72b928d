#ifndef WORDREP_CONSTRUCTIONS_HPP
#define WORDREP_CONSTRUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/**
 * Output of a word transformation: the new word, the graph it is expected
 * to represent at `level`, and the verification verdict. Operations throw
 * if their own output fails verification, so a returned result always
 * carries a PASS certificate.
 */
struct ConstructionResult {
  Word word;
  Graph expected;
  int level = 0;
  Verdict certificate;
};

namespace detail {

inline ConstructionResult certify(Word w, Graph expected, int level, const char* op) {
  Verdict v = verify_representation(w, expected, level);
  if (!v.pass) {
    std::string msg = std::string(op) + ": output failed verification:";
    for (const auto& viol : v.violations) msg += "\n  " + viol.describe(level);
    throw std::logic_error(msg);
  }
  return {std::move(w), std::move(expected), level, std::move(v)};
}

inline void require_represents(const Word& w, const Graph& g, int k, const char* op) {
  if (!verify_representation(w, g, k).pass)
    throw std::invalid_argument(std::string(op) + ": input word does not represent the input graph at level " +
                                std::to_string(k));
}

/// Letters shifted by a fixed offset.
inline Word offset_word(const Word& w, Letter offset) {
  std::vector<Letter> v;
  v.reserve(w.size());
  for (Letter x : w.letters()) v.push_back(x + offset);
  return Word(std::move(v));
}

}  // namespace detail

/// One input part of a disjoint union.
struct UnionPart {
  Word word;
  Graph graph;
};

/// Concatenates part words (letters offset so parts do not collide),
/// padding each so every letter occurs at least k+2 times; cross-part
/// pairs then see at least 2k+2 occurrences and stay non-edges.
inline ConstructionResult disjoint_union(const std::vector<UnionPart>& parts, int k) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
  int total = 0;
  for (const auto& p : parts) {
    detail::require_represents(p.word, p.graph, k, "disjoint_union");
    total += p.graph.vertex_count();
  }
  Graph expected(total);
  std::vector<Letter> all;
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.graph.edges()) expected.add_edge(u + offset, v + offset);
    Word padded = pad_occurrences(p.word, k + 2);
    Word shifted = detail::offset_word(padded, offset);
    all.insert(all.end(), shifted.letters().begin(), shifted.letters().end());
    offset += p.graph.vertex_count();
  }
  return detail::certify(Word(std::move(all)), std::move(expected), k, "disjoint_union");
}

/// Attaches a new degree-1 vertex y to x: x is padded to at least 2k+2
/// occurrences and every other occurrence, starting from the leftmost,
/// becomes y x y.
inline ConstructionResult add_pendant_vertex(const Word& w, int k, Letter x, Letter y) {
  Graph g = graph_of_word(w, k);
  g.check_vertex(x);
  if (y != g.vertex_count() + 1)
    throw std::invalid_argument("add_pendant_vertex: new vertex must be n+1");
  Word padded = pad_occurrences(w, 2 * k + 2);
  std::vector<Letter> v;
  int seen = 0;
  for (Letter a : padded.letters()) {
    if (a == x && ++seen % 2 == 1) {
      v.push_back(y);
      v.push_back(x);
      v.push_back(y);
    } else {
      v.push_back(a);
    }
  }
  Graph expected(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  expected.add_edge(x, y);
  return detail::certify(Word(std::move(v)), std::move(expected), k, "add_pendant_vertex");
}

/// Adds a vertex x with the same neighbourhood as y (up to each other).
/// Adjacent twins alternate (each y becomes xy); non-adjacent twins get
/// alternating xy / yx substitutions after padding y to k+2 occurrences.
inline ConstructionResult add_twin_vertex(const Word& w, int k, Letter y, Letter x, bool adjacent) {
  Graph g = graph_of_word(w, k);
  g.check_vertex(y);
  if (x != g.vertex_count() + 1)
    throw std::invalid_argument("add_twin_vertex: new vertex must be n+1");
  Word base = adjacent ? w : pad_occurrences(w, k + 2);
  std::vector<Letter> v;
  int seen = 0;
  for (Letter a : base.letters()) {
    if (a != y) {
      v.push_back(a);
      continue;
    }
    ++seen;
    if (adjacent || seen % 2 == 1) {
      v.push_back(x);
      v.push_back(y);
    } else {
      v.push_back(y);
      v.push_back(x);
    }
  }
  Graph expected(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  for (int u : g.neighbors(y)) expected.add_edge(x, u);
  if (adjacent) expected.add_edge(x, y);
  return detail::certify(Word(std::move(v)), std::move(expected), k, "add_twin_vertex");
}

namespace detail {

/// Splits w = a s1 a s2 ... a sm at every occurrence of `a`; w must start
/// with `a`. Returns the segments s1..sm.
inline std::vector<std::vector<Letter>> split_at(const Word& w, Letter a) {
  std::vector<std::vector<Letter>> segs;
  for (Letter x : w.letters()) {
    if (x == a)
      segs.emplace_back();
    else
      segs.back().push_back(x);
  }
  return segs;
}

inline void append(std::vector<Letter>& out, const std::vector<Letter>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

inline void append(std::vector<Letter>& out, const Word& part) { append(out, part.letters()); }

}  // namespace detail

/**
 * Identifies vertex x of the first word's graph with vertex y of the
 * second. The merged vertex keeps x's id; the second graph's other
 * vertices are relabeled to follow the first graph's ids in increasing
 * order. Both inputs must k-11-represent their graphs.
 */
inline ConstructionResult glue_at_vertex(const Word& w1, const Word& w2, int k, Letter x, Letter y) {
  Graph g1 = graph_of_word(w1, k);
  Graph g2 = graph_of_word(w2, k);
  g1.check_vertex(x);
  g2.check_vertex(y);
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();

  // relabel: g1 keeps its ids, g2's vertex u (u != y) becomes n1 + rank(u)
  std::vector<Letter> map2(static_cast<size_t>(n2) + 1, 0);
  map2[static_cast<size_t>(y)] = x;
  Letter next = n1;
  for (Letter u = 1; u <= n2; ++u)
    if (u != y) map2[static_cast<size_t>(u)] = ++next;

  Graph expected(n1 + n2 - 1);
  for (auto [a, b] : g1.edges()) expected.add_edge(a, b);
  for (auto [a, b] : g2.edges())
    expected.add_edge(map2[static_cast<size_t>(a)], map2[static_cast<size_t>(b)]);

  std::vector<Letter> r2;
  for (Letter a : w2.letters()) r2.push_back(map2[static_cast<size_t>(a)]);
  const Letter z = x;
  Word relabeled2(std::move(r2));

  Word a = with_endpoints(w1, x, w1.letters().back());
  Word b = with_endpoints(relabeled2, z, relabeled2.letters().back());
  // equalize occurrence counts of the glue letter by whole permutations
  size_t ca = a.count(z), cb = b.count(z);
  while (ca < cb) {
    a = concat(initial_permutation(a), a);
    ++ca;
  }
  while (cb < ca) {
    b = concat(initial_permutation(b), b);
    ++cb;
  }

  auto gs = detail::split_at(a, z);
  auto hs = detail::split_at(b, z);
  if (gs.size() != hs.size()) throw std::logic_error("glue_at_vertex: block count mismatch");
  std::vector<Letter> flat_g, flat_h;
  for (const auto& s : gs) detail::append(flat_g, s);
  for (const auto& s : hs) detail::append(flat_h, s);

  std::vector<Letter> pi1, pi2;
  if (!flat_g.empty()) pi1 = initial_permutation(Word(flat_g)).letters();
  if (!flat_h.empty()) pi2 = initial_permutation(Word(flat_h)).letters();

  std::vector<Letter> out;
  for (int rep = 0; rep <= k; ++rep) {
    out.push_back(z);
    detail::append(out, pi1);
    detail::append(out, pi2);
    out.push_back(z);
    detail::append(out, pi2);
    detail::append(out, pi1);
  }
  for (size_t i = 0; i < gs.size(); ++i) {
    out.push_back(z);
    detail::append(out, gs[i]);
    detail::append(out, hs[i]);
  }
  return detail::certify(Word(std::move(out)), std::move(expected), k, "glue_at_vertex");
}

/**
 * Joins the two graphs by the single edge x-y. The second graph's
 * vertices are relabeled to n1+1..n1+n2 in increasing order.
 */
inline ConstructionResult connect_by_edge(const Word& w1, const Word& w2, int k, Letter x, Letter y) {
  Graph g1 = graph_of_word(w1, k);
  Graph g2 = graph_of_word(w2, k);
  g1.check_vertex(x);
  g2.check_vertex(y);
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();

  Graph expected(n1 + n2);
  for (auto [a, b] : g1.edges()) expected.add_edge(a, b);
  for (auto [a, b] : g2.edges()) expected.add_edge(a + n1, b + n1);
  const Letter yy = y + n1;
  expected.add_edge(x, yy);

  Word a = with_endpoints(w1, x, w1.letters().back());
  Word b = detail::offset_word(w2, n1);
  b = with_endpoints(b, b.letters().front(), yy);

  // the initial permutation of b must end with the connecting letter
  Word pib = initial_permutation(b);
  if (pib.letters().back() != yy) {
    size_t ypos = 0;
    while (pib.at(ypos) != yy) ++ypos;
    std::vector<Letter> head(pib.letters().begin(), pib.letters().begin() + static_cast<long>(ypos));
    std::vector<Letter> tail(pib.letters().begin() + static_cast<long>(ypos) + 1, pib.letters().end());
    std::vector<Letter> nb;
    detail::append(nb, tail);
    detail::append(nb, head);
    nb.push_back(yy);
    detail::append(nb, tail);
    detail::append(nb, b);
    b = Word(std::move(nb));
  }

  size_t ca = a.count(x), cb = b.count(yy);
  while (ca < cb) {
    a = concat(initial_permutation(a), a);
    ++ca;
  }
  while (cb < ca) {
    b = concat(initial_permutation(b), b);
    ++cb;
  }

  auto gs = detail::split_at(a, x);
  // b ends with yy; segments h1..hm precede each yy
  auto hs_rev = detail::split_at(reversed(b), yy);
  std::vector<std::vector<Letter>> hs;
  for (auto it = hs_rev.rbegin(); it != hs_rev.rend(); ++it) {
    std::vector<Letter> seg(it->rbegin(), it->rend());
    hs.push_back(std::move(seg));
  }
  if (gs.size() != hs.size()) throw std::logic_error("connect_by_edge: block count mismatch");

  std::vector<Letter> flat_g, flat_h;
  for (const auto& s : gs) detail::append(flat_g, s);
  for (const auto& s : hs) detail::append(flat_h, s);
  std::vector<Letter> pi1, pi2;
  if (!flat_g.empty()) pi1 = initial_permutation(Word(flat_g)).letters();
  if (!flat_h.empty()) pi2 = initial_permutation(Word(flat_h)).letters();

  std::vector<Letter> out;
  for (int rep = 0; rep <= k; ++rep) {
    out.push_back(x);
    detail::append(out, pi1);
    detail::append(out, pi2);
    out.push_back(yy);
    detail::append(out, pi2);
    out.push_back(x);
    out.push_back(yy);
    detail::append(out, pi1);
  }
  for (size_t i = 0; i < gs.size(); ++i) {
    out.push_back(x);
    detail::append(out, gs[i]);
    detail::append(out, hs[i]);
    out.push_back(yy);
  }
  return detail::certify(Word(std::move(out)), std::move(expected), k, "connect_by_edge");
}

namespace detail {

/// A permutation input reordered so the neighbour letters come first.
/// With no alternating prefix blocks the core junction cannot absorb a
/// reversed pair, so the input's own order has to agree with the core.
inline Word neighbours_first(const Word& w, const std::set<Letter>& nbrs) {
  LetterSet nset(nbrs.begin(), nbrs.end());
  LetterSet rest;
  for (Letter a : w.letters())
    if (!nset.count(a)) rest.insert(a);
  return concat(restrict_to(w, nset), restrict_to(w, rest));
}

/// Shared prefix scheme of the cone constructions: alternately prepends
/// r(pi(w)) v and pi(w) v, starting next to the core, until v occurs
/// `target_v` times in total.
inline std::vector<Letter> cone_with_prefixes(const Word& w, const std::set<Letter>& nbrs, Letter v,
                                              int target_v) {
  Word pi = initial_permutation(w);
  LetterSet nset(nbrs.begin(), nbrs.end());
  LetterSet cset;
  for (Letter a : pi.letters())
    if (!nset.count(a) && a != v) cset.insert(a);

  std::vector<Letter> core;
  append(core, restrict_to(pi, nset));
  core.push_back(v);
  append(core, restrict_to(pi, cset));
  append(core, w);

  std::vector<Letter> prefix;  // built outward, then reversed block-wise
  Word rpi = reversed(pi);
  int have = 1;
  bool use_reversed = true;
  std::vector<std::vector<Letter>> blocks;
  while (have < target_v) {
    std::vector<Letter> blk = (use_reversed ? rpi : pi).letters();
    blk.push_back(v);
    blocks.push_back(std::move(blk));
    use_reversed = !use_reversed;
    ++have;
  }
  std::vector<Letter> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) append(out, *it);
  append(out, core);
  return out;
}

}  // namespace detail

/**
 * Cone step over a uniform 0-level word: w must be t-uniform (t >= 1) and
 * 0-11-represent its graph; the result (t-1)-11-represents that graph
 * plus a new vertex v adjacent exactly to N.
 */
inline ConstructionResult add_vertex_uniform(const Word& w, const std::set<Letter>& nbrs, Letter v) {
  Graph g = graph_of_word(w, 0);
  auto t = uniformity(w);
  if (!t) throw std::invalid_argument("add_vertex_uniform: word must be uniform");
  if (*t < 1) throw std::invalid_argument("add_vertex_uniform: uniformity must be >= 1");
  if (v != g.vertex_count() + 1)
    throw std::invalid_argument("add_vertex_uniform: new vertex must be n+1");
  for (Letter u : nbrs) g.check_vertex(u);

  // a 1-uniform input is a permutation and can be reordered freely
  Word base = (*t == 1) ? detail::neighbours_first(w, nbrs) : w;
  std::vector<Letter> out = detail::cone_with_prefixes(base, nbrs, v, *t);
  Graph expected(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  for (Letter u : nbrs) expected.add_edge(u, v);
  return detail::certify(Word(std::move(out)), std::move(expected), *t - 1, "add_vertex_uniform");
}

/**
 * Cone step over an m-uniform k-level word, for 2m-k-1 > 0. The result is
 * (3m-k-1)-uniform and (2m-2)-11-represents the graph plus a new vertex v
 * adjacent exactly to N; pairs {u,v} get exactly 2m-2 occurrences when
 * adjacent and exactly 2m when not.
 */
inline ConstructionResult add_vertex_general(const Word& w, int k, const std::set<Letter>& nbrs,
                                             Letter v) {
  Graph g = graph_of_word(w, k);
  auto m = uniformity(w);
  if (!m) throw std::invalid_argument("add_vertex_general: word must be uniform");
  if (2 * *m - k - 1 <= 0)
    throw std::invalid_argument("add_vertex_general: requires 2m-k-1 > 0");
  if (v != g.vertex_count() + 1)
    throw std::invalid_argument("add_vertex_general: new vertex must be n+1");
  for (Letter u : nbrs) g.check_vertex(u);

  // with no alternating blocks (k == 2m-2) a permutation input is
  // reordered neighbours-first; larger m has no such slack
  bool boundary = 2 * *m - k - 2 == 0;
  Word base = (boundary && *m == 1) ? detail::neighbours_first(w, nbrs) : w;
  std::vector<Letter> body = detail::cone_with_prefixes(base, nbrs, v, 2 * *m - k - 1);
  std::vector<Letter> out(static_cast<size_t>(*m), v);
  detail::append(out, body);

  Graph expected(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  for (Letter u : nbrs) expected.add_edge(u, v);
  ConstructionResult res = [&]() {
    try {
      return detail::certify(Word(std::move(out)), std::move(expected), 2 * *m - 2,
                             "add_vertex_general");
    } catch (const std::logic_error&) {
      if (boundary && *m >= 2)
        throw std::invalid_argument(
            "add_vertex_general: this input sits on the k = 2m-2 boundary, where the "
            "prefix scheme has no alternating block to absorb a reversed pair; use a "
            "(m+1)-uniform representant of the same graph instead");
      throw;
    }
  }();
  if (uniformity(res.word) != 3 * *m - k - 1)
    throw std::logic_error("add_vertex_general: output uniformity mismatch");
  return res;
}

/// Parameter arithmetic of the iterated cone: starting from words that
/// are (k+n-3)-uniform at level k on n vertices, one general cone step
/// yields (2k+3n-10)-uniform words at level 2k+2n-8 on n+1 vertices.
struct ConeIterationParams {
  int input_uniformity;
  int output_uniformity;
  int output_level;
};

inline ConeIterationParams cone_iteration_params(int n, int k) {
  if (2 * n + k - 7 <= 0)
    throw std::invalid_argument("cone_iteration_params: requires 2n+k-7 > 0");
  return {k + n - 3, 2 * k + 3 * n - 10, 2 * k + 2 * n - 8};
}

namespace detail {

/// Anchor positions of letters x and y within w, in order.
inline std::vector<size_t> anchor_positions(const Word& w, Letter x, Letter y) {
  std::vector<size_t> out;
  for (size_t i = 0; i < w.size(); ++i)
    if (w.at(i) == x || w.at(i) == y) out.push_back(i);
  return out;
}

inline Word insert_letters(const Word& w, const std::vector<std::pair<size_t, bool>>& marks, Letter z) {
  // marks: (position, before) pairs; before=true inserts z left of the letter
  std::vector<Letter> out;
  for (size_t i = 0; i < w.size(); ++i) {
    for (auto [p, before] : marks)
      if (p == i && before) out.push_back(z);
    out.push_back(w.at(i));
    for (auto [p, before] : marks)
      if (p == i && !before) out.push_back(z);
  }
  return Word(std::move(out));
}

}  // namespace detail

/**
 * Adds a new vertex z adjacent exactly to the endpoints of an existing
 * edge xy of a 1-level word. Case 1 threads z through an alternating
 * pair; case 2 handles a pair whose induced subword has one repeat.
 */
inline ConstructionResult add_triangle_vertex(const Word& w, Letter x, Letter y, Letter z) {
  Graph g = graph_of_word(w, 1);
  g.check_vertex(x);
  g.check_vertex(y);
  if (!g.has_edge(x, y)) throw std::invalid_argument("add_triangle_vertex: xy must be an edge");
  if (z != g.vertex_count() + 1)
    throw std::invalid_argument("add_triangle_vertex: new vertex must be n+1");
  int c = count_pattern11(w, x, y);

  Graph expected(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  expected.add_edge(x, z);
  expected.add_edge(y, z);

  std::vector<std::pair<size_t, bool>> marks;
  if (c == 0) {
    // alternating pair: normalize to start x / end y, at least two x anchors
    Word base = with_endpoints(w, x, y);
    auto anchors = detail::anchor_positions(base, x, y);
    while (anchors.size() < 4) {
      base = concat(initial_permutation(base), base);
      anchors = detail::anchor_positions(base, x, y);
    }
    // anchors alternate x y x y ... x y
    marks.push_back({anchors[0], true});
    marks.push_back({anchors[0], false});
    size_t ycount = 0;
    for (size_t a : anchors) {
      if (base.at(a) != y) continue;
      ++ycount;
      if (ycount == 2) {
        marks.push_back({a, true});
        marks.push_back({a, false});
      } else if (ycount > 2) {
        marks.push_back({a, false});
      }
    }
    return detail::certify(detail::insert_letters(base, marks, z), std::move(expected), 1,
                           "add_triangle_vertex");
  }

  // single repeat: arrange for the doubled letter to be y
  Letter xx = x, yx = y;
  {
    Word ind = restrict_to(w, LetterSet{x, y});
    for (size_t i = 0; i + 1 < ind.size(); ++i)
      if (ind.at(i) == ind.at(i + 1) && ind.at(i) == x) std::swap(xx, yx);
  }
  Word base = with_endpoints(w, xx, xx);
  auto anchors = detail::anchor_positions(base, xx, yx);
  // locate the adjacent y pair; pad until at least two x anchors precede it
  auto pair_index = [&]() {
    for (size_t i = 0; i + 1 < anchors.size(); ++i)
      if (base.at(anchors[i]) == yx && base.at(anchors[i + 1]) == yx) return i;
    throw std::logic_error("add_triangle_vertex: repeat not found");
  };
  size_t pi = pair_index();
  auto x_before = [&](size_t upto) {
    size_t cnt = 0;
    for (size_t i = 0; i < upto; ++i)
      if (base.at(anchors[i]) == xx) ++cnt;
    return cnt;
  };
  while (x_before(pi) < 2) {
    base = concat(initial_permutation(base), base);
    anchors = detail::anchor_positions(base, xx, yx);
    pi = pair_index();
  }
  size_t seen_x = 0, last_x_before_pair = 0;
  for (size_t i = 0; i < pi; ++i)
    if (base.at(anchors[i]) == xx) last_x_before_pair = i;
  for (size_t i = 0; i < anchors.size(); ++i) {
    bool is_x = base.at(anchors[i]) == xx;
    if (is_x && i < pi) {
      ++seen_x;
      if (seen_x == 1) {
        marks.push_back({anchors[i], true});
        marks.push_back({anchors[i], false});
      } else if (i != last_x_before_pair) {
        marks.push_back({anchors[i], false});
      }
    } else if (i == pi) {
      marks.push_back({anchors[i], true});
      marks.push_back({anchors[i], false});
    } else if (is_x && i > pi) {
      marks.push_back({anchors[i], false});
    }
  }
  return detail::certify(detail::insert_letters(base, marks, z), std::move(expected), 1,
                         "add_triangle_vertex");
}

/**
 * Adds a vertex v adjacent exactly to N over a permutational 0-level
 * word; the result 1-11-represents the extended graph.
 */
inline ConstructionResult add_vertex_permutational(const Word& w, const std::set<Letter>& nbrs,
                                                   Letter v) {
  Graph g = graph_of_word(w, 0);
  auto blocks = permutational_block_count(w);
  if (!blocks)
    throw std::invalid_argument("add_vertex_permutational: word must be a concatenation of permutations");
  if (v != g.vertex_count() + 1)
    throw std::invalid_argument("add_vertex_permutational: new vertex must be n+1");
  for (Letter u : nbrs) g.check_vertex(u);
  int n = g.vertex_count();

  Word pi = initial_permutation(w);
  LetterSet nset(nbrs.begin(), nbrs.end());
  LetterSet cset;
  for (Letter a : pi.letters())
    if (!nset.count(a)) cset.insert(a);

  std::vector<Letter> out;
  detail::append(out, reversed(pi));
  out.push_back(v);
  detail::append(out, restrict_to(pi, nset));
  out.push_back(v);
  detail::append(out, restrict_to(pi, cset));
  for (int b = 0; b < *blocks; ++b) {
    if (b > 0) out.push_back(v);
    out.insert(out.end(), w.letters().begin() + static_cast<long>(b * n),
               w.letters().begin() + static_cast<long>((b + 1) * n));
  }

  Graph expected(n + 1);
  for (auto [a, b] : g.edges()) expected.add_edge(a, b);
  for (Letter u : nbrs) expected.add_edge(u, v);
  return detail::certify(Word(std::move(out)), std::move(expected), 1, "add_vertex_permutational");
}

/// Deletes the edge xy from the graph of a uniform 0-level word; the
/// output yx ww yx 1-11-represents the graph without that edge.
inline ConstructionResult remove_edge(const Word& w, Letter x, Letter y) {
  Graph g = graph_of_word(w, 0);
  if (!uniformity(w)) throw std::invalid_argument("remove_edge: word must be uniform");
  g.check_vertex(x);
  g.check_vertex(y);
  if (!g.has_edge(x, y)) throw std::invalid_argument("remove_edge: xy must be an edge");

  Word ind = restrict_to(w, LetterSet{x, y});
  Letter a = x, b = y;
  if (ind.at(0) == y) std::swap(a, b);  // ensure the induced pair starts with a

  std::vector<Letter> out{b, a};
  detail::append(out, w);
  detail::append(out, w);
  out.push_back(b);
  out.push_back(a);

  Graph expected = g;
  expected.remove_edge(x, y);
  return detail::certify(Word(std::move(out)), std::move(expected), 1, "remove_edge");
}

/// Deletes every edge inside K from the graph of a uniform 0-level word
/// via p ww q with p, q the reversed initial/final permutations of the
/// K-induced subword.
inline ConstructionResult remove_clique_edges(const Word& w, const std::set<Letter>& K) {
  Graph g = graph_of_word(w, 0);
  if (!uniformity(w)) throw std::invalid_argument("remove_clique_edges: word must be uniform");
  for (Letter u : K) g.check_vertex(u);

  LetterSet ks(K.begin(), K.end());
  Word wk = restrict_to(w, ks);
  std::vector<Letter> out;
  if (!wk.empty()) detail::append(out, reversed(initial_permutation(wk)));
  detail::append(out, w);
  detail::append(out, w);
  if (!wk.empty()) detail::append(out, reversed(final_permutation(wk)));

  Graph expected = g;
  for (Letter u : K)
    for (Letter v : K)
      if (u < v && expected.has_edge(u, v)) expected.remove_edge(u, v);
  return detail::certify(Word(std::move(out)), std::move(expected), 1, "remove_clique_edges");
}

/// Deletes the edges from v to each vertex in N (a subset of v's
/// neighbours) from the graph of a uniform 0-level word.
inline ConstructionResult remove_star_edges(const Word& w, Letter v, const std::set<Letter>& N) {
  Graph g = graph_of_word(w, 0);
  if (!uniformity(w)) throw std::invalid_argument("remove_star_edges: word must be uniform");
  g.check_vertex(v);
  for (Letter u : N) {
    g.check_vertex(u);
    if (!g.has_edge(u, v))
      throw std::invalid_argument("remove_star_edges: " + std::to_string(u) + " is not a neighbour of v");
  }

  // uniform words may be cyclically shifted, so move v to the front
  size_t first_v = 0;
  while (w.at(first_v) != v) ++first_v;
  Word shifted = cyclic_shift(w, first_v);

  // fence in first-occurrence order: edges inside N then gain nothing at
  // the junctions, while every u-v pair gains the vv and uu repeats that
  // push it past level 1
  LetterSet nset(N.begin(), N.end());
  Word order = nset.empty() ? Word{} : initial_permutation(restrict_to(shifted, nset));
  std::vector<Letter> fence;
  detail::append(fence, order);
  fence.push_back(v);

  std::vector<Letter> out = fence;
  detail::append(out, shifted);
  detail::append(out, shifted);
  detail::append(out, fence);

  Graph expected = g;
  for (Letter u : N) expected.remove_edge(u, v);
  return detail::certify(Word(std::move(out)), std::move(expected), 1, "remove_star_edges");
}

}  // namespace wordrep

#endif
