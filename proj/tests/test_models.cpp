#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "wordrep/models.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/svg.hpp"

using namespace wordrep;

namespace {

/// All colorings with n labels, r copies each.
std::vector<Coloring> all_colorings(int n, int r) {
  std::vector<Letter> seq;
  for (Letter v = 1; v <= n; ++v)
    for (int c = 0; c < r; ++c) seq.push_back(v);
  std::sort(seq.begin(), seq.end());
  std::vector<Coloring> out;
  do {
    out.push_back(Coloring(n, r, seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

Coloring random_coloring(int n, int r, testing::Rng& rng) {
  std::vector<Letter> seq;
  for (Letter v = 1; v <= n; ++v)
    for (int c = 0; c < r; ++c) seq.push_back(v);
  std::shuffle(seq.begin(), seq.end(), rng);
  return Coloring(n, r, seq);
}

IntervalModel random_model(int n, testing::Rng& rng) {
  std::vector<int> points;
  std::uniform_int_distribution<int> pd(1, 1000);
  std::set<int> used;
  while (static_cast<int>(points.size()) < 2 * n) {
    int p = pd(rng);
    if (used.insert(p).second) points.push_back(p);
  }
  IntervalModel m;
  // pair up random endpoints
  std::shuffle(points.begin(), points.end(), rng);
  for (int v = 1; v <= n; ++v) {
    int a = points[static_cast<size_t>(2 * v - 2)], b = points[static_cast<size_t>(2 * v - 1)];
    if (a > b) std::swap(a, b);
    m.intervals[v] = {Rational::integer(a), Rational::integer(b)};
  }
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("0.5").str() == "0.5");
  CHECK(Rational::parse("-1.25").str() == "-1.25");
  CHECK(Rational::parse("10.10").str() == "10.1");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational::parse("2") < Rational::parse("2.5"));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("interval model to word") {
  IntervalModel m;
  m.intervals[1] = {Rational::integer(0), Rational::integer(2)};
  m.intervals[2] = {Rational::integer(1), Rational::integer(3)};
  m.intervals[3] = {Rational::integer(4), Rational::integer(5)};
  Word w = interval_to_word(m);
  CHECK(w == Word::parse("1 2 1 2 3 3"));
  Graph g = graph_of_word(w, 1);
  Graph expect(3);
  expect.add_edge(1, 2);
  CHECK(g == expect);
  CHECK(g == m.intersection_graph());

  // nested intervals still intersect
  IntervalModel nested;
  nested.intervals[1] = {Rational::integer(0), Rational::integer(3)};
  nested.intervals[2] = {Rational::integer(1), Rational::integer(2)};
  CHECK(interval_to_word(nested) == Word::parse("1 2 2 1"));
  CHECK(graph_of_word(interval_to_word(nested), 1) == complete_graph(2));

  IntervalModel dup;
  dup.intervals[1] = {Rational::integer(0), Rational::integer(1)};
  dup.intervals[2] = {Rational::integer(1), Rational::integer(2)};
  CHECK_THROWS_AS(interval_to_word(dup), std::invalid_argument);
}

TEST_CASE("word to intervals") {
  IntervalModel m = word_to_intervals(Word::parse("1 2 1 2 3 3"));
  Graph expect(3);
  expect.add_edge(1, 2);
  CHECK(m.intersection_graph() == expect);
  CHECK(word_to_intervals(Word::parse("1 1 2 2")).intersection_graph() == empty_graph(2));
  CHECK_THROWS_AS(word_to_intervals(Word::parse("1 2 1")), std::invalid_argument);
}

TEST_CASE("two-uniform words and interval models are the same thing") {
  testing::Rng rng(7501);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> nd(1, 7);
    int n = nd(rng);
    Word w = testing::random_uniform_word(n, 2, rng);
    CHECK(word_to_intervals(w).intersection_graph() == graph_of_word(w, 1));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> nd(1, 7);
    int n = nd(rng);
    IntervalModel m = random_model(n, rng);
    Word w = interval_to_word(m);
    CHECK(graph_of_word(w, 1) == m.intersection_graph());
    CHECK(word_to_intervals(w).intersection_graph() == m.intersection_graph());
  }
}

TEST_CASE("r-uniform interval correspondence") {
  // r = 2 specializes to the plain interval conversion
  testing::Rng rng(7502);
  Word w2 = testing::random_uniform_word(4, 2, rng);
  CHECK(runiform_to_intervals(w2, 2).intersection_graph() ==
        word_to_intervals(w2).intersection_graph());

  // two letters, r = 3: non-adjacent exactly when fully separated
  std::vector<Letter> seq{1, 1, 1, 2, 2, 2};
  std::sort(seq.begin(), seq.end());
  do {
    Word w(seq);
    Graph g = graph_of_word(w, 2 * 3 - 3);
    Word ind = restrict_to(w, {1, 2});
    bool separated = ind == Word::parse("1 1 1 2 2 2") || ind == Word::parse("2 2 2 1 1 1");
    CHECK(g.has_edge(1, 2) == !separated);
    CHECK(runiform_to_intervals(w, 3).intersection_graph() == g);
  } while (std::next_permutation(seq.begin(), seq.end()));

  CHECK_THROWS_AS(runiform_to_intervals(Word::parse("1 1 2"), 2), std::invalid_argument);
}

TEST_CASE("interval models round trip at every r") {
  testing::Rng rng(7503);
  for (int r : {2, 3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      std::uniform_int_distribution<int> nd(1, 6);
      IntervalModel m = random_model(nd(rng), rng);
      Word w = intervals_to_runiform(m, r);
      REQUIRE(uniformity(w) == r);
      CHECK(graph_of_word(w, 2 * r - 3) == m.intersection_graph());
      CHECK(runiform_to_intervals(w, r).intersection_graph() == m.intersection_graph());
    }
  }
}

TEST_CASE("inserted copies may go anywhere between the endpoints") {
  testing::Rng rng(7504);
  for (int r : {3, 4}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> nd(1, 5);
      IntervalModel m = random_model(nd(rng), rng);
      Word a = intervals_to_runiform(m, r, InsertPlacement::AfterFirst);
      Word b = intervals_to_runiform(m, r, InsertPlacement::BeforeSecond);
      CHECK(graph_of_word(a, 2 * r - 3) == graph_of_word(b, 2 * r - 3));
    }
  }
}

TEST_CASE("chord crossing counts") {
  CHECK(chord_crossings({1, 3}, {2, 4}) == 1);
  CHECK(chord_crossings({1, 4}, {2, 3}) == 0);
  CHECK(chord_crossings({1, 2}, {3, 4}) == 0);
  CHECK_THROWS_AS(chord_crossings({1, 2}, {2, 3}), std::invalid_argument);

  // r = 3 exhaustive: the crossing bound 2r-3 is met and never beaten
  int max_seen = 0;
  for (const Coloring& c : all_colorings(2, 3)) {
    int x = chord_crossings(c.positions(1), c.positions(2));
    CHECK(x <= 3);
    max_seen = std::max(max_seen, x);
  }
  CHECK(max_seen == 3);
}

TEST_CASE("crossings complement pattern counts") {
  // exhaustive biconditional: count <= 2r-3-m iff crossings >= m
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (const Coloring& c : all_colorings(n, r)) {
      Word w = c.word();
      for (int m = 1; m <= 2 * r - 3; ++m) {
        for (Letter i = 1; i <= n; ++i) {
          for (Letter j = i + 1; j <= n; ++j) {
            bool few_repeats = count_pattern11(w, i, j) <= 2 * r - 3 - m;
            bool crossing = chord_crossings(c.positions(i), c.positions(j)) >= m;
            CHECK(few_repeats == crossing);
          }
        }
      }
    }
  }
}

TEST_CASE("m-intersection graphs agree with the representation engine") {
  testing::Rng rng(7505);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uniform_int_distribution<int> nd(1, 6), rd(2, 4);
    int n = nd(rng), r = rd(rng);
    Coloring c = random_coloring(n, r, rng);
    for (int m = 1; m <= 2 * r - 3; ++m)
      CHECK(m_intersection_graph(c, m) == graph_of_word(c.word(), 2 * r - 3 - m));
  }
  Coloring c = random_coloring(3, 2, rng);
  CHECK_THROWS_AS(m_intersection_graph(c, 2), std::invalid_argument);
  CHECK_THROWS_AS(m_intersection_graph(c, 0), std::invalid_argument);
}

TEST_CASE("chord diagrams at r=2 are the level-0 engine") {
  testing::Rng rng(7506);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> nd(1, 7);
    Coloring c = random_coloring(nd(rng), 2, rng);
    CHECK(m_intersection_graph(c, 1) == graph_of_word(c.word(), 0));
  }
}

TEST_CASE("coloring and model files") {
  Coloring c = Coloring::parse("1 2 1 2", 2);
  CHECK(c.n == 2);
  CHECK(c.positions(1) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Coloring::parse("1 2 1", 2), std::invalid_argument);

  IntervalModel m = IntervalModel::parse("1 0 2\n2 1.5 3\n");
  CHECK(m.intervals.at(2).first == Rational(3, 2));
  std::string text = m.str();
  CHECK(IntervalModel::parse(text).str() == text);
}

TEST_CASE("svg output is deterministic and well formed") {
  Word w = Word::parse("1 2 1 2");
  std::string chords = emit_svg_chords(w);
  CHECK(chords == emit_svg_chords(w));
  CHECK(chords.rfind("<svg", 0) == 0);
  CHECK(chords.find("</svg>") != std::string::npos);
  CHECK(chords.find("<line") != std::string::npos);

  testing::Rng rng(7507);
  Coloring c = random_coloring(3, 3, rng);
  std::string curves = emit_svg_curves(c);
  CHECK(curves == emit_svg_curves(c));
  CHECK(curves.find("<polyline") != std::string::npos);

  IntervalModel m = word_to_intervals(Word::parse("1 2 1 2"));
  std::string ivs = emit_svg_intervals(m);
  CHECK(ivs == emit_svg_intervals(m));
  CHECK(ivs.find("<line") != std::string::npos);
}
