#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wordrep/constructions.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/repr.hpp"

using namespace wordrep;

namespace {

Graph plus_vertex(const Graph& g, const std::set<Letter>& nbrs) {
  Graph out(g.vertex_count() + 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (Letter u : nbrs) out.add_edge(u, g.vertex_count() + 1);
  return out;
}

}  // namespace

TEST_CASE("disjoint union") {
  ConstructionResult two = disjoint_union({{Word::parse("1 2"), complete_graph(2)},
                                           {Word::parse("1 2"), complete_graph(2)}},
                                          0);
  Graph expect(4);
  expect.add_edge(1, 2);
  expect.add_edge(3, 4);
  CHECK(two.expected == expect);
  CHECK(two.certificate.pass);

  ConstructionResult single = disjoint_union({{Word::parse("1 2 1 2"), complete_graph(2)}}, 1);
  CHECK(single.expected == complete_graph(2));

  ConstructionResult singletons = disjoint_union({{Word::parse("1"), complete_graph(1)},
                                                  {Word::parse("1"), complete_graph(1)},
                                                  {Word::parse("1"), complete_graph(1)}},
                                                 1);
  CHECK(singletons.expected == empty_graph(3));

  CHECK_THROWS_AS(disjoint_union({{Word::parse("1 1 2 2"), complete_graph(2)}}, 0),
                  std::invalid_argument);
}

TEST_CASE("disjoint union properties") {
  testing::Rng rng(7301);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> kd(0, 2), nd(1, 4), pd(2, 3);
    int k = kd(rng), parts = pd(rng);
    std::vector<UnionPart> input;
    for (int p = 0; p < parts; ++p) {
      Word w = testing::random_word(nd(rng), 3, rng);
      input.push_back({w, graph_of_word(w, k)});
    }
    ConstructionResult r = disjoint_union(input, k);
    CHECK(r.certificate.pass);
    // cross pairs carry at least 2k+2 occurrences
    int off = 0;
    ReprClaim claim(r.word, k);
    for (size_t p = 0; p + 1 < input.size(); ++p) {
      off += input[p].graph.vertex_count();
      CHECK(claim.count(off, off + 1) >= 2 * k + 2);
    }
  }
}

TEST_CASE("pendant vertex") {
  ConstructionResult k2 = add_pendant_vertex(Word::parse("1"), 0, 1, 2);
  CHECK(k2.expected == complete_graph(2));

  ConstructionResult p3 = add_pendant_vertex(Word::parse("1 2"), 0, 1, 3);
  Graph expect(3);
  expect.add_edge(1, 2);
  expect.add_edge(1, 3);
  CHECK(p3.expected == expect);
  CHECK(p3.certificate.pass);

  CHECK_THROWS_AS(add_pendant_vertex(Word::parse("1 2"), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("pendant vertex properties") {
  testing::Rng rng(7302);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> kd(0, 2), nd(2, 6);
    int k = kd(rng), n = nd(rng);
    Word w = testing::random_word(n, 4, rng);
    std::uniform_int_distribution<int> xd(1, n);
    Letter x = xd(rng);
    ConstructionResult r = add_pendant_vertex(w, k, x, n + 1);
    CHECK(r.certificate.pass);
    CHECK(r.expected.degree(n + 1) == 1);
    CHECK(r.expected.has_edge(x, n + 1));
  }
}

TEST_CASE("twin vertex") {
  ConstructionResult adj = add_twin_vertex(Word::parse("1 2"), 0, 2, 3, true);
  CHECK(adj.word == Word::parse("1 3 2"));
  CHECK(adj.expected == complete_graph(3));

  ConstructionResult non = add_twin_vertex(Word::parse("1 2"), 0, 2, 3, false);
  Graph expect(3);
  expect.add_edge(1, 2);
  expect.add_edge(1, 3);
  CHECK(non.expected == expect);
  CHECK(non.certificate.pass);

  CHECK_THROWS_AS(add_twin_vertex(Word::parse("1 2"), 0, 2, 2, true), std::invalid_argument);
}

TEST_CASE("twin vertex properties") {
  testing::Rng rng(7303);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> kd(0, 2), nd(2, 6);
    int k = kd(rng), n = nd(rng);
    Word w = testing::random_word(n, 4, rng);
    std::uniform_int_distribution<int> yd(1, n);
    Letter y = yd(rng);
    bool adjacent = trial % 2 == 0;
    ConstructionResult r = add_twin_vertex(w, k, y, n + 1, adjacent);
    CHECK(r.certificate.pass);
    CHECK(r.expected.has_edge(y, n + 1) == adjacent);
    for (Letter u = 1; u <= n; ++u)
      if (u != y) CHECK(r.expected.has_edge(u, n + 1) == r.expected.has_edge(u, y));
  }
}

TEST_CASE("gluing at a vertex") {
  ConstructionResult path = glue_at_vertex(Word::parse("1 2"), Word::parse("1 2"), 0, 1, 1);
  Graph p3(3);
  p3.add_edge(1, 2);
  p3.add_edge(1, 3);
  CHECK(path.expected == p3);
  CHECK(path.certificate.pass);

  // gluing a lone vertex changes nothing
  Word c4 = Word::parse("1 4 2 1 3 2 4 3");
  ConstructionResult same = glue_at_vertex(c4, Word::parse("1"), 0, 2, 1);
  CHECK(same.expected == cycle_graph(4));
}

TEST_CASE("gluing properties") {
  testing::Rng rng(7304);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> kd(0, 2), nd(1, 4);
    int k = kd(rng);
    int n1 = nd(rng), n2 = nd(rng);
    Word w1 = testing::random_word(n1, 3, rng);
    Word w2 = testing::random_word(n2, 3, rng);
    std::uniform_int_distribution<int> xd(1, n1), yd(1, n2);
    Letter x = xd(rng), y = yd(rng);
    ConstructionResult r = glue_at_vertex(w1, w2, k, x, y);
    CHECK(r.certificate.pass);
    CHECK(r.expected.vertex_count() == n1 + n2 - 1);
    // parts see each other only through the glue vertex
    for (Letter a = 1; a <= n1; ++a)
      for (Letter b = n1 + 1; b <= n1 + n2 - 1; ++b)
        if (a != x) CHECK_FALSE(r.expected.has_edge(a, b));
  }
}

TEST_CASE("connecting by an edge") {
  ConstructionResult k2 = connect_by_edge(Word::parse("1"), Word::parse("1"), 0, 1, 1);
  CHECK(k2.expected == complete_graph(2));
  CHECK(k2.certificate.pass);

  ConstructionResult p4 = connect_by_edge(Word::parse("1 2"), Word::parse("1 2"), 0, 2, 1);
  CHECK(p4.expected == path_graph(4));
}

TEST_CASE("connection properties") {
  testing::Rng rng(7305);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> kd(0, 2), nd(1, 4);
    int k = kd(rng);
    int n1 = nd(rng), n2 = nd(rng);
    Word w1 = testing::random_word(n1, 3, rng);
    Word w2 = testing::random_word(n2, 3, rng);
    std::uniform_int_distribution<int> xd(1, n1), yd(1, n2);
    Letter x = xd(rng), y = yd(rng);
    ConstructionResult r = connect_by_edge(w1, w2, k, x, y);
    CHECK(r.certificate.pass);
    // exactly one cross edge
    int cross = 0;
    for (Letter a = 1; a <= n1; ++a)
      for (Letter b = n1 + 1; b <= n1 + n2; ++b)
        if (r.expected.has_edge(a, b)) ++cross;
    CHECK(cross == 1);
    CHECK(r.expected.has_edge(x, y + n1));
  }
}

TEST_CASE("cone over a uniform word") {
  // 2-uniform square word, new vertex on {1,2}
  Word c4 = Word::parse("1 4 2 1 3 2 4 3");
  ConstructionResult r = add_vertex_uniform(c4, {1, 2}, 5);
  CHECK(r.level == 1);
  CHECK(r.expected == plus_vertex(cycle_graph(4), {1, 2}));
  CHECK(r.certificate.pass);

  // cone over a complete graph stays complete
  ConstructionResult cone = add_vertex_uniform(Word::parse("1 2 3 1 2 3"), {1, 2, 3}, 4);
  CHECK(cone.expected == complete_graph(4));

  ConstructionResult isolated = add_vertex_uniform(c4, {}, 5);
  CHECK(isolated.expected == plus_vertex(cycle_graph(4), {}));

  CHECK_THROWS_AS(add_vertex_uniform(Word::parse("1 2 1"), {1}, 3), std::invalid_argument);
}

TEST_CASE("cone over a uniform word: exact counts") {
  testing::Rng rng(7306);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5), td(1, 3);
    int n = nd(rng), t = td(rng);
    Word w = testing::random_uniform_word(n, t, rng);
    std::set<Letter> nbrs = testing::random_subset(n, rng);
    ConstructionResult r = add_vertex_uniform(w, nbrs, n + 1);
    CHECK(r.certificate.pass);
    ReprClaim claim(r.word, r.level);
    for (Letter u = 1; u <= n; ++u) {
      if (nbrs.count(u))
        CHECK(claim.count(u, n + 1) == t - 1);
      else
        // one prefix block short of the generic t+1 when t == 1
        CHECK(claim.count(u, n + 1) == (t == 1 ? 1 : t + 1));
    }
  }
}

TEST_CASE("general cone") {
  // permutation input: m = 1, k = 0
  ConstructionResult r = add_vertex_general(Word::parse("1 2 3"), 0, {2}, 4);
  CHECK(uniformity(r.word) == 2);
  CHECK(r.level == 0);
  CHECK(r.expected == plus_vertex(complete_graph(3), {2}));

  CHECK_THROWS_AS(add_vertex_general(Word::parse("1 2"), 1, {1}, 3), std::invalid_argument);
}

TEST_CASE("general cone shape for m=4 k=3") {
  // build a 4-uniform level-3 input and check the prefix layout
  testing::Rng rng(7307);
  Word w = testing::random_uniform_word(3, 4, rng);
  ConstructionResult r = add_vertex_general(w, 3, {1, 2}, 4);
  // v^m then alternating blocks ending with the core
  const auto& ls = r.word.letters();
  CHECK(std::vector<Letter>(ls.begin(), ls.begin() + 4) == std::vector<Letter>{4, 4, 4, 4});
  CHECK(uniformity(r.word) == 3 * 4 - 3 - 1);
  CHECK(r.level == 2 * 4 - 2);
}

TEST_CASE("general cone: exact counts and uniformity") {
  testing::Rng rng(7308);
  int done = 0;
  while (done < 300) {
    std::uniform_int_distribution<int> nd(2, 5), md(1, 3), kd(0, 2);
    int n = nd(rng), m = md(rng), k = kd(rng);
    if (2 * m - k - 1 <= 0) continue;
    // the k = 2m-2 boundary is only constructible from permutation inputs
    if (2 * m - k - 2 == 0 && m >= 2) continue;
    Word w = testing::random_uniform_word(n, m, rng);
    // the word must represent its graph at level k; take the graph it defines
    std::set<Letter> nbrs = testing::random_subset(n, rng);
    ConstructionResult r = add_vertex_general(w, k, nbrs, n + 1);
    CHECK(r.certificate.pass);
    CHECK(uniformity(r.word) == 3 * m - k - 1);
    CHECK(r.level == 2 * m - 2);
    ReprClaim claim(r.word, r.level);
    for (Letter u = 1; u <= n; ++u) {
      if (nbrs.count(u))
        CHECK(claim.count(u, n + 1) == 2 * m - 2);
      else
        CHECK(claim.count(u, n + 1) == 2 * m);
    }
    ++done;
  }
}

TEST_CASE("cone iteration arithmetic") {
  // n = 5, k = 0: inputs 2-uniform at level 0, outputs 5-uniform at level 2
  ConeIterationParams p = cone_iteration_params(5, 0);
  CHECK(p.input_uniformity == 2);
  CHECK(p.output_uniformity == 5);
  CHECK(p.output_level == 2);
  // one concrete iteration matches the arithmetic
  testing::Rng rng(7309);
  Word w = testing::random_uniform_word(4, p.input_uniformity, rng);
  if (verify_representation(w, graph_of_word(w, 0), 0).pass) {
    ConstructionResult r = add_vertex_general(w, 0, {1, 2}, 5);
    CHECK(uniformity(r.word) == p.output_uniformity);
    CHECK(r.level == p.output_level);
  }
  CHECK_THROWS_AS(cone_iteration_params(2, 1), std::invalid_argument);
}

TEST_CASE("adding a triangle") {
  // alternating edge
  ConstructionResult k3 = add_triangle_vertex(Word::parse("1 2 1 2 1 2"), 1, 2, 3);
  CHECK(k3.expected == complete_graph(3));
  CHECK(k3.certificate.pass);

  // edge with one repeat
  ConstructionResult rep = add_triangle_vertex(Word::parse("1 2 2 1"), 1, 2, 3);
  CHECK(rep.expected == complete_graph(3));

  CHECK_THROWS_AS(add_triangle_vertex(Word::parse("1 1 2 2 1 1"), 1, 2, 3), std::invalid_argument);
}

TEST_CASE("triangle properties") {
  testing::Rng rng(7310);
  int done = 0;
  while (done < 300) {
    std::uniform_int_distribution<int> nd(2, 6);
    int n = nd(rng);
    Word w = testing::random_word(n, 5, rng);
    Graph g = graph_of_word(w, 1);
    std::vector<std::pair<int, int>> es = g.edges();
    if (es.empty()) continue;
    std::uniform_int_distribution<size_t> ed(0, es.size() - 1);
    auto [x, y] = es[ed(rng)];
    ConstructionResult r = add_triangle_vertex(w, x, y, n + 1);
    CHECK(r.certificate.pass);
    CHECK(r.expected.degree(n + 1) == 2);
    ++done;
  }
}

TEST_CASE("cone over a permutational word") {
  ConstructionResult r = add_vertex_permutational(Word::parse("1 2 3 1 2 3"), {1}, 4);
  CHECK(r.level == 1);
  CHECK(r.expected == plus_vertex(complete_graph(3), {1}));
  CHECK(r.certificate.pass);

  ConstructionResult cone = add_vertex_permutational(Word::parse("1 2 3 1 2 3"), {1, 2, 3}, 4);
  CHECK(cone.expected == complete_graph(4));

  CHECK_THROWS_AS(add_vertex_permutational(Word::parse("1 1 2 1"), {1}, 3), std::invalid_argument);
}

TEST_CASE("permutational cone properties") {
  testing::Rng rng(7311);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5), bd(1, 4);
    int n = nd(rng);
    Word w = testing::random_permutational_word(n, bd(rng), rng);
    std::set<Letter> nbrs = testing::random_subset(n, rng);
    ConstructionResult r = add_vertex_permutational(w, nbrs, n + 1);
    CHECK(r.certificate.pass);
    CHECK(r.expected == plus_vertex(graph_of_word(w, 0), nbrs));
  }
}

TEST_CASE("removing an edge") {
  ConstructionResult r = remove_edge(Word::parse("1 2 3 1 2 3"), 1, 2);
  CHECK(r.word == Word::parse("2 1 1 2 3 1 2 3 1 2 3 1 2 3 2 1"));
  Graph expect(3);
  expect.add_edge(1, 3);
  expect.add_edge(2, 3);
  CHECK(r.expected == expect);
  CHECK(r.certificate.pass);

  CHECK_THROWS_AS(remove_edge(Word::parse("1 1 2 2"), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(remove_edge(Word::parse("1 2 1"), 1, 2), std::invalid_argument);
}

TEST_CASE("edge removal keeps every other edge") {
  testing::Rng rng(7312);
  int done = 0;
  while (done < 1000) {
    std::uniform_int_distribution<int> nd(2, 6), td(1, 3);
    Word w = testing::random_uniform_word(nd(rng), td(rng), rng);
    Graph g = graph_of_word(w, 0);
    auto es = g.edges();
    if (es.empty()) continue;
    std::uniform_int_distribution<size_t> ed(0, es.size() - 1);
    auto [x, y] = es[ed(rng)];
    ConstructionResult r = remove_edge(w, x, y);
    CHECK(r.certificate.pass);
    Graph expect = g;
    expect.remove_edge(x, y);
    CHECK(r.expected == expect);
    ++done;
  }
}

TEST_CASE("removing clique edges") {
  // pairs reduce to single-edge removal, by graph equality
  Word k3 = Word::parse("1 2 3 1 2 3");
  CHECK(remove_clique_edges(k3, {1, 2}).expected == remove_edge(k3, 1, 2).expected);

  CHECK(remove_clique_edges(k3, {2}).expected == complete_graph(3));

  Word k4 = Word::parse("1 2 3 4");
  CHECK(remove_clique_edges(k4, {1, 2, 3, 4}).expected == empty_graph(4));

  CHECK(remove_clique_edges(k3, {}).expected == complete_graph(3));
}

TEST_CASE("clique removal properties") {
  testing::Rng rng(7313);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(2, 6), td(1, 3);
    int n = nd(rng);
    Word w = testing::random_uniform_word(n, td(rng), rng);
    std::set<Letter> K = testing::random_subset(n, rng);
    if (K.empty()) K.insert(1);
    ConstructionResult r = remove_clique_edges(w, K);
    CHECK(r.certificate.pass);
  }
}

TEST_CASE("removing star edges") {
  Word k3 = Word::parse("1 2 3 1 2 3");
  CHECK(remove_star_edges(k3, 1, {2}).expected == remove_edge(k3, 1, 2).expected);
  CHECK(remove_star_edges(k3, 1, {}).expected == complete_graph(3));

  ConstructionResult isolated = remove_star_edges(k3, 1, {2, 3});
  Graph expect(3);
  expect.add_edge(2, 3);
  CHECK(isolated.expected == expect);

  CHECK_THROWS_AS(remove_star_edges(Word::parse("1 1 2 2 3 3"), 1, {2}), std::invalid_argument);
}

TEST_CASE("star removal properties") {
  testing::Rng rng(7314);
  int done = 0;
  while (done < 300) {
    std::uniform_int_distribution<int> nd(2, 6), td(1, 3);
    int n = nd(rng);
    Word w = testing::random_uniform_word(n, td(rng), rng);
    Graph g = graph_of_word(w, 0);
    std::uniform_int_distribution<int> vd(1, n);
    Letter v = vd(rng);
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    std::set<Letter> N;
    std::bernoulli_distribution coin(0.6);
    for (int u : nb)
      if (coin(rng)) N.insert(u);
    ConstructionResult r = remove_star_edges(w, v, N);
    CHECK(r.certificate.pass);
    for (Letter u : N) CHECK_FALSE(r.expected.has_edge(u, v));
    ++done;
  }
}
