// Command-line front end: graph <-> word conversions, verification, the
// constructive transformations, universal representants, and the
// brute-force search oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordrep/constructions.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/models.hpp"
#include "wordrep/repr.hpp"
#include "wordrep/search.hpp"
#include "wordrep/svg.hpp"
#include "wordrep/universal.hpp"
#include "wordrep/word.hpp"

namespace {

using namespace wordrep;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
}

Graph load_graph(const std::string& path) { return parse_graph_auto(read_file(path)); }

struct WordInput {
  std::string text;
  std::string file;

  Word get() const {
    if (!file.empty()) return Word::parse(read_file(file));
    if (text.empty()) throw std::runtime_error("a word is required (--word or --word-file)");
    return Word::parse(text);
  }
};

void add_word_options(CLI::App* cmd, WordInput& w, const std::string& name = "--word") {
  cmd->add_option(name, w.text, "word as quoted whitespace-separated letters");
  cmd->add_option(name + "-file", w.file, "file containing the word");
}

struct BudgetOptions {
  int max_copies = 3;
  int uniform_t = 0;
  bool permutational = false;
  std::uint64_t node_limit = 2'000'000;
  int workers = 1;

  SearchBudget to_budget() const {
    SearchBudget b;
    b.max_copies_per_letter = uniform_t > 0 ? uniform_t : max_copies;
    b.uniform_only = uniform_t > 0;
    b.permutational_only = permutational;
    b.node_limit = node_limit;
    b.worker_hint = workers;
    return b;
  }
};

void add_budget_options(CLI::App* cmd, BudgetOptions& b) {
  cmd->add_option("--uniform", b.uniform_t, "restrict to words with exactly T copies of each letter");
  cmd->add_flag("--permutational", b.permutational, "restrict to concatenations of permutations");
  cmd->add_option("--max-copies", b.max_copies, "per-letter multiplicity cap (block cap with --permutational)");
  cmd->add_option("--node-limit", b.node_limit, "search node budget");
  cmd->add_option("--workers", b.workers, "worker threads (results are identical for any value)");
}

void print_construction(const ConstructionResult& r) {
  std::cout << "word: " << r.word.str() << "\n";
  std::cout << "level: " << r.level << "\n";
  std::cout << "graph:\n" << serialize_edgelist(r.expected);
  std::cout << "certificate: PASS\n";
}

std::set<Letter> parse_letter_set(const std::string& text) {
  Word w = Word::parse(text);
  return std::set<Letter>(w.letters().begin(), w.letters().end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs represented by words with bounded pattern-11 counts"};
  app.require_subcommand(1);

  try {
    // ---- graph-of-word ----
    auto* gow = app.add_subcommand("graph-of-word", "graph defined by a word at level k");
    int gow_k = 0;
    WordInput gow_word;
    std::string gow_out = "edges";
    bool gow_compact = false;
    gow->add_option("--k", gow_k, "level")->required();
    add_word_options(gow, gow_word);
    gow->add_option("--out", gow_out, "output format: edges or g6")
        ->check(CLI::IsMember({"edges", "g6"}));
    gow->add_flag("--compact", gow_compact, "relabel an arbitrary alphabet to 1..n first");
    gow->callback([&]() {
      Word w = gow_word.get();
      if (gow_compact) {
        CompactWord c = compact_relabel(w);
        w = c.word;
        std::cout << "relabeling:";
        for (size_t i = 0; i < c.original.size(); ++i)
          std::cout << " " << (i + 1) << "<-" << c.original[i];
        std::cout << "\n";
      }
      Graph g = graph_of_word(w, gow_k);
      if (gow_out == "g6")
        std::cout << serialize_graph6(g) << "\n";
      else
        std::cout << serialize_edgelist(g);
    });

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check that a word represents a graph at level k");
    std::string ver_graph;
    int ver_k = 0;
    WordInput ver_word;
    ver->add_option("--graph", ver_graph, "graph file (graph6 or edge list)")->required();
    ver->add_option("--k", ver_k, "level")->required();
    add_word_options(ver, ver_word);
    ver->callback([&]() {
      Verdict v = verify_representation(ver_word.get(), load_graph(ver_graph), ver_k);
      if (v.pass) {
        std::cout << "PASS\n";
      } else {
        std::cout << "FAIL\n";
        for (const auto& viol : v.violations) std::cout << viol.describe(ver_k) << "\n";
        std::exit(1);
      }
    });

    // ---- represent2 ----
    auto* rep = app.add_subcommand("represent2", "permutational 2-11-representant of any graph");
    std::string rep_graph;
    bool rep_connected = false, rep_exact = false;
    rep->add_option("--graph", rep_graph, "graph file")->required();
    rep->add_flag("--connected", rep_connected, "use the tighter bound for connected graphs");
    rep->add_flag("--exact-blocks", rep_exact, "pad with duplicate blocks to the worst-case block count");
    rep->callback([&]() {
      Graph g = load_graph(rep_graph);
      UniversalStats stats;
      PermutationalWord w = rep_connected ? represent2_connected(g, &stats) : represent2(g, &stats);
      if (rep_exact) {
        size_t n = static_cast<size_t>(g.vertex_count());
        size_t target = rep_connected ? n * n - 3 * n + 4 : n * n - n + 2;
        w = pad_to_block_count(w, target);
      }
      std::cout << w.str() << "\n";
      std::cout << "blocks: " << w.block_count() << "\n";
      std::cout << "corner-duplications: " << stats.corner_duplications << "\n";
    });

    // ---- transform ----
    auto* tr = app.add_subcommand("transform", "word transformations mirroring the constructions");
    tr->require_subcommand(1);

    {
      auto* c = tr->add_subcommand("extend", "raise the level by one");
      static WordInput w;
      static std::string side = "left";
      add_word_options(c, w);
      c->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
      c->callback([&]() {
        std::cout << extend_level(w.get(), side == "left" ? Side::Left : Side::Right).str() << "\n";
      });
    }
    {
      auto* c = tr->add_subcommand("double", "concatenate the word with itself");
      static WordInput w;
      add_word_options(c, w);
      c->callback([&]() { std::cout << doubled(w.get()).str() << "\n"; });
    }
    {
      auto* c = tr->add_subcommand("endpoints", "same counts, chosen first and last letters");
      static WordInput w;
      static int i = 0, j = 0;
      add_word_options(c, w);
      c->add_option("--i", i, "first letter")->required();
      c->add_option("--j", j, "last letter")->required();
      c->callback([&]() { std::cout << with_endpoints(w.get(), i, j).str() << "\n"; });
    }
    {
      auto* c = tr->add_subcommand("union", "disjoint union of represented graphs");
      static std::vector<std::string> words;
      static int k = 0;
      c->add_option("--word", words, "input words, one per part")->required();
      c->add_option("--k", k, "level")->required();
      c->callback([&]() {
        std::vector<UnionPart> parts;
        for (const auto& text : words) {
          Word w = Word::parse(text);
          parts.push_back({w, graph_of_word(w, k)});
        }
        print_construction(disjoint_union(parts, k));
      });
    }
    {
      auto* c = tr->add_subcommand("pendant", "attach a degree-1 vertex");
      static WordInput w;
      static int k = 0, x = 0, y = 0;
      add_word_options(c, w);
      c->add_option("--k", k)->required();
      c->add_option("--x", x, "existing vertex")->required();
      c->add_option("--y", y, "new vertex id (defaults to n+1)");
      c->callback([&]() {
        Word word = w.get();
        int fresh = y > 0 ? y : word.max_letter() + 1;
        print_construction(add_pendant_vertex(word, k, x, fresh));
      });
    }
    {
      auto* c = tr->add_subcommand("twin", "add a vertex with the same neighbourhood");
      static WordInput w;
      static int k = 0, y = 0, x = 0;
      static bool adjacent = false;
      add_word_options(c, w);
      c->add_option("--k", k)->required();
      c->add_option("--y", y, "existing vertex")->required();
      c->add_option("--x", x, "new vertex id (defaults to n+1)");
      c->add_flag("--adjacent", adjacent, "make the twins adjacent");
      c->callback([&]() {
        Word word = w.get();
        int fresh = x > 0 ? x : word.max_letter() + 1;
        print_construction(add_twin_vertex(word, k, y, fresh, adjacent));
      });
    }
    {
      auto* c = tr->add_subcommand("glue", "identify a vertex of one graph with a vertex of another");
      static std::string w1, w2;
      static int k = 0, x = 0, y = 0;
      c->add_option("--word1", w1)->required();
      c->add_option("--word2", w2)->required();
      c->add_option("--k", k)->required();
      c->add_option("--x", x, "vertex in the first graph")->required();
      c->add_option("--y", y, "vertex in the second graph")->required();
      c->callback([&]() {
        print_construction(glue_at_vertex(Word::parse(w1), Word::parse(w2), k, x, y));
      });
    }
    {
      auto* c = tr->add_subcommand("connect", "join two graphs by a single edge");
      static std::string w1, w2;
      static int k = 0, x = 0, y = 0;
      c->add_option("--word1", w1)->required();
      c->add_option("--word2", w2)->required();
      c->add_option("--k", k)->required();
      c->add_option("--x", x, "vertex in the first graph")->required();
      c->add_option("--y", y, "vertex in the second graph")->required();
      c->callback([&]() {
        print_construction(connect_by_edge(Word::parse(w1), Word::parse(w2), k, x, y));
      });
    }
    {
      auto* c = tr->add_subcommand("cone-uniform", "add a vertex over a uniform level-0 word");
      static WordInput w;
      static std::string nbrs;
      static int v = 0;
      add_word_options(c, w);
      c->add_option("--neighbors", nbrs, "neighbour set of the new vertex");
      c->add_option("--v", v, "new vertex id (defaults to n+1)");
      c->callback([&]() {
        Word word = w.get();
        int fresh = v > 0 ? v : word.max_letter() + 1;
        print_construction(add_vertex_uniform(word, parse_letter_set(nbrs), fresh));
      });
    }
    {
      auto* c = tr->add_subcommand("cone-general", "add a vertex over a uniform level-k word");
      static WordInput w;
      static std::string nbrs;
      static int k = 0, v = 0;
      add_word_options(c, w);
      c->add_option("--k", k)->required();
      c->add_option("--neighbors", nbrs, "neighbour set of the new vertex");
      c->add_option("--v", v, "new vertex id (defaults to n+1)");
      c->callback([&]() {
        Word word = w.get();
        int fresh = v > 0 ? v : word.max_letter() + 1;
        print_construction(add_vertex_general(word, k, parse_letter_set(nbrs), fresh));
      });
    }
    {
      auto* c = tr->add_subcommand("triangle", "add a vertex adjacent to both ends of an edge");
      static WordInput w;
      static int x = 0, y = 0, z = 0;
      add_word_options(c, w);
      c->add_option("--x", x)->required();
      c->add_option("--y", y)->required();
      c->add_option("--z", z, "new vertex id (defaults to n+1)");
      c->callback([&]() {
        Word word = w.get();
        int fresh = z > 0 ? z : word.max_letter() + 1;
        print_construction(add_triangle_vertex(word, x, y, fresh));
      });
    }
    {
      auto* c = tr->add_subcommand("cone-perm", "add a vertex over a permutational level-0 word");
      static WordInput w;
      static std::string nbrs;
      static int v = 0;
      add_word_options(c, w);
      c->add_option("--neighbors", nbrs, "neighbour set of the new vertex");
      c->add_option("--v", v, "new vertex id (defaults to n+1)");
      c->callback([&]() {
        Word word = w.get();
        int fresh = v > 0 ? v : word.max_letter() + 1;
        print_construction(add_vertex_permutational(word, parse_letter_set(nbrs), fresh));
      });
    }
    {
      auto* c = tr->add_subcommand("remove-edge", "delete one edge at the cost of one level");
      static WordInput w;
      static int x = 0, y = 0;
      add_word_options(c, w);
      c->add_option("--x", x)->required();
      c->add_option("--y", y)->required();
      c->callback([&]() { print_construction(remove_edge(w.get(), x, y)); });
    }
    {
      auto* c = tr->add_subcommand("remove-clique", "delete all edges inside a vertex set");
      static WordInput w;
      static std::string set;
      add_word_options(c, w);
      c->add_option("--set", set, "vertex set")->required();
      c->callback([&]() { print_construction(remove_clique_edges(w.get(), parse_letter_set(set))); });
    }
    {
      auto* c = tr->add_subcommand("remove-star", "delete edges from a vertex to chosen neighbours");
      static WordInput w;
      static std::string nbrs;
      static int v = 0;
      add_word_options(c, w);
      c->add_option("--v", v)->required();
      c->add_option("--neighbors", nbrs, "neighbours to disconnect");
      c->callback([&]() { print_construction(remove_star_edges(w.get(), v, parse_letter_set(nbrs))); });
    }

    // ---- search ----
    auto* sea = app.add_subcommand("search", "find a representant within a budgeted family");
    std::string sea_graph;
    int sea_k = 0;
    BudgetOptions sea_budget;
    sea->add_option("--graph", sea_graph)->required();
    sea->add_option("--k", sea_k, "level")->required();
    add_budget_options(sea, sea_budget);
    sea->callback([&]() {
      SearchBudget b = sea_budget.to_budget();
      Graph g = load_graph(sea_graph);
      SearchResult r = find_representant(g, sea_k, b);
      std::cout << "family: " << b.family_name() << "\n";
      if (sea_k == 0) {
        int n = g.vertex_count(), kappa = max_clique_size(g);
        std::cout << "level0-complete-up-to: " << 2 * (n - kappa)
                  << " copies per letter (uniform length bound " << 2 * n * (n - kappa) << ")\n";
      }
      std::cout << "nodes: " << r.nodes << "\n";
      switch (r.outcome) {
        case SearchOutcome::Found:
          std::cout << "found: " << r.witness->str() << "\n";
          break;
        case SearchOutcome::AbsentInFamily:
          std::cout << "proved absent in family\n";
          std::exit(1);
        case SearchOutcome::BudgetExhausted:
          std::cout << "budget exhausted without verdict\n";
          std::exit(3);
      }
    });

    // ---- min-level ----
    auto* ml = app.add_subcommand("min-level", "smallest level with a witness (upper bound beyond 0)");
    std::string ml_graph;
    BudgetOptions ml_budget;
    ml->add_option("--graph", ml_graph)->required();
    add_budget_options(ml, ml_budget);
    ml->callback([&]() {
      Graph g = load_graph(ml_graph);
      MinLevelResult r = min_level(g, ml_budget.to_budget());
      std::cout << "k: " << r.level << "\n";
      std::cout << "qualifier: " << (r.exact ? "=" : "<=") << "\n";
      std::cout << "word: " << r.witness.str() << "\n";
      std::cout << "nodes: " << r.nodes << "\n";
      if (r.level > 0) {
        int n = g.vertex_count(), kappa = max_clique_size(g);
        std::cout << "level0-complete-up-to: " << 2 * (n - kappa)
                  << " copies per letter (uniform length bound " << 2 * n * (n - kappa) << ")\n";
      }
      auto outcome_name = [](SearchOutcome o) {
        switch (o) {
          case SearchOutcome::Found: return "found";
          case SearchOutcome::AbsentInFamily: return "absent-in-family";
          default: return "budget-exhausted";
        }
      };
      for (int k = 0; k < r.level && k <= 1; ++k)
        std::cout << "level " << k << ": " << outcome_name(r.below[k]) << "\n";
    });

    // ---- census ----
    auto* cen = app.add_subcommand("census", "classify labeled graphs on n vertices");
    int cen_n = 0, cen_k = 2;
    std::string cen_out;
    BudgetOptions cen_budget;
    cen->add_option("--n", cen_n, "vertex count (<= 7)")->required();
    cen->add_option("--k", cen_k, "maximum level to try");
    cen->add_option("--out", cen_out, "CSV output path (default stdout)");
    add_budget_options(cen, cen_budget);
    cen->callback([&]() {
      std::string csv = census_csv(census(cen_n, cen_k, cen_budget.to_budget()));
      if (cen_out.empty())
        std::cout << csv;
      else
        write_file(cen_out, csv);
    });

    // ---- interval ----
    auto* iv = app.add_subcommand("interval", "interval models and their words");
    iv->require_subcommand(1);
    {
      auto* c = iv->add_subcommand("to-word", "2-uniform endpoint word of a model");
      static std::string model, svg_path;
      c->add_option("--model", model, "interval model file")->required();
      c->add_option("--svg", svg_path, "write the interval diagram to this path");
      c->callback([&]() {
        IntervalModel m = IntervalModel::parse(read_file(model));
        std::cout << interval_to_word(m).str() << "\n";
        if (!svg_path.empty()) write_file(svg_path, emit_svg_intervals(m));
      });
    }
    {
      auto* c = iv->add_subcommand("from-word", "interval model of a 2-uniform word");
      static WordInput w;
      add_word_options(c, w);
      c->callback([&]() { std::cout << word_to_intervals(w.get()).str(); });
    }
    {
      auto* c = iv->add_subcommand("from-runiform", "interval model of an r-uniform word");
      static WordInput w;
      static int r = 2;
      add_word_options(c, w);
      c->add_option("--r", r, "uniformity")->required();
      c->callback([&]() { std::cout << runiform_to_intervals(w.get(), r).str(); });
    }

    // ---- circle ----
    auto* cir = app.add_subcommand("circle", "decide chord-diagram realizability exhaustively");
    std::string cir_graph;
    int cir_cap = 8;
    cir->add_option("--graph", cir_graph)->required();
    cir->add_option("--cap", cir_cap, "largest vertex count accepted");
    cir->callback([&]() {
      bool yes = is_circle_graph(load_graph(cir_graph), cir_cap);
      std::cout << (yes ? "true" : "false") << "\n";
      if (!yes) std::exit(1);
    });

    // ---- geometry ----
    auto* geo = app.add_subcommand("geometry", "convex-position curve models");
    geo->require_subcommand(1);
    {
      auto* c = geo->add_subcommand("imgraph", "m-intersection graph of a coloring");
      static std::string coloring, svg_path;
      static int r = 2, m = 1;
      c->add_option("--coloring", coloring, "coloring file (one line of labels)")->required();
      c->add_option("--r", r, "copies per label")->required();
      c->add_option("--m", m, "crossing threshold")->required();
      c->add_option("--svg", svg_path, "write the curve diagram to this path");
      c->callback([&]() {
        Coloring col = Coloring::parse(read_file(coloring), r);
        Graph g = m_intersection_graph(col, m);
        std::cout << serialize_edgelist(g);
        if (!svg_path.empty()) write_file(svg_path, emit_svg_curves(col));
      });
    }
    {
      auto* c = geo->add_subcommand("chords", "chord diagram of a 2-uniform word");
      static WordInput w;
      static std::string svg_path;
      add_word_options(c, w);
      c->add_option("--svg", svg_path, "write the chord diagram to this path")->required();
      c->callback([&]() { write_file(svg_path, emit_svg_chords(w.get())); });
    }

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
