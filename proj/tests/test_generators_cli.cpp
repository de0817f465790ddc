#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "ballcomp/blocks.hpp"
#include "ballcomp/formats.hpp"
#include "ballcomp/generators.hpp"
#include "ballcomp/median_scheme.hpp"
#include "ballcomp/oracle.hpp"
#include "ballcomp/registry.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ballcomp;
using namespace testutil;

namespace {

GenSpec spec_of(GraphClass c, int n, std::uint64_t seed) {
  GenSpec s;
  s.cls = c;
  s.n = n;
  s.seed = seed;
  return s;
}

bool is_tree(const Graph& g) { return g.m() == g.n() - 1 && is_connected(g.n(), g.edges()); }

// Runs the CLI, returns the exit status and fills out with stdout.
int run_cli(const std::string& args, std::string& out) {
  auto tmp = std::filesystem::temp_directory_path() / "ballcomp_cli_out.txt";
  std::string cmd = std::string(BALLCOMP_CLI) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  out = read_file(tmp.string());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("generation is deterministic and stays in its class") {
  const GraphClass classes[] = {GraphClass::Tree,  GraphClass::Cycle,     GraphClass::Cactus, GraphClass::CfMedian,
                                GraphClass::Interval, GraphClass::Split, GraphClass::PlanarRot, GraphClass::Random};
  for (GraphClass c : classes)
    for (int s = 0; s < 15; ++s) {
      GenSpec spec = spec_of(c, 3 + s % 8, s);
      Instance a = generate(spec), b = generate(spec);
      CHECK(a.graph.edges() == b.graph.edges());
      CHECK(is_connected(a.graph.n(), a.graph.edges()));
      switch (c) {
        case GraphClass::Tree: CHECK(is_tree(a.graph)); break;
        case GraphClass::Cycle: CHECK(a.graph.m() == a.graph.n()); break;
        case GraphClass::Cactus: CHECK(is_cactus(a.graph, block_cut_tree(a.graph))); break;
        case GraphClass::CfMedian: CHECK(is_cube_free_median(a.graph, all_pairs_distances(a.graph))); break;
        case GraphClass::Interval:
          REQUIRE(a.intervals);
          CHECK(validate_representation(a.graph, *a.intervals));
          break;
        case GraphClass::Split: CHECK(is_split_graph(a.graph)); break;
        case GraphClass::PlanarRot:
          REQUIRE(a.rotation);
          CHECK(validate_rotation(a.graph, *a.rotation));
          break;
        case GraphClass::Random: break;
      }
    }
}

TEST_CASE("small generator cases") {
  Instance k1 = generate(spec_of(GraphClass::Tree, 1, 3));
  CHECK(k1.graph.n() == 1);
  CHECK(k1.graph.m() == 0);
  Instance c6 = generate(spec_of(GraphClass::Cycle, 6, 3));
  CHECK(c6.graph.n() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.graph.degree(v) == 2);
  GenSpec grid = spec_of(GraphClass::CfMedian, 6, 1);
  grid.rows = 2;
  grid.cols = 3;
  Instance g = generate(grid);
  CHECK(g.graph.edges() == grid_graph(2, 3).edges());
  CHECK(is_cube_free_median(g.graph, all_pairs_distances(g.graph)));
  CHECK_THROWS_AS(generate(spec_of(GraphClass::Tree, 0, 1)), SchemeError);
  CHECK_THROWS_AS(parse_graph_class("hypercube"), SchemeError);
}

TEST_CASE("planar families") {
  for (PlanarFamily f : {PlanarFamily::Wheel, PlanarFamily::Grid, PlanarFamily::StackedSquares,
                         PlanarFamily::StackedTriangulation}) {
    GenSpec s = spec_of(GraphClass::PlanarRot, 9, 4);
    s.rows = s.cols = 3;
    s.planar = f;
    Instance in = generate(s);
    REQUIRE(in.rotation);
    CHECK(validate_rotation(in.graph, *in.rotation));
    // Euler: connected plane graph has m - n + 2 faces.
    CHECK(count_faces(*in.rotation) == in.graph.m() - in.graph.n() + 2);
  }
}

TEST_CASE("concept class to split graph") {
  auto r = concept_to_split_graph(2, {to_set(2, {0}), to_set(2, {0, 1})});
  CHECK(r.graph.n() == 4);
  CHECK(r.graph.m() == 1 + 1 + 2);
  CHECK(is_split_graph(r.graph));
  auto dup = concept_to_split_graph(2, {to_set(2, {0}), to_set(2, {0})});
  CHECK(dup.graph.n() == 3);
  CHECK_THROWS_AS(concept_to_split_graph(2, {VertexSet(2, false)}), SchemeError);
  CHECK_THROWS_AS(concept_to_split_graph(2, {VertexSet(3, true)}), SchemeError);
}

TEST_CASE("the reduction preserves VC-dimension") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    int m = 1 + static_cast<int>(rng() % 6);
    std::vector<VertexSet> concepts;
    int k = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) {
      VertexSet c(m, false);
      for (int v = 0; v < m; ++v) c[v] = rng() % 2;
      c[rng() % m] = true;
      concepts.push_back(c);
    }
    auto r = concept_to_split_graph(m, concepts);
    // Radius-1 balls of concept vertices restricted to the ground set give back the concepts.
    std::vector<VertexSet> traces;
    auto D = all_pairs_distances(r.graph);
    for (std::size_t i = 0; i < r.concepts.size(); ++i) {
      Ball b = Ball::make(D, r.concept_vertex[i], 1);
      traces.push_back(VertexSet(b.members.begin(), b.members.begin() + m));
      CHECK(traces.back() == r.concepts[i]);
    }
    CHECK(vc_dimension(traces, m) == vc_dimension(concepts, m));
  }
}

TEST_CASE("graph format") {
  Graph p3 = parse_graph("3 2\n0 1\n1 2\n");
  CHECK(p3.edges() == path(3).edges());
  CHECK(parse_graph(serialize(p3)).edges() == p3.edges());
  CHECK(parse_graph("# comment\n2 1\n0 1 # edge\n").m() == 1);
  try {
    parse_graph("3 2\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
}

TEST_CASE("sample, rotation and interval formats") {
  Sample X = parse_sample("+ 0\n- 2\n", 3);
  CHECK(X == sample(3, {0}, {2}));
  CHECK(parse_sample(serialize(X), 3) == X);
  CHECK_THROWS_AS(parse_sample("* 0\n", 3), ParseError);
  CHECK_THROWS_AS(parse_sample("+ 0\n- 0\n", 3), ParseError);

  Instance w = generate([] {
    GenSpec s = spec_of(GraphClass::PlanarRot, 6, 2);
    s.planar = PlanarFamily::Wheel;
    return s;
  }());
  auto rot = parse_rotation(serialize(*w.rotation), w.graph.n());
  CHECK(serialize(rot) == serialize(*w.rotation));

  Instance iv = generate(spec_of(GraphClass::Interval, 6, 5));
  auto rep = parse_intervals(serialize(*iv.intervals));
  CHECK(serialize(rep) == serialize(*iv.intervals));
  auto two = parse_intervals("0 1/2 3\n1 0.5 2\n");
  CHECK(two.n() == 2);
  CHECK(two.s(1) == Rational(1, 2));
}

TEST_CASE("report format") {
  auto r = parse_report("scheme=cycle samples=10 failures=2 max_support=3\nfailure +0 bad\n");
  CHECK(r.scheme_id == "cycle");
  CHECK(r.samples == 10);
  CHECK(r.failure_count == 2);
  CHECK(r.max_support == 3);
  CHECK(parse_report(serialize(r)).failure_count == 2);
}

TEST_CASE("registry") {
  GraphMetric p4(path(4));
  for (const auto& name : {"tree-uscs", "tree-lscs", "uscs", "lscs", "cactus", "hyperbolic"})
    CHECK(make_scheme(name, p4, {}) != nullptr);
  CHECK(make_scheme("tree-fixed-r", p4, {1, {}, {}})->radius() == 1);
  CHECK_THROWS_AS(make_scheme("tree-fixed-r", p4, {}), SchemeError);
  CHECK_THROWS_AS(make_scheme("interval", p4, {}), SchemeError);
  CHECK_THROWS_AS(make_scheme("nope", p4, {}), SchemeError);
  CHECK_THROWS_AS(make_scheme("cycle", p4, {}), SchemeError);
  CHECK(default_scheme_for("tree") == "tree-lscs");
}

TEST_CASE("command line") {
  std::string out;
  auto dir = std::filesystem::temp_directory_path();
  auto graph = (dir / "ballcomp_p3.txt").string();
  auto smp = (dir / "ballcomp_s.txt").string();
  write_file(graph, "3 2\n0 1\n1 2\n");
  write_file(smp, "+ 0\n- 2\n");

  CHECK(run_cli("vcdim --graph " + graph, out) == 0);
  CHECK(out == "2\n");
  CHECK(run_cli("delta --class cycle --n 4", out) == 0);
  CHECK(out == "1\n");
  CHECK(run_cli("delta --class cycle --n 5", out) == 0);
  CHECK(out == "1/2\n");
  CHECK(run_cli("verify --class tree --n 7 --seed 2 --scheme lscs --exhaustive", out) == 0);
  CHECK(out.rfind("scheme=tree-lscs", 0) == 0);
  CHECK(run_cli("compress --graph " + graph + " --scheme lscs --sample " + smp, out) == 0);
  std::string y = out.substr(0, out.size() - 1);
  CHECK(run_cli("reconstruct --graph " + graph + " --scheme lscs --compressed '" + y + "'", out) == 0);
  CHECK(out.find("B_") != std::string::npos);
  CHECK(run_cli("gen --class tree --n 5 --seed 9", out) == 0);
  CHECK(parse_graph(out).edges() == generate(spec_of(GraphClass::Tree, 5, 9)).graph.edges());
  CHECK(run_cli("balls --graph " + graph, out) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 6);

  write_file(graph, "3 2\n0 1\n1 q\n");
  CHECK(run_cli("vcdim --graph " + graph, out) == 2);
  CHECK(run_cli("verify --class bogus --n 3", out) == 2);
  CHECK(run_cli("frobnicate", out) == 2);
}
