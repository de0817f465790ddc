// Property-based acceptance run. One PASS/FAIL line per criterion; exits
// nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ballcomp/blocks.hpp"
#include "ballcomp/cactus_scheme.hpp"
#include "ballcomp/generators.hpp"
#include "ballcomp/hyperbolic.hpp"
#include "ballcomp/median_scheme.hpp"
#include "ballcomp/oracle.hpp"
#include "ballcomp/tree_schemes.hpp"
#include "ballcomp/verify.hpp"
#include "test_util.hpp"

using namespace ballcomp;
using namespace testutil;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      if (pass) detail << "first problem: " << why << "; ";
      pass = false;
    }
  }
};

// Graphs seen by criteria 1-7, reused by 8 and 10.
std::vector<Graph> pool;

Instance gen(GraphClass c, int n, std::uint64_t seed) {
  GenSpec s;
  s.cls = c;
  s.n = n;
  s.seed = seed;
  return generate(s);
}

Instance gen_planar(PlanarFamily f, int n, int rows = 0, int cols = 0) {
  GenSpec s;
  s.cls = GraphClass::PlanarRot;
  s.planar = f;
  s.n = n;
  s.rows = rows;
  s.cols = cols;
  return generate(s);
}

// Exhaustive verification with a support bound; accumulates into `total`.
VerificationReport check(const Scheme& s, const std::vector<Sample>& samples, std::size_t bound, Outcome& o,
                         std::size_t& total) {
  auto rep = verify_scheme(s, samples);
  total += rep.samples;
  std::ostringstream where;
  where << s.id() << " on n=" << s.n();
  o.require(rep.passed(), where.str() + ": " + std::to_string(rep.failure_count) + " failures");
  o.require(rep.max_support <= bound, where.str() + ": support " + std::to_string(rep.max_support));
  return rep;
}

std::vector<Sample> exhaustive(const Scheme& s) { return enumerate_realizable_samples(s.n(), target_family(s)); }

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::set<std::vector<Edge>> seen;
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seen.size() < 200; ++seed) {
    Graph t = gen(GraphClass::Tree, 1 + static_cast<int>(seed % 8), seed).graph;
    if (!seen.insert(t.edges()).second) continue;
    pool.push_back(t);
    GraphMetric gm(t);
    check(TreeUscs(gm), exhaustive(TreeUscs(gm)), 2, o, total);
    check(TreeLscs(gm), exhaustive(TreeLscs(gm)), 2, o, total);
    for (int r = 0; r <= gm.diam; ++r) {
      TreeFixedRadius fr(gm, r);
      check(fr, exhaustive(fr), 2, o, total);
      TreeFixedRadiusNoInfo ni(gm, r);
      check(ni, exhaustive(ni), 6, o, total);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  o.detail << seen.size() << " trees, " << total << " samples, " << static_cast<int>(secs * 10) / 10.0 << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t total = 0;
  for (int n = 3; n <= 12; ++n) {
    pool.push_back(cycle(n));
    CycleScheme s{GraphMetric(cycle(n))};
    check(s, exhaustive(s), 3, o, total);
  }
  o.detail << "C3..C12, " << total << " samples";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t total = 0, instances = 0;
  for (int i = 0; i < 120; ++i) {
    Graph g = gen(GraphClass::Cactus, 3 + i % 7, 1000 + i).graph;
    pool.push_back(g);
    CactusScheme s{GraphMetric(g)};
    s.set_check_invariants(true);
    check(s, exhaustive(s), 6, o, total);
    ++instances;
  }
  std::size_t sampled = 0;
  for (int i = 0; i < 25; ++i) {
    Graph g = gen(GraphClass::Cactus, 10 + i % 5, 2000 + i).graph;
    CactusScheme s{GraphMetric(g)};
    s.set_check_invariants(true);
    check(s, random_realizable_samples(g.n(), target_family(s), 10000, 77 + i), 6, o, sampled);
  }
  o.detail << instances << " cacti exhaustive (" << total << " samples), 25 cacti n=10..14 x 10^4 samples";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Graph> fixtures{grid_graph(2, 2), grid_graph(2, 3), grid_graph(2, 4), grid_graph(2, 5), grid_graph(3, 3),
                              grid_graph(1, 6)};
  for (int i = 0; fixtures.size() < 60; ++i) {
    Graph g = gen(GraphClass::CfMedian, 3 + i % 8, 3000 + i).graph;
    if (g.n() <= 10) fixtures.push_back(g);
  }
  std::vector<Graph> large;
  for (int i = 0; large.size() < 12; ++i) {
    Graph g = gen(GraphClass::CfMedian, 11 + i % 6, 4000 + i).graph;
    if (g.n() > 10 && g.n() <= 16) large.push_back(g);
  }
  std::size_t total = 0, pairs = 0;
  auto isometry = [&](const Graph& g) {
    auto D = all_pairs_distances(g);
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = 0; v < g.n(); ++v) {
        GridEmbedding E = embed_interval(g, D, u, v);
        ++pairs;
        for (Vertex z : E.interval)
          for (Vertex t : E.interval)
            if (std::abs(E.at(z).a - E.at(t).a) + std::abs(E.at(z).b - E.at(t).b) != D(z, t)) {
              o.require(false, "embedding of I(" + std::to_string(u) + "," + std::to_string(v) + ") not isometric");
              return;
            }
      }
  };
  for (const Graph& g : fixtures) {
    pool.push_back(g);
    isometry(g);
    CfMedianScheme s{GraphMetric(g)};
    s.set_check_invariants(true);
    check(s, exhaustive(s), 22, o, total);
  }
  std::size_t sampled = 0;
  for (std::size_t i = 0; i < large.size(); ++i) {
    isometry(large[i]);
    CfMedianScheme s{GraphMetric(large[i])};
    s.set_check_invariants(true);
    check(s, random_realizable_samples(large[i].n(), target_family(s), 10000, 91 + i), 22, o, sampled);
  }
  o.detail << fixtures.size() << " fixtures n<=10 (" << total << " samples), " << large.size()
           << " graphs n=11..16 x 10^4 samples, " << pairs << " embedded intervals";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t total = 0;
  for (int i = 0; i < 110; ++i) {
    Instance in = gen(GraphClass::Interval, 1 + i % 9, 5000 + i);
    pool.push_back(in.graph);
    GraphMetric gm(in.graph);
    IntervalScheme all(gm, *in.intervals);
    check(all, exhaustive(all), 4, o, total);
    for (int r = 0; r <= gm.diam; ++r) {
      IntervalScheme fixed(gm, *in.intervals, r);
      check(fixed, exhaustive(fixed), 4, o, total);
    }
  }
  o.detail << "110 interval graphs, both modes, " << total << " samples";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t samples = 0, failures = 0, literal_failures = 0, graphs_failing = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = gen(GraphClass::Split, 2 + i % 8, 6000 + i).graph;
    pool.push_back(g);
    GraphMetric gm(g);
    SplitScheme s{gm};
    auto X = exhaustive(s);
    VerifyOptions opt = default_options(s);
    opt.size_bound = std::max(1, s.partition().omega());
    auto rep = verify_scheme(s, X, opt);
    samples += rep.samples;
    failures += rep.failure_count;
    graphs_failing += rep.failure_count > 0;
    literal_failures += verify_scheme(SplitScheme{gm, SplitVariant::Literal}, X, opt).failure_count;
  }
  o.require(failures == 0, std::to_string(failures) + " failures on " + std::to_string(graphs_failing) + " graphs");
  o.detail << "300 split graphs, " << samples << " samples, " << failures << " failures (literal decoder: "
           << literal_failures << ")";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<Instance> fixtures;
  for (int k = 4; k <= 8; ++k) fixtures.push_back(gen_planar(PlanarFamily::Wheel, k + 1));
  for (int r = 1; r <= 3; ++r)
    for (int c = r; c <= 3; ++c) fixtures.push_back(gen_planar(PlanarFamily::Grid, r * c, r, c));
  for (int n : {4, 8, 12}) fixtures.push_back(gen_planar(PlanarFamily::StackedSquares, n));
  std::size_t total = 0;
  for (const Instance& in : fixtures) {
    pool.push_back(in.graph);
    PlanarUnitScheme s(GraphMetric(in.graph), *in.rotation);
    s.set_check_invariants(true);
    check(s, exhaustive(s), 4, o, total);
  }
  o.detail << fixtures.size() << " planar fixtures (W4..W8, grids to 3x3, stacked squares), " << total
           << " radius-1 samples";
  return o;
}

int naive_twice_delta(const Graph& g) {
  auto d = floyd(g);
  const int n = g.n();
  int best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          std::array<int, 3> s{d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
          std::sort(s.begin(), s.end());
          best = std::max(best, s[2] - s[1]);
        }
  return best;
}

Outcome criterion8() {
  Outcome o;
  o.require(hyperbolicity(all_pairs_distances(path(7))).delta_string() == "0", "delta(tree)");
  o.require(hyperbolicity(all_pairs_distances(cycle(4))).delta_string() == "1", "delta(C4)");
  o.require(hyperbolicity(all_pairs_distances(cycle(5))).delta_string() == "1/2", "delta(C5)");
  std::vector<Graph> graphs = pool;
  for (int i = 0; i < 50; ++i) graphs.push_back(gen(GraphClass::Random, 3 + i % 8, 7000 + i).graph);
  std::size_t verified = 0, total = 0;
  for (const Graph& g : graphs) {
    HyperbolicScheme s{GraphMetric(g)};
    const int td = s.delta().twice_delta;
    o.require(td == naive_twice_delta(g), "delta mismatch on n=" + std::to_string(g.n()));
    if (g.n() > 10) continue;
    auto D = floyd(g);
    std::vector<Sample> even, odd;
    for (const Sample& X : exhaustive(s)) {
      int diam = 0;
      for (Vertex a : X.positives())
        for (Vertex b : X.positives()) diam = std::max(diam, D[a][b]);
      (diam % 2 == 0 ? even : odd).push_back(X);
    }
    VerifyOptions opt = default_options(s);
    opt.approx = ApproxParams{2 * td, 3 * td};
    auto re = verify_scheme(s, even, opt);
    opt.approx = ApproxParams{2 * td, 3 * td + 2};
    auto ro = verify_scheme(s, odd, opt);
    total += re.samples + ro.samples;
    o.require(re.passed() && ro.passed(), "approximation fails on n=" + std::to_string(g.n()) + " delta=" +
                                              s.delta().delta_string());
    ++verified;
  }
  o.detail << graphs.size() << " graphs with exact delta, " << verified << " verified exhaustively, " << total
           << " samples";
  return o;
}

int ball_vc(const Graph& g) { return vc_dimension(enumerate_balls(all_pairs_distances(g)), g.n()); }

Outcome criterion9() {
  Outcome o;
  int worst_tree = 0, worst_interval = 0, worst_cactus = 0;
  for (int i = 0; i < 50; ++i) {
    worst_tree = std::max(worst_tree, ball_vc(gen(GraphClass::Tree, 1 + i % 10, 8000 + i).graph));
    worst_interval = std::max(worst_interval, ball_vc(gen(GraphClass::Interval, 1 + i % 10, 8100 + i).graph));
    worst_cactus = std::max(worst_cactus, ball_vc(gen(GraphClass::Cactus, 3 + i % 8, 8200 + i).graph));
    Graph sg = gen(GraphClass::Split, 2 + i % 9, 8300 + i).graph;
    int omega = split_partition(sg).omega();
    int vc = ball_vc(sg);
    o.require(vc <= std::max(2, omega), "split graph vc " + std::to_string(vc) + " > max(2, " +
                                            std::to_string(omega) + ")");
  }
  o.require(worst_tree <= 2, "tree vc " + std::to_string(worst_tree));
  o.require(worst_interval <= 2, "interval vc " + std::to_string(worst_interval));
  o.require(worst_cactus <= 3, "cactus vc " + std::to_string(worst_cactus));

  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    int m = 1 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % 12);
    std::vector<VertexSet> concepts;
    for (int i = 0; i < k; ++i) {
      VertexSet c(m, false);
      for (int v = 0; v < m; ++v) c[v] = rng() % 2;
      c[rng() % m] = true;
      concepts.push_back(c);
    }
    auto r = concept_to_split_graph(m, concepts);
    auto D = all_pairs_distances(r.graph);
    std::vector<VertexSet> traces;
    for (Vertex cv : r.concept_vertex) {
      Ball b = Ball::make(D, cv, 1);
      traces.push_back(VertexSet(b.members.begin(), b.members.begin() + m));
    }
    o.require(vc_dimension(traces, m) == vc_dimension(concepts, m), "reduction changes vc");
  }
  o.detail << "max vc: trees " << worst_tree << ", interval " << worst_interval << ", cacti " << worst_cactus
           << "; 20 concept classes preserved";
  return o;
}

// Shrinks every nonzero radius by one.
class CorruptedLscs : public TreeLscs {
 public:
  using TreeLscs::TreeLscs;
  Ball reconstruct(const CompressedSample& Y) const override {
    Ball b = TreeLscs::reconstruct(Y);
    if (b.is_empty() || b.radius == 0) return b;
    return Ball::make(gm_.dist, b.center, b.radius - 1);
  }
};

Outcome criterion10() {
  Outcome o;
  std::size_t checked = 0;
  for (const Graph& g : pool) {
    std::set<std::vector<bool>> got;
    for (const Ball& b : enumerate_balls(all_pairs_distances(g))) got.insert(b.members);
    o.require(got == naive_balls(g), "enumerate_balls differs on n=" + std::to_string(g.n()));
    ++checked;
  }
  CorruptedLscs bad{GraphMetric(path(6))};
  auto rep = verify_scheme(bad, exhaustive(bad));
  o.require(!rep.passed(), "corrupted reconstructor not flagged");
  o.detail << checked << " fixtures match the naive ball set; corrupted reconstructor: " << rep.failure_count
           << " failures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
