#include "ballcomp/generators.hpp"
#include "ballcomp/hyperbolic.hpp"
#include "ballcomp/oracle.hpp"
#include "ballcomp/tree_schemes.hpp"
#include "ballcomp/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ballcomp;
using namespace testutil;

namespace {

std::set<std::vector<bool>> as_sets(const std::vector<Ball>& bs) {
  std::set<std::vector<bool>> out;
  for (const auto& b : bs) out.insert(b.members);
  return out;
}

// Returns B_0(0) for everything.
class BrokenLscs : public TreeLscs {
 public:
  using TreeLscs::TreeLscs;
  Ball reconstruct(const CompressedSample&) const override { return Ball::make(gm_.dist, 0, 0); }
};

}  // namespace

TEST_CASE("balls of small graphs") {
  auto P3 = enumerate_balls(all_pairs_distances(path(3)));
  CHECK(P3.size() == 6);
  CHECK(as_sets(P3) == naive_balls(path(3)));
  CHECK(P3[0].radius == 0);
  CHECK(P3[0].center == 0);
  CHECK(enumerate_balls(all_pairs_distances(complete(3))).size() == 4);
  auto zero = enumerate_balls(all_pairs_distances(cycle(7)), 0);
  CHECK(zero.size() == 7);
}

TEST_CASE("enumerate_balls matches brute force and canonical order") {
  for (int s = 0; s < 40; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Random;
    spec.n = 1 + s % 10;
    spec.seed = s;
    Graph g = generate(spec).graph;
    auto D = all_pairs_distances(g);
    auto bs = enumerate_balls(D);
    CHECK(as_sets(bs) == naive_balls(g));
    CHECK(as_sets(bs).size() == bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      CHECK(bs[i] == Ball::make(D, bs[i].center, bs[i].radius));
      if (i > 0)
        CHECK(std::pair(bs[i - 1].radius, bs[i - 1].center) < std::pair(bs[i].radius, bs[i].center));
    }
  }
}

TEST_CASE("realizing balls") {
  auto family = enumerate_balls(all_pairs_distances(path(3)));
  auto r = realizing_balls(sample(3, {0}, {2}), family);
  REQUIRE(r.size() == 2);
  CHECK(members(r[0]) == std::vector<Vertex>{0});
  CHECK(members(r[1]) == std::vector<Vertex>{0, 1});
  CHECK(realizing_balls(sample(3, {0, 2}, {1}), family).empty());
  CHECK(realizing_balls(Sample(3), family).size() == family.size());
}

TEST_CASE("VC-dimension") {
  CHECK(vc_dimension(enumerate_balls(all_pairs_distances(path(3))), 3) == 2);
  CHECK(vc_dimension(enumerate_balls(all_pairs_distances(path(2))), 2) == 1);
  CHECK(vc_dimension(std::vector<VertexSet>{VertexSet(4, true)}, 4) == 0);
  CHECK(vc_dimension(std::vector<VertexSet>{{false, false}, {true, false}, {false, true}, {true, true}}, 2) == 2);
}

TEST_CASE("VC-dimension bounds on random trees and cacti") {
  for (int s = 0; s < 20; ++s) {
    GenSpec spec;
    spec.n = 2 + s % 9;
    spec.seed = 900 + s;
    spec.cls = GraphClass::Tree;
    CHECK(vc_dimension(enumerate_balls(all_pairs_distances(generate(spec).graph)), spec.n) <= 2);
    spec.cls = GraphClass::Cactus;
    CHECK(vc_dimension(enumerate_balls(all_pairs_distances(generate(spec).graph)), spec.n) <= 3);
  }
}

TEST_CASE("realizable sample enumeration") {
  auto k1 = enumerate_realizable_samples(1, enumerate_balls(all_pairs_distances(Graph(1, {}))));
  CHECK(k1.size() == 2);
  auto fam = enumerate_balls(all_pairs_distances(path(3)));
  auto p3 = enumerate_realizable_samples(3, fam);
  CHECK(p3.front() == Sample(3));
  CHECK(p3.size() == naive_realizable_count(3, naive_balls(path(3))));
  for (std::size_t i = 1; i < p3.size(); ++i) CHECK(p3[i - 1] < p3[i]);
  for (const auto& X : p3) CHECK(first_realizing(X, fam).has_value());
}

TEST_CASE("realizable counts match brute force on random graphs") {
  for (int s = 0; s < 12; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Random;
    spec.n = 2 + s % 6;
    spec.seed = 70 + s;
    Graph g = generate(spec).graph;
    auto fam = enumerate_balls(all_pairs_distances(g));
    CHECK(enumerate_realizable_samples(g.n(), fam).size() == naive_realizable_count(g.n(), naive_balls(g)));
    auto r1 = enumerate_balls(all_pairs_distances(g), 1);
    CHECK(enumerate_realizable_samples(g.n(), r1).size() == naive_realizable_count(g.n(), naive_balls(g, 1, 1)));
  }
}

TEST_CASE("seeded sampling above the exhaustive limit") {
  GenSpec spec;
  spec.cls = GraphClass::Tree;
  spec.n = 15;
  spec.seed = 4;
  auto fam = enumerate_balls(all_pairs_distances(generate(spec).graph));
  auto a = enumerate_realizable_samples(15, fam, 200);
  auto b = enumerate_realizable_samples(15, fam, 200);
  CHECK(a.size() == 200);
  CHECK(a == b);
  for (const auto& X : a) CHECK(first_realizing(X, fam).has_value());
}

TEST_CASE("verifier passes a correct scheme and flags a broken one") {
  GraphMetric p5(path(5));
  TreeLscs good(p5);
  auto samples = enumerate_realizable_samples(5, target_family(good));
  CHECK(verify_scheme(good, samples).passed());

  GraphMetric p3(path(3));
  BrokenLscs bad(p3);
  auto rep = verify_scheme(bad, enumerate_realizable_samples(3, target_family(bad)));
  CHECK_FALSE(rep.passed());
  bool saw = false;
  for (const auto& f : rep.failures) saw = saw || f.sample == sample(3, {2});
  CHECK(saw);
  CHECK(verify_scheme(bad, {sample(3, {2})}).failure_count == 1);
}

TEST_CASE("verifier in approximate mode") {
  GraphMetric c4(cycle(4));
  HyperbolicScheme h(c4);
  VerifyOptions opt = default_options(h);
  opt.approx = ApproxParams{2 * 2, 2 * 4};
  CHECK(verify_scheme(h, enumerate_realizable_samples(4, target_family(h)), opt).passed());
}

TEST_CASE("report text") {
  VerificationReport r;
  r.scheme_id = "x";
  r.samples = 3;
  r.max_support = 2;
  CHECK(r.to_string() == "scheme=x samples=3 failures=0 max_support=2\n");
}
