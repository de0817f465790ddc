#include <random>

#include "ballcomp/blocks.hpp"
#include "ballcomp/generators.hpp"
#include "ballcomp/metric.hpp"
#include "ballcomp/sphere_order.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ballcomp;
using namespace testutil;

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}}), GraphError);
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("all pairs distances") {
  CHECK(all_pairs_distances(path(3))(0, 2) == 2);
  auto K = all_pairs_distances(complete(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(K(i, j) == (i == j ? 0 : 1));
  CHECK(all_pairs_distances(cycle(6))(0, 3) == 3);
}

TEST_CASE("distances agree with Floyd-Warshall on random graphs") {
  for (int s = 0; s < 30; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Random;
    spec.n = 2 + s % 12;
    spec.seed = s;
    Graph g = generate(spec).graph;
    auto D = all_pairs_distances(g);
    auto F = floyd(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) {
        REQUIRE(D(u, v) == F[u][v]);
        for (int w = 0; w < g.n(); ++w) CHECK(std::abs(D(u, w) - D(v, w)) <= D(u, v));
      }
  }
}

TEST_CASE("intervals") {
  auto P = all_pairs_distances(path(5));
  CHECK(interval(P, 0, 4) == std::vector<Vertex>{0, 1, 2, 3, 4});
  auto C = all_pairs_distances(cycle(6));
  CHECK(interval(C, 0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(interval(C, 0, 3).size() == 6);
  CHECK(interval(C, 2, 5) == interval(C, 5, 2));
}

TEST_CASE("medians") {
  auto S = all_pairs_distances(star(3));
  CHECK(median(S, 1, 2, 3) == std::vector<Vertex>{0});
  CHECK(median(all_pairs_distances(path(5)), 0, 2, 4) == std::vector<Vertex>{2});
  CHECK(median(all_pairs_distances(cycle(4)), 0, 1, 2) == std::vector<Vertex>{1});
  CHECK(median(all_pairs_distances(complete(3)), 0, 1, 2).empty());
}

TEST_CASE("gates") {
  auto P = all_pairs_distances(path(5));
  CHECK(gate(P, {3, 4}, 0) == 3);
  CHECK(gate(P, {1, 2, 3}, 2) == 2);
  CHECK_THROWS_AS(gate(all_pairs_distances(cycle(4)), {0, 2}, 1), NotGated);
}

TEST_CASE("gate is the unique nearest vertex when it exists") {
  std::mt19937 rng(3);
  for (int s = 0; s < 20; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Random;
    spec.n = 8;
    spec.seed = 50 + s;
    Graph g = generate(spec).graph;
    auto D = all_pairs_distances(g);
    for (int t = 0; t < 20; ++t) {
      std::vector<Vertex> S;
      for (int v = 0; v < g.n(); ++v)
        if (rng() % 3 == 0) S.push_back(v);
      if (S.empty()) continue;
      for (Vertex x = 0; x < g.n(); ++x) {
        std::vector<Vertex> gates;
        for (Vertex c : S) {
          bool ok = true;
          for (Vertex y : S) ok = ok && D(x, c) + D(c, y) == D(x, y);
          if (ok) gates.push_back(c);
        }
        if (gates.empty()) {
          CHECK_THROWS_AS(gate(D, S, x), NotGated);
        } else {
          REQUIRE(gates.size() == 1);
          CHECK(gate(D, S, x) == gates[0]);
        }
      }
    }
  }
}

TEST_CASE("block-cut tree") {
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto bt = block_cut_tree(bowtie);
  REQUIRE(bt.block_count() == 2);
  CHECK(bt.blocks[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(bt.blocks[1] == std::vector<Vertex>{2, 3, 4});
  CHECK(bt.cut_vertices() == std::vector<Vertex>{2});

  auto tree = block_cut_tree(path(4));
  CHECK(tree.block_count() == 3);
  CHECK(tree.cut_vertices() == std::vector<Vertex>{1, 2});

  auto c6 = block_cut_tree(cycle(6));
  CHECK(c6.block_count() == 1);
  CHECK(c6.cut_vertices().empty());
  CHECK(is_cactus(cycle(6), c6));
  CHECK_FALSE(is_cactus(complete(4), block_cut_tree(complete(4))));
}

TEST_CASE("blocks partition the edges on random cacti") {
  for (int s = 0; s < 40; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Cactus;
    spec.n = 3 + s % 12;
    spec.seed = s;
    Graph g = generate(spec).graph;
    auto bt = block_cut_tree(g);
    int covered = 0;
    for (auto [a, b] : g.edges()) {
      int owners = 0;
      for (const auto& B : bt.blocks)
        if (std::binary_search(B.begin(), B.end(), a) && std::binary_search(B.begin(), B.end(), b)) ++owners;
      CHECK(owners == 1);
      covered += owners;
    }
    CHECK(covered == g.m());
    for (Vertex v = 0; v < g.n(); ++v) CHECK(bt.is_cut[v] == (bt.blocks_of[v].size() >= 2));
  }
}

TEST_CASE("spheres") {
  auto P = all_pairs_distances(path(5));
  CHECK(sphere(P, 0, 2) == std::vector<Vertex>{2});
  CHECK(sphere(all_pairs_distances(star(3)), 0, 1) == std::vector<Vertex>{1, 2, 3});
  CHECK(sphere(all_pairs_distances(cycle(5)), 3, 0) == std::vector<Vertex>{3});
}

TEST_CASE("DFS sphere orders") {
  Graph st = star(3);
  auto so = dfs_sphere_order(st, 1, 2);
  CHECK(so.order == std::vector<Vertex>{2, 3});
  CHECK(so.label[2] == 0);
  CHECK(so.label[3] == 1);
  CHECK(dfs_sphere_order(path(5), 0, 2).order == std::vector<Vertex>{2});
  CHECK(dfs_sphere_order(path(5), 2, 3).order.empty());
}

TEST_CASE("phi on the star") {
  Graph st = star(3);
  auto D = all_pairs_distances(st);
  auto so = dfs_sphere_order(st, 1, 2);
  CHECK(phi(D, so, 2, 1, false) == std::optional<Vertex>(3));
  CHECK(phi(D, so, 3, 1, true) == std::optional<Vertex>(3));
  CHECK_FALSE(phi(D, so, 0, 1, true).has_value());
}

TEST_CASE("sphere traces of balls are circular intervals in trees") {
  for (int s = 0; s < 40; ++s) {
    GenSpec spec;
    spec.cls = GraphClass::Tree;
    spec.n = 2 + s % 11;
    spec.seed = 300 + s;
    Graph t = generate(spec).graph;
    auto D = all_pairs_distances(t);
    for (Vertex root = 0; root < t.n(); ++root)
      for (int r = 0; r + 1 <= t.n(); ++r) {
        auto so = dfs_sphere_order(t, root, r + 1);
        auto sorted = so.order;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == sphere(D, root, r + 1));
        if (so.size() == 0) continue;
        for (Vertex v = 0; v < t.n(); ++v) {
          std::vector<bool> marked(so.size());
          for (int i = 0; i < so.size(); ++i) marked[i] = D(v, so.order[i]) <= r;
          CHECK(is_circular_interval(marked));
        }
      }
  }
}

TEST_CASE("canonical geodesic and diametral pair") {
  auto g = cycle(6);
  auto D = all_pairs_distances(g);
  auto p = canonical_geodesic(g, D, 0, 3);
  REQUIRE(p.size() == 4);
  CHECK(p.front() == 0);
  CHECK(p.back() == 3);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
  CHECK(diametral_pair(D, {0, 2, 3}) == std::pair<Vertex, Vertex>{0, 3});
  CHECK(diametral_pair(D, {4}) == std::pair<Vertex, Vertex>{4, 4});
}
