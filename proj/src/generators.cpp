#include "ballcomp/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "ballcomp/blocks.hpp"
#include "ballcomp/median_scheme.hpp"

namespace ballcomp {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Edge> relabel(std::vector<Edge> e, int n, Rng& rng, std::vector<Vertex>* perm_out = nullptr) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : e) {
    a = perm[a];
    b = perm[b];
    if (a > b) std::swap(a, b);
  }
  if (perm_out) *perm_out = perm;
  return e;
}

Instance tree(const GenSpec& s, Rng& rng) {
  std::vector<Edge> e;
  for (int i = 1; i < s.n; ++i) e.push_back({uniform(rng, 0, i - 1), i});
  return {Graph(s.n, e), {}, {}, {}};
}

// Random tree skeleton; each node becomes a single vertex or a cycle, and
// each skeleton edge joins random vertices of its two nodes.
Instance cactus(const GenSpec& s, Rng& rng) {
  std::vector<std::vector<Vertex>> nodes;
  std::vector<Edge> e;
  int n = 0;
  while (n < s.n) {
    int room = s.n - n;
    int len = room >= 3 && uniform(rng, 0, 1) ? uniform(rng, 3, std::min(room, 7)) : 1;
    std::vector<Vertex> node(len);
    std::iota(node.begin(), node.end(), n);
    n += len;
    for (int i = 0; len >= 3 && i < len; ++i) e.push_back({node[i], node[(i + 1) % len]});
    nodes.push_back(std::move(node));
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& parent = nodes[uniform(rng, 0, static_cast<int>(i) - 1)];
    Vertex a = parent[uniform(rng, 0, static_cast<int>(parent.size()) - 1)];
    Vertex b = nodes[i][uniform(rng, 0, static_cast<int>(nodes[i].size()) - 1)];
    e.push_back({a, b});
  }
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  e = relabel(e, n, rng);
  return {Graph(n, e), {}, {}, {}};
}

// Grid rectangles glued along convex paths (a vertex, or a geodesic whose
// interval is the path itself) of the graph built so far.
Instance cfmedian(const GenSpec& s, Rng& rng) {
  if (s.rows > 0 && s.cols > 0) return {grid_graph(s.rows, s.cols), {}, {}, {}};
  for (;;) {
    std::vector<Edge> e;
    int n = 0;
    while (n < s.n) {
      int r = uniform(rng, 1, 3), c = uniform(rng, 1, 4);
      std::vector<Vertex> map;
      if (n == 0) {
        while (r * c > s.n) (r >= c ? r : c)--;
        map.assign(r * c, -1);
      } else {
        Graph g(n, e);
        DistanceMatrix D = all_pairs_distances(g);
        // Convex paths of length c - 1 in the current graph.
        std::vector<std::vector<Vertex>> paths;
        for (Vertex a = 0; a < n; ++a)
          for (Vertex b = 0; b < n; ++b)
            if (D(a, b) == c - 1 && static_cast<int>(interval(D, a, b).size()) == c)
              paths.push_back(canonical_geodesic(g, D, a, b));
        if (r == 1 || paths.empty() || n + (r - 1) * c > s.n) {
          // Pendant path glued at one vertex.
          const int len = std::min(c, s.n - n);
          Vertex prev = uniform(rng, 0, n - 1);
          for (int j = 0; j < len; ++j) {
            e.push_back({prev, n});
            prev = n++;
          }
          continue;
        }
        const auto& path = paths[uniform(rng, 0, static_cast<int>(paths.size()) - 1)];
        map.assign(r * c, -1);
        for (int j = 0; j < c; ++j) map[j] = path[j];
      }
      for (Vertex& v : map)
        if (v < 0) v = n++;
      Graph piece = grid_graph(r, c);
      for (auto [a, b] : piece.edges()) e.push_back({std::min(map[a], map[b]), std::max(map[a], map[b])});
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    e = relabel(e, n, rng);
    Graph g(n, e);
    if (is_cube_free_median(g, all_pairs_distances(g))) return {g, {}, {}, {}};
  }
}

Instance interval(const GenSpec& s, Rng& rng) {
  for (;;) {
    std::vector<int> pts(2 * s.n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    IntervalRepresentation rep;
    for (int v = 0; v < s.n; ++v) {
      int a = std::min(pts[2 * v], pts[2 * v + 1]), b = std::max(pts[2 * v], pts[2 * v + 1]);
      rep.segments.push_back({Rational(a), Rational(b)});
    }
    std::vector<Edge> e;
    for (Vertex u = 0; u < s.n; ++u)
      for (Vertex v = u + 1; v < s.n; ++v)
        if (!(rep.e(u) < rep.s(v) || rep.e(v) < rep.s(u))) e.push_back({u, v});
    if (!is_connected(s.n, e)) continue;
    return {Graph(s.n, e), rep, {}, {}};
  }
}

Instance split(const GenSpec& s, Rng& rng) {
  const int k = uniform(rng, 1, s.n);
  std::vector<Edge> e;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) e.push_back({a, b});
  for (Vertex v = k; v < s.n; ++v) {
    std::vector<Vertex> nb;
    for (Vertex a = 0; a < k; ++a)
      if (uniform(rng, 0, 1)) nb.push_back(a);
    if (nb.empty()) nb.push_back(uniform(rng, 0, k - 1));
    for (Vertex a : nb) e.push_back({a, v});
  }
  e = relabel(e, s.n, rng);
  return {Graph(s.n, e), {}, {}, {}};
}

Instance with_coordinates(int n, std::vector<Edge> e, std::vector<std::pair<double, double>> xy) {
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  Graph g(n, e);
  RotationSystem rot = rotation_from_coordinates(g, xy);
  return {g, {}, rot, xy};
}

Instance planar(const GenSpec& s, Rng& rng) {
  const double pi = std::acos(-1.0);
  std::vector<Edge> e;
  std::vector<std::pair<double, double>> xy;
  switch (s.planar) {
    case PlanarFamily::Wheel: {
      const int k = s.n - 1;
      if (k < 3) throw SchemeError(ErrorKind::UnsupportedSpec, "wheel needs n >= 4");
      xy.push_back({0, 0});
      for (int i = 0; i < k; ++i) {
        xy.push_back({std::cos(2 * pi * i / k), std::sin(2 * pi * i / k)});
        e.push_back({0, 1 + i});
        e.push_back({1 + i, 1 + (i + 1) % k});
      }
      return with_coordinates(s.n, e, xy);
    }
    case PlanarFamily::Grid: {
      int r = s.rows > 0 ? s.rows : 2, c = s.cols > 0 ? s.cols : std::max(1, s.n / r);
      Graph g = grid_graph(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) xy.push_back({static_cast<double>(j), static_cast<double>(i)});
      return with_coordinates(g.n(), g.edges(), xy);
    }
    case PlanarFamily::StackedSquares: {
      const int layers = std::max(1, s.n / 4);
      for (int l = 0; l < layers; ++l)
        for (int i = 0; i < 4; ++i) {
          double rad = 1.0 + l;
          xy.push_back({rad * std::cos(pi / 4 + pi / 2 * i), rad * std::sin(pi / 4 + pi / 2 * i)});
          e.push_back({4 * l + i, 4 * l + (i + 1) % 4});
          if (l > 0) e.push_back({4 * (l - 1) + i, 4 * l + i});
        }
      return with_coordinates(4 * layers, e, xy);
    }
    case PlanarFamily::StackedTriangulation: {
      if (s.n < 3) throw SchemeError(ErrorKind::UnsupportedSpec, "stacked triangulation needs n >= 3");
      xy = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
      e = {{0, 1}, {1, 2}, {0, 2}};
      std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
      for (Vertex v = 3; v < s.n; ++v) {
        int f = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
        auto [a, b, c] = faces[f];
        xy.push_back({(xy[a].first + xy[b].first + xy[c].first) / 3, (xy[a].second + xy[b].second + xy[c].second) / 3});
        e.push_back({a, v});
        e.push_back({b, v});
        e.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
      }
      return with_coordinates(s.n, e, xy);
    }
  }
  throw SchemeError(ErrorKind::UnsupportedSpec, "unknown planar family");
}

Instance random_graph(const GenSpec& s, Rng& rng) {
  std::bernoulli_distribution coin(s.density);
  for (;;) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < s.n; ++u)
      for (Vertex v = u + 1; v < s.n; ++v)
        if (coin(rng)) e.push_back({u, v});
    if (is_connected(s.n, e)) return {Graph(s.n, e), {}, {}, {}};
  }
}

}  // namespace

GraphClass parse_graph_class(const std::string& name) {
  static const std::vector<std::pair<std::string, GraphClass>> names{
      {"tree", GraphClass::Tree},         {"cycle", GraphClass::Cycle},   {"cactus", GraphClass::Cactus},
      {"cfmedian", GraphClass::CfMedian}, {"interval", GraphClass::Interval}, {"split", GraphClass::Split},
      {"planar-rot", GraphClass::PlanarRot}, {"planar", GraphClass::PlanarRot}, {"random", GraphClass::Random}};
  for (const auto& [k, c] : names)
    if (k == name) return c;
  throw SchemeError(ErrorKind::UnsupportedSpec, "unknown class " + name);
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Cactus: return "cactus";
    case GraphClass::CfMedian: return "cfmedian";
    case GraphClass::Interval: return "interval";
    case GraphClass::Split: return "split";
    case GraphClass::PlanarRot: return "planar-rot";
    case GraphClass::Random: return "random";
  }
  return "?";
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> e;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) e.push_back({i * cols + j, i * cols + j + 1});
      if (i + 1 < rows) e.push_back({i * cols + j, (i + 1) * cols + j});
    }
  return Graph(rows * cols, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph(n, e);
}

Instance generate(const GenSpec& spec) {
  if (spec.n < 1) throw SchemeError(ErrorKind::UnsupportedSpec, "n must be positive");
  Rng rng(spec.seed);
  switch (spec.cls) {
    case GraphClass::Tree: return tree(spec, rng);
    case GraphClass::Cycle:
      if (spec.n < 3) throw SchemeError(ErrorKind::UnsupportedSpec, "cycle needs n >= 3");
      return {cycle_graph(spec.n), {}, {}, {}};
    case GraphClass::Cactus: return cactus(spec, rng);
    case GraphClass::CfMedian: return cfmedian(spec, rng);
    case GraphClass::Interval: return interval(spec, rng);
    case GraphClass::Split: return split(spec, rng);
    case GraphClass::PlanarRot: return planar(spec, rng);
    case GraphClass::Random: return random_graph(spec, rng);
  }
  throw SchemeError(ErrorKind::UnsupportedSpec, "unknown class");
}

Sample SplitReduction::translate(const Sample& over_ground) const {
  Sample X(graph.n());
  for (Vertex v = 0; v < ground; ++v) X.set(v, over_ground[v]);
  return X;
}

SplitReduction concept_to_split_graph(int ground, const std::vector<VertexSet>& concepts) {
  if (ground < 1 || concepts.empty()) throw SchemeError(ErrorKind::UnsupportedSpec, "empty ground set or concept class");
  SplitReduction red;
  red.ground = ground;
  std::set<VertexSet> seen;
  for (const auto& c : concepts) {
    if (static_cast<int>(c.size()) != ground) throw SchemeError(ErrorKind::UnsupportedSpec, "concept size mismatch");
    if (std::none_of(c.begin(), c.end(), [](bool b) { return b; }))
      throw SchemeError(ErrorKind::UnsupportedSpec, "empty concept gives an isolated vertex");
    if (seen.insert(c).second) red.concepts.push_back(c);
  }
  std::vector<Edge> e;
  for (Vertex a = 0; a < ground; ++a)
    for (Vertex b = a + 1; b < ground; ++b) e.push_back({a, b});
  Vertex next = ground;
  for (const auto& c : red.concepts) {
    for (Vertex a = 0; a < ground; ++a)
      if (c[a]) e.push_back({a, next});
    red.concept_vertex.push_back(next++);
  }
  red.graph = Graph(next, e);
  red.partition.in_clique.assign(next, false);
  for (Vertex a = 0; a < ground; ++a) {
    red.partition.S.push_back(a);
    red.partition.in_clique[a] = true;
  }
  red.partition.I = red.concept_vertex;
  return red;
}

}  // namespace ballcomp
