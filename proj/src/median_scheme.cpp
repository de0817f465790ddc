#include "ballcomp/median_scheme.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ballcomp {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Q3 through v: three neighbors, their square completions, and a common
// neighbor of the completions.
bool has_cube_at(const Graph& g, Vertex v) {
  const auto& nb = g.neighbors(v);
  auto completion = [&](Vertex a, Vertex b) -> Vertex {
    for (Vertex c : g.neighbors(a))
      if (c != v && g.adjacent(c, b)) return c;
    return -1;
  };
  const int k = static_cast<int>(nb.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Vertex ab = completion(nb[i], nb[j]);
      if (ab < 0) continue;
      for (int l = j + 1; l < k; ++l) {
        Vertex ac = completion(nb[i], nb[l]), bc = completion(nb[j], nb[l]);
        if (ac < 0 || bc < 0) continue;
        for (Vertex t : g.neighbors(ab))
          if (t != nb[i] && t != nb[j] && g.adjacent(t, ac) && g.adjacent(t, bc)) return true;
      }
    }
  return false;
}

enum Strip { S1 = 0, S2 = 1, S3 = 2, S4 = 3 };

// Halfplane bounds of R: b <= hb1, a <= ha2, b >= hb3, a >= ha4.
struct Region {
  int b1, a2, b3, a4;
  bool in_strip(int i, const GridPoint& p) const {
    switch (i) {
      case S1: return p.b >= b1;
      case S2: return p.a >= a2;
      case S3: return p.b <= b3;
      default: return p.a <= a4;
    }
  }
  bool inside(const GridPoint& p) const { return p.b <= b1 && p.a <= a2 && p.b >= b3 && p.a >= a4; }
};

// Substrip i' (second = false) or i'' (second = true) of strip i at z.
bool in_substrip(const Region& R, int i, bool second, const GridPoint& z, const GridPoint& p) {
  if (!R.in_strip(i, p)) return false;
  switch (i) {
    case S1: return second ? p.a >= z.a : p.a <= z.a;
    case S2: return second ? p.b <= z.b : p.b >= z.b;
    case S3: return second ? p.a <= z.a : p.a >= z.a;
    default: return second ? p.b >= z.b : p.b <= z.b;
  }
}

// Order for positive constraints: S1', S1'', S2'', S2', S3', S3'', S4'', S4'.
constexpr bool kPositiveSecond[8] = {false, true, true, false, false, true, true, false};
// Order for negative constraints: S1', S1'', S2', S2'', S3', S3'', S4', S4''.
constexpr bool kNegativeSecond[8] = {false, true, false, true, false, true, false, true};

constexpr int kGroups[4] = {2, 4, 8, 8};

}  // namespace

bool is_median_graph(const Graph& g, const DistanceMatrix& D) {
  const int n = g.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v)
      for (Vertex w = v; w < n; ++w) {
        int count = 0;
        for (Vertex z = 0; z < n && count < 2; ++z)
          if (D(u, z) + D(z, v) == D(u, v) && D(v, z) + D(z, w) == D(v, w) && D(w, z) + D(z, u) == D(w, u)) ++count;
        if (count != 1) return false;
      }
  return true;
}

bool is_cube_free_median(const Graph& g, const DistanceMatrix& D) {
  if (!is_median_graph(g, D)) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (has_cube_at(g, v)) return false;
  return true;
}

std::vector<int> theta_classes(const Graph& g, const DistanceMatrix& D) {
  const auto& E = g.edges();
  const int m = g.m();
  UnionFind uf(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = E[i];
      auto [c, d] = E[j];
      if (D(a, c) + D(b, d) != D(a, d) + D(b, c)) uf.unite(i, j);
    }
  std::vector<int> id(m, -1), out(m);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    int r = uf.find(i);
    if (id[r] < 0) id[r] = next++;
    out[i] = id[r];
  }
  return out;
}

GridEmbedding embed_interval(const Graph& g, const DistanceMatrix& D, Vertex u, Vertex v) {
  GridEmbedding E;
  E.u = u;
  E.v = v;
  E.interval = interval(D, u, v);
  E.coord.assign(g.n(), std::nullopt);

  const auto& edges = g.edges();
  const std::vector<int> cls = theta_classes(g, D);
  const int k = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  // Representative edge per class; side(c, z) is true when z is nearer the second end.
  std::vector<int> rep(k, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (rep[cls[i]] < 0) rep[cls[i]] = i;
  auto side = [&](int c, Vertex z) {
    auto [a, b] = edges[rep[c]];
    return D(z, b) < D(z, a);
  };

  std::vector<int> sep;
  for (int c = 0; c < k; ++c)
    if (side(c, u) != side(c, v)) sep.push_back(c);
  const int s = static_cast<int>(sep.size());

  std::vector<std::vector<int>> cross(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      bool seen[2][2] = {};
      for (Vertex z : E.interval) seen[side(sep[i], z)][side(sep[j], z)] = true;
      if (seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1]) {
        cross[i].push_back(j);
        cross[j].push_back(i);
      }
    }

  // Smallest edge index on the canonical geodesic per separating class.
  std::vector<int> first_edge(s, static_cast<int>(edges.size()));
  const std::vector<Vertex> path = canonical_geodesic(g, D, u, v);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Edge e{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
    int idx = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    for (int j = 0; j < s; ++j)
      if (sep[j] == cls[idx]) first_edge[j] = std::min(first_edge[j], idx);
  }

  std::vector<int> color(s, -1);
  std::vector<bool> done(s, false);
  for (int start = 0; start < s; ++start) {
    if (done[start]) continue;
    std::vector<int> comp{start};
    done[start] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int j : cross[comp[h]])
        if (!done[j]) {
          done[j] = true;
          comp.push_back(j);
        }
    int root = *std::min_element(comp.begin(), comp.end(), [&](int x, int y) { return first_edge[x] < first_edge[y]; });
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int j : cross[queue[h]]) {
        if (color[j] < 0) {
          color[j] = 1 - color[queue[h]];
          queue.push_back(j);
        } else if (color[j] == color[queue[h]]) {
          throw SchemeError(ErrorKind::NotMedian, "crossing classes of I(" + std::to_string(u) + "," +
                                                      std::to_string(v) + ") are not 2-colorable");
        }
      }
  }

  for (Vertex z : E.interval) {
    GridPoint p;
    for (int j = 0; j < s; ++j)
      if (side(sep[j], z) != side(sep[j], u)) (color[j] == 0 ? p.a : p.b)++;
    E.coord[z] = p;
  }
  for (Vertex z : E.interval)
    for (Vertex t : E.interval)
      if (std::abs(E.at(z).a - E.at(t).a) + std::abs(E.at(z).b - E.at(t).b) != D(z, t))
        throw SchemeError(ErrorKind::NotMedian, "interval embedding is not isometric");
  return E;
}

CfMedianScheme::CfMedianScheme(GraphMetric g) : Scheme(std::move(g)) {
  if (!is_cube_free_median(gm_.graph, gm_.dist)) throw SchemeError(ErrorKind::NotMedian, "graph is not cube-free median");
  family_ = enumerate_balls(gm_.dist);
}

const GridEmbedding& CfMedianScheme::embedding(Vertex u, Vertex v) const {
  auto it = cache_.find({u, v});
  if (it == cache_.end()) it = cache_.emplace(std::pair{u, v}, embed_interval(gm_.graph, gm_.dist, u, v)).first;
  return it->second;
}

Vertex CfMedianScheme::interval_gate(const GridEmbedding& E, Vertex z) const {
  return gate(gm_.dist, E.interval, z);
}

namespace {

struct Decoded {
  Region R;
  std::vector<Vertex> candidates;  // R0 in (a, b) order
  std::vector<char> in_r1, in_r2;  // per interval vertex index
  std::vector<int> r1, r2;
};

}  // namespace

static Decoded decode_regions(const CfMedianScheme& s, const GridEmbedding& E, const CompressedSample& Y) {
  const auto& D = s.metric().dist;
  auto g = [&](std::size_t i) { return E.at(gate(D, E.interval, Y.vertex(i))); };
  Decoded out;
  // A missing w_i leaves its halfplane undefined and its strip empty.
  constexpr int kFar = std::numeric_limits<int>::max() / 2;
  out.R = Region{Y.filled(2) ? g(2).b : kFar, Y.filled(3) ? g(3).a : kFar, Y.filled(4) ? g(4).b : -kFar,
                 Y.filled(5) ? g(5).a : -kFar};

  std::vector<Vertex> order = E.interval;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return E.at(x) < E.at(y); });
  for (Vertex y : order) {
    const GridPoint& p = E.at(y);
    if (!out.R.inside(p)) continue;
    bool ok1 = true, ok2 = true;
    int r1 = std::max(D(y, Y.vertex(0)), D(y, Y.vertex(1)));
    for (int k = 0; k < 8; ++k) {
      if (Y.filled(6 + k)) {
        ok1 = ok1 && in_substrip(out.R, k / 2, kPositiveSecond[k], p, g(6 + k));
        r1 = std::max(r1, D(y, Y.vertex(6 + k)));
      }
    }
    int r2 = s.metric().diam;
    for (int k = 0; k < 8; ++k) {
      if (Y.filled(14 + k)) {
        ok2 = ok2 && in_substrip(out.R, k / 2, kNegativeSecond[k], p, g(14 + k));
        r2 = std::min(r2, D(y, Y.vertex(14 + k)) - 1);
      }
    }
    out.in_r1.push_back(ok1);
    out.in_r2.push_back(ok2);
    out.r1.push_back(r1);
    out.r2.push_back(r2);
    if (ok1 && ok2 && r2 >= r1) out.candidates.push_back(y);
  }
  return out;
}

CompressedSample CfMedianScheme::compress(const Sample& X) const {
  const auto& D = gm_.dist;
  auto ball = first_realizing(X, family_);
  if (!ball) throw SchemeError(ErrorKind::NotRealizable, "sample is not realizable by a ball");
  CompressedSample Y({kGroups[0], kGroups[1], kGroups[2], kGroups[3]});
  const auto pos = X.positives();
  if (pos.size() <= 1) {
    if (pos.size() == 1) Y.set(0, pos[0], Sign::Pos);
    return Y;
  }

  auto [up, vp] = diametral_pair(D, pos);
  const GridEmbedding& E = embedding(up, vp);
  const Vertex x = interval_gate(E, ball->center);
  const int r = ball->radius - D(ball->center, x);
  const GridPoint px = E.at(x);
  Y.set(0, up, Sign::Pos);
  Y.set(1, vp, Sign::Pos);

  const auto support = X.support();
  std::vector<GridPoint> gp(n());
  for (Vertex w : support) gp[w] = E.at(interval_gate(E, w));

  // Second part: extremal gates of X1..X4.
  Vertex w[4] = {-1, -1, -1, -1};
  auto better = [&](int i, Vertex c) {
    if (w[i] < 0) return true;
    switch (i) {
      case S1: return gp[c].b < gp[w[i]].b;
      case S2: return gp[c].a < gp[w[i]].a;
      case S3: return gp[c].b > gp[w[i]].b;
      default: return gp[c].a > gp[w[i]].a;
    }
  };
  for (Vertex c : support) {
    if (gp[c].b >= px.b && better(S1, c)) w[S1] = c;
    if (gp[c].a >= px.a && better(S2, c)) w[S2] = c;
    if (gp[c].b <= px.b && better(S3, c)) w[S3] = c;
    if (gp[c].a <= px.a && better(S4, c)) w[S4] = c;
  }
  for (int i = 0; i < 4; ++i) Y.set(2 + i, w[i], X[w[i]]);
  const Region R{gp[w[S1]].b, gp[w[S2]].a, gp[w[S3]].b, gp[w[S4]].a};

  // Third part: s_i furthest in the first substrip, t_i nearest coordinate in the second.
  for (int i = 0; i < 4; ++i) {
    const bool s_second = kPositiveSecond[2 * i], t_second = kPositiveSecond[2 * i + 1];
    Vertex sv = -1, tv = -1;
    auto coord_gap = [&](Vertex c) { return i % 2 == 0 ? std::abs(gp[c].a - px.a) : std::abs(gp[c].b - px.b); };
    for (Vertex c : pos) {
      if (in_substrip(R, i, s_second, px, gp[c]) && (sv < 0 || D(x, c) > D(x, sv))) sv = c;
      if (in_substrip(R, i, t_second, px, gp[c]) && (tv < 0 || coord_gap(c) < coord_gap(tv))) tv = c;
    }
    if (sv >= 0) Y.set(6 + 2 * i, sv, Sign::Pos);
    if (tv >= 0) Y.set(7 + 2 * i, tv, Sign::Pos);
  }

  // Fourth part: closest negatives per substrip.
  for (int k = 0; k < 8; ++k) {
    Vertex best = -1;
    for (Vertex c : X.negatives())
      if (in_substrip(R, k / 2, kNegativeSecond[k], px, gp[c]) && (best < 0 || D(x, c) < D(x, best))) best = c;
    if (best >= 0) Y.set(14 + k, best, Sign::Neg);
  }

  if (check_) {
    if (!consistent(Ball::make(D, x, r).members, X))
      throw SchemeError(ErrorKind::InvariantViolated, "gate projection of the realizing ball fails");
    Decoded dec = decode_regions(*this, E, Y);
    std::vector<Vertex> order = E.interval;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return E.at(a) < E.at(b); });
    std::size_t idx = 0;
    bool x_seen = false;
    for (Vertex y : order) {
      if (!dec.R.inside(E.at(y))) continue;
      if (dec.in_r1[idx])
        for (Vertex c : pos)
          if (D(y, c) > dec.r1[idx]) throw SchemeError(ErrorKind::InvariantViolated, "positive claim fails");
      if (dec.in_r2[idx])
        for (Vertex c : X.negatives())
          if (D(y, c) <= dec.r2[idx]) throw SchemeError(ErrorKind::InvariantViolated, "negative claim fails");
      if (y == x) x_seen = dec.in_r1[idx] && dec.in_r2[idx] && dec.r1[idx] <= r && r <= dec.r2[idx];
      ++idx;
    }
    if (!x_seen) throw SchemeError(ErrorKind::InvariantViolated, "reference center is not in R0");
  }
  return Y;
}

Ball CfMedianScheme::reconstruct(const CompressedSample& Y) const {
  if (Y.size() != 22) throw SchemeError(ErrorKind::MalformedInput, "expected 22 coordinates");
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (Y.filled(i) && (Y.vertex(i) < 0 || Y.vertex(i) >= n()))
      throw SchemeError(ErrorKind::MalformedInput, "vertex out of range");
  if (!Y.filled(0)) {
    if (Y.support() != 0) throw SchemeError(ErrorKind::MalformedInput, "missing first coordinate");
    return Ball::empty_ball(n());
  }
  if (!Y.filled(1)) return Ball::make(gm_.dist, Y.vertex(0), 0);
  const GridEmbedding& E = embedding(Y.vertex(0), Y.vertex(1));
  Decoded dec = decode_regions(*this, E, Y);
  if (dec.candidates.empty()) throw SchemeError(ErrorKind::MalformedInput, "empty candidate region");
  const Vertex y = dec.candidates.front();
  std::size_t idx = 0;
  std::vector<Vertex> order = E.interval;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return E.at(a) < E.at(b); });
  for (Vertex z : order) {
    if (!dec.R.inside(E.at(z))) continue;
    if (z == y) break;
    ++idx;
  }
  return Ball::make(gm_.dist, y, dec.r2[idx]);
}

}  // namespace ballcomp
