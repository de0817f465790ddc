#include "ballcomp/tree_schemes.hpp"

#include <algorithm>

namespace ballcomp {

bool is_tree(const Graph& g) { return g.m() == g.n() - 1; }

namespace {

void require_tree(const GraphMetric& t) {
  if (!is_tree(t.graph)) throw SchemeError(ErrorKind::UnsupportedSpec, "graph is not a tree");
}

CompressedSample pair_slots() { return CompressedSample({2}); }

}  // namespace

// ---------------------------------------------------------------- USCS

std::vector<Vertex> tree_uscs_compress(const GraphMetric& t, const Sample& X) {
  auto pos = X.positives();
  if (pos.size() <= 1) return pos;
  auto [u, v] = diametral_pair(t.dist, pos);
  return {u, v};
}

MetricBall tree_uscs_reconstruct(const GraphMetric& t, const std::vector<Vertex>& Y) {
  MetricBall mb;
  mb.trace.assign(t.n(), false);
  if (Y.empty()) return mb;
  if (Y.size() > 2) throw SchemeError(ErrorKind::MalformedInput, "more than two vertices");
  Vertex u = Y.front(), v = Y.back();
  int d = t.d(u, v);
  auto path = canonical_geodesic(t.graph, t.dist, u, v);
  mb.a = path[d / 2];
  mb.b = path[(d + 1) / 2];
  mb.twice_radius = d;
  // Distance to an edge midpoint is min over endpoints plus one half.
  for (Vertex z = 0; z < t.n(); ++z) {
    int twice = mb.a == mb.b ? 2 * t.d(z, mb.a) : 2 * std::min(t.d(z, mb.a), t.d(z, mb.b)) + 1;
    mb.trace[z] = twice <= mb.twice_radius;
  }
  return mb;
}

TreeUscs::TreeUscs(GraphMetric t) : Scheme(std::move(t)) {
  require_tree(gm_);
  family_ = enumerate_balls(gm_.dist);
}

CompressedSample TreeUscs::compress(const Sample& X) const {
  if (!first_realizing(X, family_)) throw SchemeError(ErrorKind::NotRealizable, X.to_string());
  CompressedSample Y = pair_slots();
  auto vs = tree_uscs_compress(gm_, X);
  for (std::size_t i = 0; i < vs.size(); ++i) Y.set(i, vs[i], Sign::Pos);
  return Y;
}

Ball TreeUscs::reconstruct(const CompressedSample& Y) const {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (Y.filled(i)) vs.push_back(Y.vertex(i));
  MetricBall mb = tree_uscs_reconstruct(gm_, vs);
  if (mb.empty()) return Ball::empty_ball(n());
  return Ball{mb.a, mb.twice_radius / 2, mb.trace};
}

// ---------------------------------------------------------------- LSCS

TreeLscs::TreeLscs(GraphMetric t) : Scheme(std::move(t)) {
  require_tree(gm_);
  family_ = enumerate_balls(gm_.dist);
}

CompressedSample TreeLscs::compress(const Sample& X) const {
  if (!first_realizing(X, family_)) throw SchemeError(ErrorKind::NotRealizable, X.to_string());
  CompressedSample Y = pair_slots();
  auto pos = X.positives();
  if (pos.size() <= 1) {
    if (!pos.empty()) Y.set(0, pos[0], Sign::Pos);
    return Y;
  }
  auto [u, v] = diametral_pair(gm_.dist, pos);
  int duv = d(u, v);
  int r = (duv + 1) / 2;
  auto path = canonical_geodesic(gm_.graph, gm_.dist, u, v);
  Vertex x = path[duv / 2], y = path[r];
  Ball bx = Ball::make(gm_.dist, x, r), by = Ball::make(gm_.dist, y, r);
  bool rx = realizes(bx, X), ry = realizes(by, X);
  if (rx && ry) {
    Y.set(0, u, Sign::Pos);
    Y.set(1, v, Sign::Pos);
    return Y;
  }
  if (!rx && !ry) throw SchemeError(ErrorKind::InvariantViolated, "neither middle ball realizes " + X.to_string());
  // The realizing side keeps its endpoint; the witness is a negative in the
  // other ball only.
  Vertex keep = rx ? u : v;
  const Ball& good = rx ? bx : by;
  const Ball& bad = rx ? by : bx;
  for (Vertex w : X.negatives()) {
    if (bad.contains(w) && !good.contains(w)) {
      if (d(keep, w) != 2 * r) throw SchemeError(ErrorKind::InvariantViolated, "witness not at distance 2r");
      Y.set(0, keep, Sign::Pos);
      Y.set(1, w, Sign::Neg);
      return Y;
    }
  }
  throw SchemeError(ErrorKind::InvariantViolated, "no negative witness for " + X.to_string());
}

Ball TreeLscs::reconstruct(const CompressedSample& Y) const {
  auto pos = Y.positives();
  auto neg = Y.negatives();
  if (pos.empty() && neg.empty()) return Ball::empty_ball(n());
  if (pos.size() == 1 && neg.empty()) return Ball::make(gm_.dist, pos[0], 0);
  if (pos.size() == 2 && neg.empty()) {
    int r = (d(pos[0], pos[1]) + 1) / 2;
    for (Vertex c = 0; c < n(); ++c)
      if (d(c, pos[0]) <= r && d(c, pos[1]) <= r) return Ball::make(gm_.dist, c, r);
  }
  if (pos.size() == 1 && neg.size() == 1) {
    Vertex u = pos[0], w = neg[0];
    int dw = d(u, w);
    if (dw % 2) throw SchemeError(ErrorKind::MalformedInput, "odd distance in (+u,-w)");
    int r = dw / 2;
    auto path = canonical_geodesic(gm_.graph, gm_.dist, u, w);
    return Ball::make(gm_.dist, path[r - 1], r);
  }
  throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
}

// ---------------------------------------------------------------- fixed radius

TreeFixedRadiusBase::TreeFixedRadiusBase(GraphMetric t, int r, NoPositives mode)
    : Scheme(std::move(t)), r_(r), mode_(mode) {
  require_tree(gm_);
  if (r < 0) throw SchemeError(ErrorKind::UnsupportedSpec, "negative radius");
  family_ = enumerate_balls(gm_.dist, r);
  for (Vertex s = 0; s < n(); ++s) orders_.push_back(dfs_sphere_order(gm_.graph, s, r + 1));
}

void TreeFixedRadiusBase::require_realizable(const Sample& X) const {
  if (!first_realizing(X, family_)) throw SchemeError(ErrorKind::NotRealizable, X.to_string());
}

bool TreeFixedRadiusBase::all_containing_balls_realize(const Sample& X) const {
  auto pos = X.positives();
  auto neg = X.negatives();
  for (Vertex x = 0; x < n(); ++x) {
    bool contains = std::all_of(pos.begin(), pos.end(), [&](Vertex p) { return d(x, p) <= r_; });
    if (!contains) continue;
    for (Vertex q : neg)
      if (d(x, q) <= r_) return false;
  }
  return true;
}

std::optional<Vertex> TreeFixedRadiusBase::sphere_case(const Sample& X) const {
  for (Vertex s : X.negatives()) {
    const auto& so = orders_[s];
    if (so.size() == 0) continue;
    bool all = std::all_of(so.order.begin(), so.order.end(), [&](Vertex x) { return realizes(r_ball(x), X); });
    if (all) return s;
  }
  return std::nullopt;
}

std::optional<Vertex> TreeFixedRadiusBase::designated_center(Vertex s, Vertex t, bool t_positive) const {
  return phi(gm_.dist, orders_[s], t, r_, t_positive);
}

std::vector<TreeFixedRadiusBase::Designation> TreeFixedRadiusBase::designators(const Sample& X) const {
  std::vector<Designation> out;
  for (Vertex s : X.negatives()) {
    for (Vertex t : X.support()) {
      if (t == s) continue;
      auto y = designated_center(s, t, X.pos(t));
      if (y && realizes(r_ball(*y), X)) out.push_back({s, t, *y});
    }
  }
  return out;
}

std::optional<Ball> TreeFixedRadiusBase::any_ball(const std::vector<Vertex>& inside,
                                                  const std::vector<Vertex>& outside) const {
  for (Vertex x = 0; x < n(); ++x) {
    bool ok = std::all_of(inside.begin(), inside.end(), [&](Vertex p) { return d(x, p) <= r_; }) &&
              std::none_of(outside.begin(), outside.end(), [&](Vertex q) { return d(x, q) <= r_; });
    if (ok) return r_ball(x);
  }
  return std::nullopt;
}

CompressedSample TreeFixedRadius::compress(const Sample& X) const {
  require_realizable(X);
  CompressedSample Y = pair_slots();
  auto pos = X.positives();
  if (pos.empty() && mode_ == NoPositives::EmptyBall) return Y;
  if (all_containing_balls_realize(X)) {
    if (!pos.empty()) {
      auto [u, v] = diametral_pair(gm_.dist, pos);
      Y.set(0, u, Sign::Pos);
      if (v != u) Y.set(1, v, Sign::Pos);
    }
    return Y;
  }
  if (auto s = sphere_case(X)) {
    Y.set(0, *s, Sign::Neg);
    return Y;
  }
  auto des = designators(X);
  if (des.empty()) throw SchemeError(ErrorKind::InvariantViolated, "no center designator for " + X.to_string());
  Y.set(0, des[0].s, Sign::Neg);
  Y.set(1, des[0].t, X[des[0].t]);
  return Y;
}

Ball TreeFixedRadius::reconstruct(const CompressedSample& Y) const {
  if (!Y.filled(0)) {
    if (Y.filled(1)) throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
    if (mode_ == NoPositives::EmptyBall) return Ball::empty_ball(n());
    return *any_ball({}, {});
  }
  if (Y.sign(0) == Sign::Pos) {
    std::vector<Vertex> inside{Y.vertex(0)};
    if (Y.filled(1)) {
      if (Y.sign(1) != Sign::Pos) throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
      inside.push_back(Y.vertex(1));
    }
    if (auto b = any_ball(inside, {})) return *b;
    throw SchemeError(ErrorKind::MalformedInput, "no r-ball contains " + Y.to_string());
  }
  Vertex s = Y.vertex(0);
  if (!Y.filled(1)) {
    const auto& so = orders_[s];
    if (so.size() == 0) throw SchemeError(ErrorKind::MalformedInput, "empty sphere around " + std::to_string(s));
    return r_ball(*std::min_element(so.order.begin(), so.order.end()));
  }
  auto y = designated_center(s, Y.vertex(1), Y.sign(1) == Sign::Pos);
  if (!y) throw SchemeError(ErrorKind::MalformedInput, "undefined designator " + Y.to_string());
  return r_ball(*y);
}

// ---------------------------------------------------------------- no extra information

namespace {

CompressedSample as_set(const std::vector<SignedVertex>& items) {
  auto sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const SignedVertex& a, const SignedVertex& b) { return a.v < b.v; });
  CompressedSample Y({6});
  for (std::size_t i = 0; i < sorted.size(); ++i) Y.set(i, sorted[i].v, sorted[i].sign);
  return Y;
}

}  // namespace

std::pair<CompressedSample, int> TreeFixedRadiusNoInfo::compress_traced(const Sample& X) const {
  require_realizable(X);
  auto pos = X.positives();
  auto neg = X.negatives();
  auto P = [](Vertex v) { return SignedVertex{v, Sign::Pos}; };
  auto N = [](Vertex v) { return SignedVertex{v, Sign::Neg}; };
  if (pos.empty() && mode_ == NoPositives::EmptyBall) return {as_set({}), 0};
  if (all_containing_balls_realize(X)) {
    std::vector<SignedVertex> items;
    if (!pos.empty()) {
      auto [u, v] = diametral_pair(gm_.dist, pos);
      items.push_back(P(u));
      if (v != u) items.push_back(P(v));
    }
    return {as_set(items), 0};
  }
  if (auto s = sphere_case(X)) return {as_set({N(*s)}), 0};
  auto des = designators(X);
  if (des.empty()) throw SchemeError(ErrorKind::InvariantViolated, "no center designator for " + X.to_string());
  for (const auto& dsg : des)
    if (X.pos(dsg.t)) return {as_set({N(dsg.s), P(dsg.t)}), 0};

  // Only negative designators remain; ℓ' is the vertex id.
  const int xn = static_cast<int>(neg.size());
  auto between = [&](Vertex lo, Vertex hi) {
    return static_cast<int>(std::count_if(neg.begin(), neg.end(), [&](Vertex q) { return lo < q && q < hi; }));
  };
  // (1)
  const int support = static_cast<int>(pos.size() + neg.size());
  for (const auto& dsg : des)
    if (dsg.s < dsg.t || support == 2) return {as_set({N(dsg.s), N(dsg.t)}), 1};
  // (2)
  if (!pos.empty()) return {as_set({N(des[0].s), N(des[0].t), P(pos.front())}), 2};
  // (3)
  for (const auto& dsg : des) {
    for (Vertex p : neg)
      if (p > dsg.s || (xn == 3 && p != dsg.s && p != dsg.t))
        return {as_set({N(dsg.s), N(dsg.t), N(p)}), 3};
  }
  // (4) from here the designated s is the largest negative.
  for (const auto& dsg : des) {
    if (between(dsg.t, dsg.s) >= 2) {
      std::vector<SignedVertex> items{N(dsg.s), N(dsg.t)};
      for (Vertex q : neg)
        if (dsg.t < q && q < dsg.s && items.size() < 4) items.push_back(N(q));
      return {as_set(items), 4};
    }
  }
  if (xn == 4) return {as_set({N(neg[0]), N(neg[1]), N(neg[2]), N(neg[3])}), 4};
  // (5)
  for (const auto& dsg : des) {
    int below = static_cast<int>(std::count_if(neg.begin(), neg.end(), [&](Vertex q) { return q < dsg.t; }));
    if (between(dsg.t, dsg.s) >= 1 && below >= 2) {
      std::vector<SignedVertex> items{N(dsg.s), N(dsg.t)};
      for (Vertex q : neg)
        if (dsg.t < q && q < dsg.s) {
          items.push_back(N(q));
          break;
        }
      int added = 0;
      for (Vertex q : neg)
        if (q < dsg.t && added < 2) {
          items.push_back(N(q));
          ++added;
        }
      return {as_set(items), 5};
    }
  }
  if (xn == 5) {
    std::vector<SignedVertex> items;
    for (Vertex q : neg) items.push_back(N(q));
    return {as_set(items), 5};
  }
  // (6)
  for (const auto& dsg : des) {
    if (between(dsg.t, dsg.s) != 0) continue;
    std::vector<SignedVertex> items{N(dsg.s), N(dsg.t)};
    for (Vertex q : neg)
      if (q < dsg.t && items.size() < 6) items.push_back(N(q));
    if (items.size() == 6) return {as_set(items), 6};
  }
  throw SchemeError(ErrorKind::InvariantViolated, "no encoding line applies to " + X.to_string());
}

CompressedSample TreeFixedRadiusNoInfo::compress(const Sample& X) const { return compress_traced(X).first; }

Ball TreeFixedRadiusNoInfo::reconstruct(const CompressedSample& Y) const {
  auto pos = Y.positives();
  auto neg = Y.negatives();
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<Vertex> all = pos;
  all.insert(all.end(), neg.begin(), neg.end());
  auto designated = [&](Vertex s, Vertex t) -> std::optional<Ball> {
    auto y = designated_center(s, t, false);
    if (!y) return std::nullopt;
    return r_ball(*y);
  };
  auto avoid_all = [&](std::optional<Ball> b) {
    if (b && std::none_of(all.begin(), all.end(), [&](Vertex z) { return b->contains(z); })) return *b;
    if (auto any = any_ball({}, neg)) return *any;
    throw SchemeError(ErrorKind::MalformedInput, "no r-ball avoids " + Y.to_string());
  };
  auto must = [&](std::optional<Ball> b) {
    if (!b) throw SchemeError(ErrorKind::MalformedInput, "undefined designator in " + Y.to_string());
    return *b;
  };

  if (pos.empty() && neg.empty()) {
    if (mode_ == NoPositives::EmptyBall) return Ball::empty_ball(n());
    return *any_ball({}, {});
  }
  // (1)
  if (pos.empty() && neg.size() == 1) {
    const auto& so = orders_[neg[0]];
    if (so.size() == 0) throw SchemeError(ErrorKind::MalformedInput, "empty sphere");
    return r_ball(*std::min_element(so.order.begin(), so.order.end()));
  }
  // (2)
  if (!pos.empty() && neg.empty()) {
    if (auto b = any_ball(pos, {})) return *b;
    throw SchemeError(ErrorKind::MalformedInput, "no r-ball contains " + Y.to_string());
  }
  // (3)
  if (pos.size() == 1 && neg.size() == 1) {
    auto y = designated_center(neg[0], pos[0], true);
    if (!y) throw SchemeError(ErrorKind::MalformedInput, "undefined designator in " + Y.to_string());
    return r_ball(*y);
  }
  if (pos.empty() && neg.size() == 2) return avoid_all(designated(neg[0], neg[1]));  // (4)
  if (pos.size() == 1 && neg.size() == 2) return must(designated(neg[1], neg[0]));  // (5)
  if (pos.empty() && neg.size() == 3) return avoid_all(designated(neg[1], neg[0]));  // (6)
  if (pos.empty() && neg.size() == 4) return avoid_all(designated(neg[3], neg[0]));  // (7)
  if (pos.empty() && neg.size() == 5) return avoid_all(designated(neg[4], neg[2]));  // (8)
  if (pos.empty() && neg.size() == 6) return must(designated(neg[5], neg[4]));       // (9)
  throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
}

}  // namespace ballcomp
