#include "ballcomp/cactus_scheme.hpp"

#include <algorithm>
#include <limits>

namespace ballcomp {

namespace {

CompressedSample put(CompressedSample Y, std::size_t i, Vertex v, const Sample& X) {
  Y.set(i, v, X[v]);
  return Y;
}

Ball require_realizable(const Sample& X, const std::vector<Ball>& family) {
  auto b = first_realizing(X, family);
  if (!b) throw SchemeError(ErrorKind::NotRealizable, "sample " + X.to_string() + " is not realizable");
  return *b;
}

Ball covering(const std::vector<Ball>& family) {
  for (const Ball& b : family)
    if (std::all_of(b.members.begin(), b.members.end(), [](bool m) { return m; })) return b;
  throw SchemeError(ErrorKind::Undefined, "no covering ball");
}

}  // namespace

bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3 || g.m() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;  // connected and 2-regular
}

std::size_t locate_center_edge(const std::vector<Vertex>& path) {
  if (path.size() < 2) throw SchemeError(ErrorKind::Undefined, "path without edges");
  const int L = static_cast<int>(path.size()) - 1;
  for (int i = 0; i < L; ++i) {
    int diff = (L - i) - i;
    if (diff == 1 || diff == 2) return static_cast<std::size_t>(i);
  }
  throw SchemeError(ErrorKind::Undefined, "no center edge");
}

// ---------------------------------------------------------------- cycle

CycleScheme::CycleScheme(GraphMetric c) : Scheme(std::move(c)) {
  if (!is_cycle_graph(gm_.graph)) throw SchemeError(ErrorKind::NotCactus, "graph is not a cycle");
  std::vector<Vertex> all(n());
  for (Vertex v = 0; v < n(); ++v) all[v] = v;
  order_ = cycle_order(gm_.graph, all);
  index_.assign(n(), 0);
  for (int i = 0; i < n(); ++i) index_[order_[i]] = i;
  family_ = enumerate_balls(gm_.dist);
}

CompressedSample CycleScheme::compress(const Sample& X) const {
  require_realizable(X, family_);
  CompressedSample Y({3});
  auto pos = X.positives();
  auto neg = X.negatives();
  if (pos.size() <= 1 || (neg.empty() && pos.size() == 2)) {
    for (std::size_t i = 0; i < pos.size(); ++i) Y.set(i, pos[i], Sign::Pos);
    return Y;
  }
  if (neg.empty()) {
    for (std::size_t i = 0; i < 3; ++i) Y.set(i, pos[i], Sign::Pos);
    return Y;
  }
  // Arc from u clockwise to v holding all positives and no negatives.
  const int N = n();
  for (int start = 0; start < N; ++start) {
    Vertex u = order_[start];
    if (!X.pos(u)) continue;
    std::size_t seen = 0;
    Vertex v = u;
    bool clean = true;
    for (int k = 0; k < N && seen < pos.size(); ++k) {
      Vertex z = order_[(start + k) % N];
      if (X.neg(z)) {
        clean = false;
        break;
      }
      if (X.pos(z)) {
        ++seen;
        v = z;
      }
    }
    if (!clean) continue;
    Vertex w = -1;
    int best = std::numeric_limits<int>::max();
    for (Vertex z : neg) {
      int dz = std::min(d(u, z), d(v, z));
      if (dz < best) best = dz, w = z;
    }
    Y.set(0, std::min(u, v), Sign::Pos);
    Y.set(1, std::max(u, v), Sign::Pos);
    Y.set(2, w, Sign::Neg);
    return Y;
  }
  throw SchemeError(ErrorKind::InvariantViolated, "no positive arc for " + X.to_string());
}

Ball CycleScheme::reconstruct(const CompressedSample& Y) const {
  auto pos = Y.positives();
  auto neg = Y.negatives();
  if (pos.empty() && neg.empty()) return Ball::empty_ball(n());
  if (pos.size() == 1 && neg.empty()) return Ball::make(gm_.dist, pos[0], 0);
  if ((pos.size() == 2 && neg.empty()) || (pos.size() == 3 && neg.empty())) return covering(family_);
  if (pos.size() != 2 || neg.size() != 1) throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
  const int N = n();
  auto walk = [&](Vertex a, Vertex b) {
    std::vector<Vertex> p;
    for (int i = index_[a];; i = (i + 1) % N) {
      p.push_back(order_[i]);
      if (order_[i] == b) break;
    }
    return p;
  };
  Vertex w = neg[0];
  auto P = walk(pos[0], pos[1]);
  if (std::find(P.begin(), P.end(), w) != P.end()) P = walk(pos[1], pos[0]);
  const int dp = static_cast<int>(P.size()) - 1;
  const int r = (dp + 1) / 2;
  std::vector<Vertex> mids;
  if (dp % 2 == 0) {
    mids.push_back(P[dp / 2]);
  } else {
    mids.push_back(P[(dp - 1) / 2]);
    mids.push_back(P[(dp + 1) / 2]);
  }
  std::sort(mids.begin(), mids.end());
  for (Vertex y : mids)
    if (d(y, w) > r) return Ball::make(gm_.dist, y, r);
  throw SchemeError(ErrorKind::Undefined, "no middle vertex avoids " + std::to_string(w));
}

// ---------------------------------------------------------------- cactus

CactusScheme::CactusScheme(GraphMetric g) : Scheme(std::move(g)), bt_(block_cut_tree(gm_.graph)) {
  if (!is_cactus(gm_.graph, bt_)) throw SchemeError(ErrorKind::NotCactus, "graph is not a cactus");
  orders_.resize(bt_.block_count());
  for (int b = 0; b < bt_.block_count(); ++b)
    if (bt_.blocks[b].size() >= 3) orders_[b] = cycle_order(gm_.graph, bt_.blocks[b]);
  family_ = enumerate_balls(gm_.dist);
}

BlockChain CactusScheme::chain(Vertex u, Vertex v) const {
  BlockChain ch;
  ch.position.assign(n(), -1);
  if (u == v) {
    ch.junction = {u};
    ch.position[u] = 0;
    ch.vertices = {u};
    return ch;
  }
  const int B = bt_.block_count();
  auto path = bt_.node_path(bt_.home_node(u), bt_.home_node(v));
  ch.junction.push_back(u);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < B) {
      ch.blocks.push_back(path[i]);
    } else if (!ch.blocks.empty() && i + 1 < path.size()) {
      ch.junction.push_back(path[i] - B);
    }
  }
  ch.junction.push_back(v);
  const int m = ch.length();
  for (int i = 1; i <= m; ++i)
    for (Vertex z : bt_.blocks[ch.blocks[i - 1]])
      if (ch.position[z] < 0) ch.position[z] = 2 * i - 1;
  for (int i = 0; i <= m; ++i) ch.position[ch.junction[i]] = 2 * i;
  for (Vertex z = 0; z < n(); ++z)
    if (ch.position[z] >= 0) ch.vertices.push_back(z);
  return ch;
}

Vertex CactusScheme::chain_gate(const BlockChain& ch, Vertex z) const { return gate(gm_.dist, ch.vertices, z); }

Vertex CactusScheme::block_gate(int block, Vertex z) const { return gate(gm_.dist, bt_.blocks[block], z); }

std::vector<Vertex> CactusScheme::arc(int block, Vertex a, Vertex b, bool clockwise) const {
  const auto& co = orders_[block];
  const int L = static_cast<int>(co.size());
  int i = static_cast<int>(std::find(co.begin(), co.end(), a) - co.begin());
  std::vector<Vertex> out{a};
  while (out.back() != b) {
    i = (i + (clockwise ? 1 : L - 1)) % L;
    out.push_back(co[i]);
  }
  return out;
}

Ball CactusScheme::covering_ball() const { return covering(family_); }

CompressedSample CactusScheme::compress(const Sample& X) const { return compress_traced(X).first; }

std::pair<CompressedSample, std::string> CactusScheme::compress_traced(const Sample& X) const {
  const auto& D = gm_.dist;
  Ball target = require_realizable(X, family_);
  CompressedSample Y({2, 2, 2});
  auto pos = X.positives();
  auto neg = X.negatives();
  auto support = X.support();
  auto fail = [&](const std::string& what) {
    throw SchemeError(ErrorKind::InvariantViolated, what + " for " + X.to_string());
  };
  if (neg.empty()) return {Y, "C1"};
  if (pos.empty()) return {put(Y, 4, neg[0], X), "C2"};
  if (pos.size() == 1) return {put(put(Y, 0, pos[0], X), 4, neg[0], X), "C3"};

  auto [up, vp] = diametral_pair(D, pos);
  BlockChain ch = chain(up, vp);
  Vertex xc = chain_gate(ch, target.center);
  const int rc = target.radius - d(target.center, xc);
  auto rstar = [&](Vertex y) {
    int r = 0;
    for (Vertex p : pos) r = std::max(r, d(y, p));
    return r;
  };
  auto realizes_at = [&](Vertex y, int r) { return r >= 0 && consistent(Ball::make(D, y, r).members, X); };
  if (check_ && !realizes_at(xc, rc)) fail("gated center does not realize");

  Y = put(put(Y, 0, up, X), 1, vp, X);
  const int px = ch.position[xc];
  const int pu = px % 2 == 0 ? px : px - 1;
  const int pv = px % 2 == 0 ? px : px + 1;
  std::vector<int> gp(n(), -1);
  for (Vertex w : support) gp[w] = ch.position[chain_gate(ch, w)];
  std::vector<Vertex> xu, xv, xcs;
  for (Vertex w : support) {
    if (gp[w] <= pu) xu.push_back(w);
    if (gp[w] >= pv) xv.push_back(w);
    if (gp[w] > pu && gp[w] < pv) xcs.push_back(w);
  }

  if (xcs.empty()) {
    int M = 0, mm = std::numeric_limits<int>::max();
    for (Vertex w : xu) M = std::max(M, gp[w]);
    for (Vertex w : xv) mm = std::min(mm, gp[w]);
    const int u0 = 2 * ((M + 1) / 2);
    const int v0 = 2 * (mm / 2);
    auto pick = [&](const std::vector<Vertex>& side, int exact, int fallback) {
      for (int target_pos : {exact, fallback})
        for (Vertex w : side)
          if (gp[w] == target_pos) return w;
      return Vertex{-1};
    };
    Vertex w1 = pick(xu, u0, u0 - 1);
    Vertex w2 = pick(xv, v0, v0 + 1);
    if (w1 < 0 || w2 < 0) fail("no region designator");
    auto closest_neg = [&](const std::vector<Vertex>& side) {
      Vertex best = -1;
      for (Vertex w : side)
        if (X.neg(w) && (best < 0 || d(xc, w) < d(xc, best))) best = w;
      return best;
    };
    Vertex z1 = closest_neg(xu), z2 = closest_neg(xv);
    Y = put(put(Y, 2, w1, X), 3, w2, X);
    if (z1 >= 0) Y = put(Y, 4, z1, X);
    if (z2 >= 0) Y = put(Y, 5, z2, X);
    if (check_) {
      if (px < u0 || px > v0) fail("center outside C(u0,v0)");
      for (Vertex y : ch.vertices) {
        if (ch.position[y] < u0 || ch.position[y] > v0) continue;
        int ry = std::max(d(y, up), d(y, vp));
        if (ry != rstar(y)) fail("r_y differs from r*_y");
        Ball b = Ball::make(D, y, ry);
        bool avoids = (z1 < 0 || !b.contains(z1)) && (z2 < 0 || !b.contains(z2));
        if (avoids && !consistent(b.members, X)) fail("ball avoiding z1,z2 meets a negative");
      }
    }
    std::string label = z1 >= 0 && z2 >= 0 ? "C4iii" : (z1 >= 0 ? "C4i" : "C4ii");
    return {Y, label};
  }

  const int block = ch.blocks[(px + 1) / 2 - 1];
  const auto& co = orders_[block];
  Vertex w = xcs.front();
  Vertex wg = chain_gate(ch, w);
  bool all_realize = true;
  for (Vertex y : co) all_realize = all_realize && realizes_at(y, rstar(y));
  if (all_realize) {
    const int r = rstar(wg);
    Vertex s = -1;
    for (Vertex p : pos)
      if (d(wg, p) == r) {
        s = p;
        break;
      }
    return {put(put(Y, 2, w, X), 4, s, X), "C5i"};
  }
  const int L = static_cast<int>(co.size());
  Vertex x = -1, y = -1;
  for (int i = 0; i < L && x < 0; ++i) {
    Vertex a = co[i], b = co[(i + 1) % L];
    bool ra = realizes_at(a, rstar(a)), rb = realizes_at(b, rstar(b));
    if (ra && !rb) x = a, y = b;
    if (rb && !ra) x = b, y = a;
  }
  const int rx = rstar(x), ry = rstar(y);
  Ball bx = Ball::make(D, x, rx), by = Ball::make(D, y, ry);
  Vertex z = -1;
  for (Vertex q : neg)
    if (by.contains(q) && !bx.contains(q)) {
      z = q;
      break;
    }
  Vertex s = -1;
  for (Vertex p : pos)
    if (d(y, p) == ry && (s < 0 || (d(x, p) == rx && d(x, s) != rx))) s = p;
  Vertex t = s;
  if (d(x, s) != rx)
    for (Vertex p : pos)
      if (d(x, p) == rx) {
        t = p;
        break;
      }
  if (z < 0 || s < 0) fail("missing witness");
  if (check_) {
    int dz = d(x, z) - d(y, z), ds = d(x, s) - d(y, s);
    bool c1 = ry == rx + 1 && dz == 1 && ds == -1;
    bool c2 = ry == rx + 1 && dz == 0 && ds == -1;
    bool c3 = ry == rx && dz == 1 && ds == 0;
    bool c4 = ry == rx && dz == 1 && ds == -1;
    if (!(c1 || c2 || c3 || c4)) fail("edge xy matches no distance pattern");
  }
  Vertex other = s == t ? z : t;
  Vertex sg = block_gate(block, s), og = block_gate(block, other);
  auto cw = arc(block, sg, og, true);
  bool on_cw = false;
  for (std::size_t i = 0; i + 1 < cw.size(); ++i)
    if ((cw[i] == x && cw[i + 1] == y) || (cw[i] == y && cw[i + 1] == x)) on_cw = true;
  Y = put(Y, on_cw ? 3 : 2, w, X);
  Y = put(put(Y, 4, s, X), 5, other, X);
  std::string label = s == t ? (on_cw ? "C5ii" : "C5iii") : (on_cw ? "C5iv" : "C5v");
  if (check_) {
    Ball got = reconstruct(Y);
    if (got.center != x) fail("decoded center differs from x");
  }
  return {Y, label};
}

Ball CactusScheme::reconstruct(const CompressedSample& Y) const {
  const auto& D = gm_.dist;
  if (Y.size() != 6) throw SchemeError(ErrorKind::MalformedInput, "expected six slots");
  auto malformed = [&]() { return SchemeError(ErrorKind::MalformedInput, Y.to_string()); };
  bool y1 = Y.filled(0), y2 = Y.filled(1), y3 = Y.filled(2), y4 = Y.filled(3), y5 = Y.filled(4), y6 = Y.filled(5);
  if (!y1 && !y2 && !y3 && !y4 && !y5 && !y6) return covering_ball();
  if (!y1 && !y2 && !y3 && !y4 && y5 && !y6) return Ball::empty_ball(n());
  if (y1 && !y2 && !y3 && !y4 && y5 && !y6) return Ball::make(D, Y.vertex(0), 0);
  if (!y1 || !y2) throw malformed();
  BlockChain ch = chain(Y.vertex(0), Y.vertex(1));
  const Vertex a = Y.vertex(0), b = Y.vertex(1);

  if (y3 && y4) {
    int p3 = ch.position[chain_gate(ch, Y.vertex(2))];
    int p4 = ch.position[chain_gate(ch, Y.vertex(3))];
    int u0 = p3 % 2 == 0 ? p3 : p3 + 1;
    int v0 = p4 % 2 == 0 ? p4 : p4 - 1;
    for (Vertex y : ch.vertices) {
      if (ch.position[y] < u0 || ch.position[y] > v0) continue;
      Ball ball = Ball::make(D, y, std::max(d(y, a), d(y, b)));
      if ((!y5 || !ball.contains(Y.vertex(4))) && (!y6 || !ball.contains(Y.vertex(5)))) return ball;
    }
    throw SchemeError(ErrorKind::Undefined, "no center in C(u0,v0) for " + Y.to_string());
  }
  if (y3 == y4 || !y5) throw malformed();
  const Vertex w = y3 ? Y.vertex(2) : Y.vertex(3);
  const Vertex wg = chain_gate(ch, w);
  const int pw = ch.position[wg];
  if (pw % 2 == 0) throw malformed();
  const Vertex s = Y.vertex(4);
  if (!y6) return Ball::make(D, wg, d(wg, s));

  const int block = ch.blocks[(pw + 1) / 2 - 1];
  const Vertex o = Y.vertex(5);
  const Vertex sg = block_gate(block, s), og = block_gate(block, o);
  std::vector<Vertex> P = canonical_geodesic(gm_.graph, D, s, sg);
  auto mid = arc(block, sg, og, y4);
  P.insert(P.end(), mid.begin() + 1, mid.end());
  auto tail = canonical_geodesic(gm_.graph, D, og, o);
  P.insert(P.end(), tail.begin() + 1, tail.end());
  const std::size_t i = locate_center_edge(P);
  const Vertex x = P[i], y = P[i + 1];
  if (Y.sign(5) == Sign::Pos) return Ball::make(D, x, d(x, o));
  const int dy = d(y, s);
  const int r = static_cast<int>(i) + 1 == dy + 1 ? dy : dy - 1;
  return Ball::make(D, x, r);
}

}  // namespace ballcomp
