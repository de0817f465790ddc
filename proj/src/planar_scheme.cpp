#include "ballcomp/planar_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ballcomp {

RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
  RotationSystem rot;
  rot.order.resize(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    auto angle = [&](Vertex v) { return std::atan2(xy[v].second - xy[u].second, xy[v].first - xy[u].first); };
    std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    if (!nb.empty()) std::rotate(nb.begin(), std::min_element(nb.begin(), nb.end()), nb.end());
    rot.order[u] = nb;
  }
  return rot;
}

int count_faces(const RotationSystem& rot) {
  std::map<std::pair<Vertex, Vertex>, bool> seen;
  auto next_after = [&](Vertex at, Vertex from) {
    const auto& o = rot.order[at];
    auto it = std::find(o.begin(), o.end(), from);
    return ++it == o.end() ? o.front() : *it;
  };
  int faces = 0;
  for (Vertex u = 0; u < rot.n(); ++u)
    for (Vertex v : rot.order[u]) {
      if (seen[{u, v}]) continue;
      ++faces;
      Vertex a = u, b = v;
      while (!seen[{a, b}]) {
        seen[{a, b}] = true;
        Vertex c = next_after(b, a);
        a = b;
        b = c;
      }
    }
  return faces;
}

bool validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.n() != g.n()) return false;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto o = rot.order[u];
    std::sort(o.begin(), o.end());
    if (o != g.neighbors(u)) return false;
  }
  if (g.m() == 0) return true;
  return g.n() - g.m() + count_faces(rot) == 2;
}

std::vector<Vertex> potential_centers(const Graph& g, const Sample& X) {
  std::vector<Vertex> out;
  auto pos = X.positives();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (X.pos(v)) continue;
    if (std::all_of(pos.begin(), pos.end(), [&](Vertex p) { return g.adjacent(v, p); })) out.push_back(v);
  }
  return out;
}

PlanarUnitScheme::PlanarUnitScheme(GraphMetric g, RotationSystem rot) : Scheme(std::move(g)), rot_(std::move(rot)) {
  if (!validate_rotation(gm_.graph, rot_)) throw SchemeError(ErrorKind::InvalidEmbedding, "rotation system is not planar");
  family_ = enumerate_balls(gm_.dist, 1);
}

std::vector<Vertex> PlanarUnitScheme::common_order(Vertex u, Vertex v) const {
  const auto& o = rot_.order[u];
  std::size_t start = 0;
  auto it = std::find(o.begin(), o.end(), v);
  if (it != o.end()) start = static_cast<std::size_t>(it - o.begin()) + 1;
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < o.size(); ++k) {
    Vertex w = o[(start + k) % o.size()];
    if (gm_.graph.adjacent(v, w)) out.push_back(w);
  }
  return out;
}

std::optional<Vertex> PlanarUnitScheme::decode_two(Vertex u, Vertex v, std::optional<Vertex> t) const {
  auto W = common_order(u, v);
  if (W.empty()) return std::nullopt;
  if (!t) return *std::min_element(W.begin(), W.end());
  const std::size_t K = W.size();
  for (std::size_t s = 0; s < K; ++s)
    if (in_unit(*t, W[(s + K - 1) % K]) && !in_unit(*t, W[s])) return W[s];
  return std::nullopt;
}

std::vector<int> PlanarUnitScheme::transition_labels(Vertex u, Vertex t) const {
  const auto& N = rot_.order[u];
  const int K = static_cast<int>(N.size());
  std::vector<int> out;
  for (int s = 0; s < K; ++s)
    if (!in_unit(t, N[s]) && in_unit(t, N[(s + K - 1) % K])) out.push_back(s);
  return out;
}

std::optional<Vertex> PlanarUnitScheme::decode_one(Vertex u, Vertex t, std::optional<Vertex> z) const {
  const auto& N = rot_.order[u];
  const int K = static_cast<int>(N.size());
  auto W = transition_labels(u, t);
  if (W.empty()) return std::nullopt;
  if (!z) {
    int p = -1;
    for (int j = 0; j < K && p < 0; ++j)
      if (in_unit(t, N[j])) p = j;
    // First element of W clockwise after w_p.
    for (int k = 1; k <= K; ++k) {
      int s = (p + k) % K;
      if (std::find(W.begin(), W.end(), s) != W.end()) return N[s];
    }
    return std::nullopt;
  }
  const int m = static_cast<int>(W.size());
  std::vector<int> hit;
  for (int i = 0; i < m; ++i)
    if (in_unit(*z, N[W[i]])) hit.push_back(i);
  int wp = -1;
  if (hit.size() == 1) {
    wp = hit[0];
  } else if (hit.size() == 2) {
    // w'' precedes w' in W.
    if ((hit[0] + 1) % m == hit[1]) wp = hit[1];
    else if ((hit[1] + 1) % m == hit[0]) wp = hit[0];
  }
  if (wp < 0) return std::nullopt;
  return N[W[(wp + 1) % m]];
}

std::optional<Vertex> PlanarUnitScheme::decode_three(const std::vector<Vertex>& pos, std::optional<Vertex> z) const {
  for (Vertex w = 0; w < n(); ++w) {
    if (!std::all_of(pos.begin(), pos.end(), [&](Vertex p) { return gm_.graph.adjacent(w, p); })) continue;
    if (z && in_unit(w, *z)) continue;
    return w;
  }
  return std::nullopt;
}

CompressedSample PlanarUnitScheme::compress(const Sample& X) const {
  if (!first_realizing(X, family_))
    throw SchemeError(ErrorKind::NotRealizable, "sample " + X.to_string() + " is not realizable");
  auto fail = [&](const std::string& what) {
    throw SchemeError(ErrorKind::InvariantViolated, what + " for " + X.to_string());
  };
  CompressedSample Y({4});
  auto pos = X.positives();
  auto neg = X.negatives();
  auto realizes_at = [&](std::optional<Vertex> c) { return c && consistent(unit(*c).members, X); };
  if (pos.empty()) return Y;
  for (Vertex u : pos)
    if (realizes_at(u)) {
      Y.set(0, u, Sign::Pos);
      return Y;
    }
  const Graph& g = gm_.graph;

  if (pos.size() >= 3) {
    if (check_) {
      bool all_touch = std::all_of(pos.begin(), pos.end(), [&](Vertex p) {
        return std::any_of(neg.begin(), neg.end(), [&](Vertex q) { return g.adjacent(p, q); });
      });
      auto pc = potential_centers(g, X);
      if (all_touch && (pc.empty() || pc.size() > 2)) fail("more than two potential centers");
    }
    const std::size_t P = pos.size();
    for (std::size_t a = 0; a < P; ++a)
      for (std::size_t b = a + 1; b < P; ++b)
        for (std::size_t c = b + 1; c < P; ++c) {
          std::vector<Vertex> tri{pos[a], pos[b], pos[c]};
          std::vector<std::optional<Vertex>> zs{std::nullopt};
          for (Vertex q : neg) zs.push_back(q);
          for (auto z : zs)
            if (realizes_at(decode_three(tri, z))) {
              for (int i = 0; i < 3; ++i) Y.set(i, tri[i], Sign::Pos);
              if (z) Y.set(3, *z, Sign::Neg);
              return Y;
            }
        }
    fail("no triple decodes");
  }

  if (pos.size() == 2) {
    const Vertex u = pos[0], v = pos[1];
    if (check_) {
      auto W = common_order(u, v);
      std::vector<Vertex> pcs;
      for (Vertex w : W)
        if (!X.pos(w)) pcs.push_back(w);
      const int K = static_cast<int>(pcs.size());
      for (Vertex x : neg) {
        std::vector<int> in;
        for (int i = 0; i < K; ++i)
          if (in_unit(x, pcs[i])) in.push_back(i);
        if (in.size() > 3) fail("negative meets more than three potential centers");
        if (in.empty() || static_cast<int>(in.size()) == K) continue;
        int starts = 0;
        for (int i : in)
          if (std::find(in.begin(), in.end(), (i + K - 1) % K) == in.end()) ++starts;
        if (starts != 1) fail("negative meets non-consecutive potential centers");
      }
    }
    Y.set(0, u, Sign::Pos);
    Y.set(1, v, Sign::Pos);
    if (realizes_at(decode_two(u, v, std::nullopt))) return Y;
    for (Vertex t : neg)
      if (realizes_at(decode_two(u, v, t))) {
        Y.set(2, t, Sign::Neg);
        return Y;
      }
    fail("no negative t decodes");
  }

  // |X+| = 1 and B1(u) does not realize X.
  const Vertex u = pos[0];
  const auto& N = rot_.order[u];
  const int K = static_cast<int>(N.size());
  Y.set(0, u, Sign::Pos);
  for (Vertex t : neg) {
    auto W = transition_labels(u, t);
    if (W.empty()) continue;
    int p = -1;
    for (int j = 0; j < K && p < 0; ++j)
      if (in_unit(t, N[j])) p = j;
    // W in clockwise order from w_p.
    std::vector<int> Wc;
    for (int k = 1; k <= K; ++k)
      if (std::find(W.begin(), W.end(), (p + k) % K) != W.end()) Wc.push_back((p + k) % K);
    int first_ok = -1;
    for (int i = 0; i < static_cast<int>(Wc.size()) && first_ok < 0; ++i)
      if (realizes_at(N[Wc[i]])) first_ok = i;
    if (first_ok < 0) continue;
    if (first_ok == 0) {
      Y.set(2, t, Sign::Neg);
      return Y;
    }
    const int m = static_cast<int>(W.size());
    const Vertex ws = N[Wc[first_ok]];
    const Vertex wsp = N[Wc[first_ok - 1]];
    int idx_sp = static_cast<int>(std::find(W.begin(), W.end(), Wc[first_ok - 1]) - W.begin());
    const Vertex wspp = N[W[(idx_sp + m - 1) % m]];
    for (Vertex z : neg) {
      if (!in_unit(wsp, z)) continue;
      if (check_) {
        std::vector<Vertex> hit;
        for (int s : W)
          if (in_unit(z, N[s])) hit.push_back(N[s]);
        std::sort(hit.begin(), hit.end());
        std::vector<Vertex> one{wsp}, two{std::min(wsp, wspp), std::max(wsp, wspp)};
        if (hit != one && !(m >= 3 && hit == two)) fail("claim on z fails");
      }
      auto got = decode_one(u, t, z);
      if (got && *got == ws) {
        Y.set(2, t, Sign::Neg);
        Y.set(3, z, Sign::Neg);
        return Y;
      }
    }
  }
  fail("no (t, z) decodes");
  return Y;
}

Ball PlanarUnitScheme::reconstruct(const CompressedSample& Y) const {
  if (Y.size() != 4) throw SchemeError(ErrorKind::MalformedInput, "expected four slots");
  auto pos = Y.positives();
  std::vector<Vertex> neg;
  for (std::size_t i = 0; i < 4; ++i)
    if (Y.filled(i) && Y.sign(i) == Sign::Neg) neg.push_back(Y.vertex(i));
  auto need = [&](std::optional<Vertex> c) {
    if (!c) throw SchemeError(ErrorKind::Undefined, "no center for " + Y.to_string());
    return unit(*c);
  };
  if (pos.empty() && neg.empty()) return Ball::empty_ball(n());
  if (pos.size() == 1 && neg.empty()) return unit(pos[0]);
  if (pos.size() == 3 && neg.size() <= 1)
    return need(decode_three(pos, neg.empty() ? std::nullopt : std::optional<Vertex>(neg[0])));
  if (pos.size() == 2 && neg.size() <= 1)
    return need(decode_two(Y.vertex(0), Y.vertex(1), neg.empty() ? std::nullopt : std::optional<Vertex>(neg[0])));
  if (pos.size() == 1 && Y.filled(2) && !Y.filled(1))
    return need(decode_one(pos[0], Y.vertex(2), Y.filled(3) ? std::optional<Vertex>(Y.vertex(3)) : std::nullopt));
  throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
}

}  // namespace ballcomp
