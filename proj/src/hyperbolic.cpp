#include "ballcomp/hyperbolic.hpp"

#include <algorithm>

namespace ballcomp {

std::string Hyperbolicity::delta_string() const {
  if (twice_delta % 2 == 0) return std::to_string(twice_delta / 2);
  return std::to_string(twice_delta) + "/2";
}

Hyperbolicity hyperbolicity(const DistanceMatrix& D) {
  Hyperbolicity h;
  const int n = D.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          std::array<int, 3> s{D(a, b) + D(c, d), D(a, c) + D(b, d), D(a, d) + D(b, c)};
          std::sort(s.begin(), s.end());
          if (s[2] - s[1] > h.twice_delta) {
            h.twice_delta = s[2] - s[1];
            h.witness = {a, b, c, d};
          }
        }
  return h;
}

HyperbolicScheme::HyperbolicScheme(GraphMetric g)
    : Scheme(std::move(g)), h_(hyperbolicity(gm_.dist)), family_(enumerate_balls(gm_.dist)) {}

CompressedSample HyperbolicScheme::compress(const Sample& X) const {
  if (!first_realizing(X, family_))
    throw SchemeError(ErrorKind::NotRealizable, "sample " + X.to_string() + " is not realizable");
  CompressedSample Y({2});
  auto pos = X.positives();
  if (pos.empty()) return Y;
  auto [u, v] = diametral_pair(gm_.dist, pos);
  Y.set(0, u, Sign::Pos);
  if (v != u) Y.set(1, v, Sign::Pos);
  return Y;
}

Ball HyperbolicScheme::reconstruct(const CompressedSample& Y) const {
  auto pos = Y.positives();
  if (!Y.negatives().empty() || pos.size() > 2) throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
  if (pos.empty()) return Ball::empty_ball(n());
  if (pos.size() == 1) return Ball::make(gm_.dist, pos[0], 0);
  Vertex a = std::min(pos[0], pos[1]), b = std::max(pos[0], pos[1]);
  const int dist = d(a, b);
  auto path = canonical_geodesic(gm_.graph, gm_.dist, a, b);
  return Ball::make(gm_.dist, path[dist / 2], (dist + 1) / 2);
}

std::optional<ApproxParams> HyperbolicScheme::approximation(const CompressedSample& Y) const {
  ApproxParams p{2 * h_.twice_delta, 3 * h_.twice_delta};
  auto pos = Y.positives();
  if (pos.size() == 2 && d(pos[0], pos[1]) % 2 == 1) p.twice_mu += 2;
  return p;
}

}  // namespace ballcomp
