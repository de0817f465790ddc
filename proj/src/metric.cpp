#include "ballcomp/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace ballcomp {

int DistanceMatrix::eccentricity(Vertex v) const {
  int e = 0;
  for (Vertex u = 0; u < n_; ++u) e = std::max(e, (*this)(v, u));
  return e;
}

int DistanceMatrix::diameter() const {
  int e = 0;
  for (int x : d_) e = std::max(e, x);
  return e;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.n();
  DistanceMatrix D(n);
  std::vector<int> dist(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) D.at(s, v) = dist[v];
  }
  return D;
}

GraphMetric::GraphMetric(Graph g) : graph(std::move(g)), dist(all_pairs_distances(graph)), diam(dist.diameter()) {}

bool in_interval(const DistanceMatrix& D, Vertex u, Vertex v, Vertex z) {
  return D(u, z) + D(z, v) == D(u, v);
}

std::vector<Vertex> interval(const DistanceMatrix& D, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < D.n(); ++z)
    if (in_interval(D, u, v, z)) out.push_back(z);
  return out;
}

std::vector<Vertex> median(const DistanceMatrix& D, Vertex u, Vertex v, Vertex w) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < D.n(); ++z)
    if (in_interval(D, u, v, z) && in_interval(D, v, w, z) && in_interval(D, w, u, z)) out.push_back(z);
  return out;
}

Vertex gate(const DistanceMatrix& D, const std::vector<Vertex>& S, Vertex x) {
  if (S.empty()) throw NotGated("gate of an empty set");
  Vertex best = S.front();
  for (Vertex s : S)
    if (D(x, s) < D(x, best)) best = s;
  for (Vertex s : S)
    if (!in_interval(D, x, s, best)) throw NotGated("set is not gated for vertex " + std::to_string(x));
  return best;
}

std::vector<Vertex> sphere(const DistanceMatrix& D, Vertex x, int r) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < D.n(); ++z)
    if (D(x, z) == r) out.push_back(z);
  return out;
}

std::vector<Vertex> ball_members(const DistanceMatrix& D, Vertex x, int r) {
  std::vector<Vertex> out;
  for (Vertex z = 0; z < D.n(); ++z)
    if (D(x, z) <= r) out.push_back(z);
  return out;
}

std::vector<Vertex> canonical_geodesic(const Graph& g, const DistanceMatrix& D, Vertex a, Vertex b) {
  std::vector<Vertex> path{b};
  Vertex cur = b;
  while (cur != a) {
    for (Vertex w : g.neighbors(cur)) {
      if (D(a, w) == D(a, cur) - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::pair<Vertex, Vertex> diametral_pair(const DistanceMatrix& D, const std::vector<Vertex>& vs) {
  std::pair<Vertex, Vertex> best{vs.front(), vs.front()};
  int best_d = -1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      std::pair<Vertex, Vertex> p{std::min(vs[i], vs[j]), std::max(vs[i], vs[j])};
      int d = D(p.first, p.second);
      if (d > best_d || (d == best_d && p < best)) {
        best_d = d;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace ballcomp
