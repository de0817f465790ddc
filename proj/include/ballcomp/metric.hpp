#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ballcomp/graph.hpp"

namespace ballcomp {

class NotGated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }
  int eccentricity(Vertex v) const;
  int diameter() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Graph plus its distance matrix; the context every scheme works in.
struct GraphMetric {
  Graph graph;
  DistanceMatrix dist;
  int diam = 0;

  GraphMetric() = default;
  explicit GraphMetric(Graph g);
  int n() const { return graph.n(); }
  int d(Vertex u, Vertex v) const { return dist(u, v); }
};

std::vector<Vertex> interval(const DistanceMatrix& D, Vertex u, Vertex v);
bool in_interval(const DistanceMatrix& D, Vertex u, Vertex v, Vertex z);
std::vector<Vertex> median(const DistanceMatrix& D, Vertex u, Vertex v, Vertex w);
// Throws NotGated when S has no gate for x.
Vertex gate(const DistanceMatrix& D, const std::vector<Vertex>& S, Vertex x);
std::vector<Vertex> sphere(const DistanceMatrix& D, Vertex x, int r);
std::vector<Vertex> ball_members(const DistanceMatrix& D, Vertex x, int r);

// Shortest (a,b)-path a..b: walking back from b, each step takes the
// smallest-id neighbor one step closer to a.
std::vector<Vertex> canonical_geodesic(const Graph& g, const DistanceMatrix& D, Vertex a, Vertex b);

// Diametral pair of a nonempty vertex list: lexicographically smallest
// (min, max) among pairs of maximum distance. Singleton gives (v, v).
std::pair<Vertex, Vertex> diametral_pair(const DistanceMatrix& D, const std::vector<Vertex>& vs);

}  // namespace ballcomp
