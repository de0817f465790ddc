#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

bool is_median_graph(const Graph& g, const DistanceMatrix& D);
bool is_cube_free_median(const Graph& g, const DistanceMatrix& D);

// Djoković–Winkler classes: class id per edge index of g.edges().
std::vector<int> theta_classes(const Graph& g, const DistanceMatrix& D);

struct GridPoint {
  int a = 0;
  int b = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Isometric embedding of I(u,v) into Z^2 with u at the origin.
struct GridEmbedding {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> interval;
  std::vector<std::optional<GridPoint>> coord;  // per vertex; empty outside I(u,v)

  const GridPoint& at(Vertex z) const { return *coord[z]; }
  bool contains(Vertex z) const { return coord[z].has_value(); }
};

// Throws SchemeError(NotMedian) when the separating classes do not 2-color.
GridEmbedding embed_interval(const Graph& g, const DistanceMatrix& D, Vertex u, Vertex v);

// Size-22 scheme for all balls of a cube-free median graph; four parts
// of sizes 2, 4, 8, 8.
class CfMedianScheme : public Scheme {
 public:
  explicit CfMedianScheme(GraphMetric g);
  std::string id() const override { return "cfmedian"; }
  int size_bound() const override { return 22; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  // When set, compress checks the gate projection and both claims on the
  // decoded regions and throws InvariantViolated on a mismatch.
  void set_check_invariants(bool on) { check_ = on; }
  const GridEmbedding& embedding(Vertex u, Vertex v) const;

 private:
  Vertex interval_gate(const GridEmbedding& E, Vertex z) const;

  std::vector<Ball> family_;
  bool check_ = false;
  mutable std::map<std::pair<Vertex, Vertex>, GridEmbedding> cache_;
};

}  // namespace ballcomp
