#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

// Clockwise neighbor order per vertex.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;

  int n() const { return static_cast<int>(order.size()); }
};

// Rotations from straight-line coordinates, each list starting at the
// smallest-id neighbor.
RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy);
int count_faces(const RotationSystem& rot);
// Neighbor lists match g and V - E + F = 2.
bool validate_rotation(const Graph& g, const RotationSystem& rot);

// v outside X+ with X+ contained in N(v).
std::vector<Vertex> potential_centers(const Graph& g, const Sample& X);

// Size-4 scheme for radius-1 balls of a plane graph.
class PlanarUnitScheme : public Scheme {
 public:
  PlanarUnitScheme(GraphMetric g, RotationSystem rot);
  std::string id() const override { return "planar-unit"; }
  int size_bound() const override { return 4; }
  std::optional<int> radius() const override { return 1; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  // When set, compress checks the supporting lemmas and the claim on (t,z)
  // and throws InvariantViolated on a mismatch.
  void set_check_invariants(bool on) { check_ = on; }

  // Common neighbors of u and v in clockwise order around u, starting after v.
  std::vector<Vertex> common_order(Vertex u, Vertex v) const;
  // Neighbors of u clockwise, starting at the smallest id.
  const std::vector<Vertex>& around(Vertex u) const { return rot_.order[u]; }

 private:
  Ball unit(Vertex v) const { return Ball::make(gm_.dist, v, 1); }
  bool in_unit(Vertex c, Vertex v) const { return c == v || gm_.graph.adjacent(c, v); }
  std::optional<Vertex> decode_two(Vertex u, Vertex v, std::optional<Vertex> t) const;
  std::optional<Vertex> decode_one(Vertex u, Vertex t, std::optional<Vertex> z) const;
  std::optional<Vertex> decode_three(const std::vector<Vertex>& pos, std::optional<Vertex> z) const;
  // W for (u,t): neighbors w_s of u with w_s outside B1(t) and w_{s-1} inside.
  std::vector<int> transition_labels(Vertex u, Vertex t) const;

  RotationSystem rot_;
  std::vector<Ball> family_;
  bool check_ = false;
};

}  // namespace ballcomp
