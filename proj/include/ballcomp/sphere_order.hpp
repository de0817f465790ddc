#pragma once

#include <optional>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/metric.hpp"

namespace ballcomp {

// Vertices of S_rho(root) in DFS discovery order (children by ascending id).
struct SphereOrder {
  Vertex root = 0;
  int radius = 0;
  std::vector<Vertex> order;
  std::vector<int> label;  // vertex -> position in order, -1 if absent

  int size() const { return static_cast<int>(order.size()); }
  bool contains(Vertex v) const { return label[v] >= 0; }
};

SphereOrder dfs_sphere_order(const Graph& tree, Vertex s, int rho);

// Last vertex of the circular interval S ∩ B_r(v) (positive) or S \ B_r(v)
// (negative) in the cyclic order of `so`; none when that set is empty or
// the whole sphere.
std::optional<Vertex> phi(const DistanceMatrix& D, const SphereOrder& so, Vertex v, int r, bool positive);

// True iff the marked positions form one contiguous arc of the cyclic order.
bool is_circular_interval(const std::vector<bool>& marked);

}  // namespace ballcomp
