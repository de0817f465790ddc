#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballcomp/interval_scheme.hpp"
#include "ballcomp/planar_scheme.hpp"
#include "ballcomp/split_scheme.hpp"

namespace ballcomp {

enum class GraphClass { Tree, Cycle, Cactus, CfMedian, Interval, Split, PlanarRot, Random };

GraphClass parse_graph_class(const std::string& name);
std::string to_string(GraphClass c);

enum class PlanarFamily { Wheel, Grid, StackedSquares, StackedTriangulation };

struct GenSpec {
  GraphClass cls = GraphClass::Tree;
  int n = 1;
  std::uint64_t seed = 1;
  // Grid dimensions (cfmedian grids, planar grids); 0 means derive from n.
  int rows = 0;
  int cols = 0;
  // Edge probability for random graphs.
  double density = 0.3;
  PlanarFamily planar = PlanarFamily::StackedTriangulation;
};

struct Instance {
  Graph graph;
  std::optional<IntervalRepresentation> intervals;
  std::optional<RotationSystem> rotation;
  std::vector<std::pair<double, double>> coordinates;
};

// Same GenSpec, same output; throws SchemeError(UnsupportedSpec).
Instance generate(const GenSpec& spec);

Graph grid_graph(int rows, int cols);
Graph cycle_graph(int n);

// Clique on the ground set 0..m-1 plus one vertex per distinct concept.
struct SplitReduction {
  Graph graph;
  SplitPartition partition;
  std::vector<Vertex> concept_vertex;  // per distinct concept
  std::vector<VertexSet> concepts;     // deduplicated, in input order
  int ground = 0;

  // A sample over the ground set, extended by zeros.
  Sample translate(const Sample& over_ground) const;
};

SplitReduction concept_to_split_graph(int ground, const std::vector<VertexSet>& concepts);

}  // namespace ballcomp
