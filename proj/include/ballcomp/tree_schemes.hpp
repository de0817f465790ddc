#pragma once

#include <optional>
#include <vector>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"
#include "ballcomp/sphere_order.hpp"

namespace ballcomp {

bool is_tree(const Graph& g);

// Ball of the metric tree: center is vertex a (a == b) or the midpoint of
// edge ab; radius stored doubled.
struct MetricBall {
  Vertex a = -1;
  Vertex b = -1;
  int twice_radius = 0;
  VertexSet trace;
  bool empty() const { return a < 0; }
};

std::vector<Vertex> tree_uscs_compress(const GraphMetric& t, const Sample& X);
MetricBall tree_uscs_reconstruct(const GraphMetric& t, const std::vector<Vertex>& Y);

// Unlabeled size-2 scheme; outputs are metric balls, so properness is not
// claimed for the combinatorial family.
class TreeUscs : public Scheme {
 public:
  explicit TreeUscs(GraphMetric t);
  std::string id() const override { return "tree-uscs"; }
  int size_bound() const override { return 2; }
  bool proper() const override { return false; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

 private:
  std::vector<Ball> family_;
};

// Labeled size-2 scheme for all balls of a tree.
class TreeLscs : public Scheme {
 public:
  explicit TreeLscs(GraphMetric t);
  std::string id() const override { return "tree-lscs"; }
  int size_bound() const override { return 2; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

 private:
  std::vector<Ball> family_;
};

// How samples with no positive vertex are handled by the fixed-radius
// schemes: return the empty ball, or run the full case analysis and return
// a genuine r-ball.
enum class NoPositives { EmptyBall, RadiusBall };

// Common machinery of the two fixed-radius tree schemes.
class TreeFixedRadiusBase : public Scheme {
 public:
  TreeFixedRadiusBase(GraphMetric t, int r, NoPositives mode);
  std::optional<int> radius() const override { return r_; }

  // Center designator search result: y = phi_s^{sign t}(t).
  struct Designation {
    Vertex s;
    Vertex t;
    Vertex center;
  };
  bool all_containing_balls_realize(const Sample& X) const;
  std::optional<Vertex> sphere_case(const Sample& X) const;
  std::vector<Designation> designators(const Sample& X) const;
  std::optional<Vertex> designated_center(Vertex s, Vertex t, bool t_positive) const;
  const SphereOrder& sphere_order(Vertex s) const { return orders_[s]; }
  Ball r_ball(Vertex x) const { return Ball::make(gm_.dist, x, r_); }
  // Smallest-id center whose r-ball contains `inside` and avoids `outside`.
  std::optional<Ball> any_ball(const std::vector<Vertex>& inside, const std::vector<Vertex>& outside) const;
  void require_realizable(const Sample& X) const;
  NoPositives mode() const { return mode_; }

 protected:
  int r_;
  NoPositives mode_;
  std::vector<Ball> family_;
  std::vector<SphereOrder> orders_;
};

// Size-2 scheme for r-balls; slot order carries information.
class TreeFixedRadius : public TreeFixedRadiusBase {
 public:
  TreeFixedRadius(GraphMetric t, int r, NoPositives mode = NoPositives::EmptyBall)
      : TreeFixedRadiusBase(std::move(t), r, mode) {}
  std::string id() const override { return "tree-fixed-r"; }
  int size_bound() const override { return 2; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;
};

// Size-6 scheme for r-balls without extra information: the reconstructor
// only sees the set of signed vertices (slot order is ignored; ℓ' is the
// vertex id).
class TreeFixedRadiusNoInfo : public TreeFixedRadiusBase {
 public:
  TreeFixedRadiusNoInfo(GraphMetric t, int r, NoPositives mode = NoPositives::EmptyBall)
      : TreeFixedRadiusBase(std::move(t), r, mode) {}
  std::string id() const override { return "tree-noinfo"; }
  int size_bound() const override { return 6; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  // Compression plus the encoding line used: 0 for the vector-scheme cases
  // (1), (2) and (3'') and 1..6 for the replacement lines.
  std::pair<CompressedSample, int> compress_traced(const Sample& X) const;
};

}  // namespace ballcomp
