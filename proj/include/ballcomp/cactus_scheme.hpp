#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ballcomp/blocks.hpp"
#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

bool is_cycle_graph(const Graph& g);

// The unique edge (x0, y0) of a path a = path.front(), b = path.back() with
// d'(x0,b) - d'(x0,a) in {1,2} and x0 before y0. Returns the index of x0.
std::size_t locate_center_edge(const std::vector<Vertex>& path);

// Size-3 scheme for balls of a cycle.
class CycleScheme : public Scheme {
 public:
  explicit CycleScheme(GraphMetric c);
  std::string id() const override { return "cycle"; }
  int size_bound() const override { return 3; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

 private:
  std::vector<Vertex> order_;
  std::vector<int> index_;
  std::vector<Ball> family_;
};

// Path of blocks C(u,v) of the block-cut tree. Positions along the chain:
// junction j_i has position 2i (j_0 = u, j_m = v) and a non-junction
// vertex of block B_i has position 2i-1.
struct BlockChain {
  std::vector<int> blocks;
  std::vector<Vertex> junction;
  std::vector<int> position;  // -1 outside the chain
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(blocks.size()); }
  bool contains(Vertex v) const { return position[v] >= 0; }
};

// Size-6 scheme for balls of a cactus; three pairs (α1, α2, α3).
class CactusScheme : public Scheme {
 public:
  explicit CactusScheme(GraphMetric g);
  std::string id() const override { return "cactus"; }
  int size_bound() const override { return 6; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  // Compression plus the case label ("C1".."C5v").
  std::pair<CompressedSample, std::string> compress_traced(const Sample& X) const;
  // When set, compress checks the supporting lemmas and throws
  // InvariantViolated on a mismatch.
  void set_check_invariants(bool on) { check_ = on; }

  BlockChain chain(Vertex u, Vertex v) const;
  const BlockTree& blocks() const { return bt_; }
  const std::vector<Vertex>& clockwise(int block) const { return orders_[block]; }

 private:
  Vertex chain_gate(const BlockChain& ch, Vertex z) const;
  Vertex block_gate(int block, Vertex z) const;
  // Arc of a cycle block from a to b, clockwise or counterclockwise.
  std::vector<Vertex> arc(int block, Vertex a, Vertex b, bool clockwise) const;
  Ball covering_ball() const;

  BlockTree bt_;
  std::vector<std::vector<Vertex>> orders_;
  std::vector<Ball> family_;
  bool check_ = false;
};

}  // namespace ballcomp
