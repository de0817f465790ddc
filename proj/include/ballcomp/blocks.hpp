#pragma once

#include <optional>
#include <vector>

#include "ballcomp/graph.hpp"

namespace ballcomp {

// Biconnected decomposition. Blocks are sorted vertex lists; bridges are
// two-vertex blocks.
struct BlockTree {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> is_cut;
  std::vector<std::vector<int>> blocks_of;  // vertex -> incident block ids

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<Vertex> cut_vertices() const { return to_list(is_cut); }
  // Node ids of the block-cut tree: blocks are 0..B-1, cut vertex v is B+v.
  int node_of_block(int b) const { return b; }
  int node_of_cut(Vertex v) const { return block_count() + v; }
  // Tree node of C(v): the cut vertex itself, or the unique block holding v.
  int home_node(Vertex v) const;
  // Node path between two tree nodes.
  std::vector<int> node_path(int from, int to) const;
};

BlockTree block_cut_tree(const Graph& g);

// For a cycle block: vertices in clockwise order, starting at the smallest
// id and moving first toward its smaller-id neighbor in the block.
std::vector<Vertex> cycle_order(const Graph& g, const std::vector<Vertex>& block);

bool is_cactus(const Graph& g, const BlockTree& bt);

}  // namespace ballcomp
