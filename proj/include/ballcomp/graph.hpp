#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace ballcomp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// Indicator vector over 0..n-1.
using VertexSet = std::vector<bool>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple connected undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * n_ + v] != 0; }
  // Edges as (min, max), sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<char> matrix_;
};

// Builds without the connectivity check; used by generators before repair.
bool is_connected(int n, const std::vector<Edge>& edges);

VertexSet to_set(int n, const std::vector<Vertex>& vs);
std::vector<Vertex> to_list(const VertexSet& s);

}  // namespace ballcomp
