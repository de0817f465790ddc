#include "ballcomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ballcomp {

bool is_connected(int n, const std::vector<Edge>& edges) {
  if (n <= 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (matrix_[u * n + v]) throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
  if (!is_connected(n, edges_)) throw GraphError("graph is not connected");
}

VertexSet to_set(int n, const std::vector<Vertex>& vs) {
  VertexSet s(n, false);
  for (Vertex v : vs) s[v] = true;
  return s;
}

std::vector<Vertex> to_list(const VertexSet& s) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

}  // namespace ballcomp
