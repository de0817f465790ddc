#include "ballcomp/sphere_order.hpp"

#include <functional>

namespace ballcomp {

SphereOrder dfs_sphere_order(const Graph& tree, Vertex s, int rho) {
  SphereOrder so;
  so.root = s;
  so.radius = rho;
  so.label.assign(tree.n(), -1);
  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex u, Vertex parent, int depth) {
    if (depth == rho) {
      so.label[u] = so.size();
      so.order.push_back(u);
      return;
    }
    for (Vertex w : tree.neighbors(u))
      if (w != parent) dfs(w, u, depth + 1);
  };
  if (rho >= 0) dfs(s, -1, 0);
  return so;
}

std::optional<Vertex> phi(const DistanceMatrix& D, const SphereOrder& so, Vertex v, int r, bool positive) {
  const int k = so.size();
  if (k == 0) return std::nullopt;
  std::vector<bool> in(k);
  int count = 0;
  for (int i = 0; i < k; ++i) {
    bool inside = D(v, so.order[i]) <= r;
    in[i] = positive ? inside : !inside;
    count += in[i];
  }
  if (count == 0 || count == k) return std::nullopt;
  for (int i = 0; i < k; ++i)
    if (in[i] && !in[(i + 1) % k]) return so.order[i];
  return std::nullopt;
}

bool is_circular_interval(const std::vector<bool>& marked) {
  const int k = static_cast<int>(marked.size());
  int boundaries = 0;
  for (int i = 0; i < k; ++i)
    if (marked[i] && !marked[(i + 1) % k]) ++boundaries;
  return boundaries <= 1;
}

}  // namespace ballcomp
