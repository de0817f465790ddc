#include "ballcomp/blocks.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ballcomp {

BlockTree block_cut_tree(const Graph& g) {
  const int n = g.n();
  BlockTree bt;
  bt.is_cut.assign(n, false);
  bt.blocks_of.assign(n, {});
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int time = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = time++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent >= 0 || children > 1) bt.is_cut[u] = true;
          std::vector<Vertex> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, w}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          bt.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, -1);
  std::sort(bt.blocks.begin(), bt.blocks.end());
  for (int b = 0; b < bt.block_count(); ++b)
    for (Vertex v : bt.blocks[b]) bt.blocks_of[v].push_back(b);
  for (Vertex v = 0; v < n; ++v) bt.is_cut[v] = bt.blocks_of[v].size() >= 2;
  return bt;
}

int BlockTree::home_node(Vertex v) const {
  if (is_cut[v]) return node_of_cut(v);
  if (blocks_of[v].empty()) return -1;  // single-vertex graph
  return node_of_block(blocks_of[v].front());
}

std::vector<int> BlockTree::node_path(int from, int to) const {
  const int B = block_count();
  const int total = B + static_cast<int>(is_cut.size());
  auto nbrs = [&](int node) {
    std::vector<int> out;
    if (node < B) {
      for (Vertex v : blocks[node])
        if (is_cut[v]) out.push_back(node_of_cut(v));
    } else {
      for (int b : blocks_of[node - B]) out.push_back(b);
    }
    return out;
  };
  std::vector<int> prev(total, -2);
  prev[from] = -1;
  std::deque<int> q{from};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == to) break;
    for (int y : nbrs(x)) {
      if (prev[y] == -2) {
        prev[y] = x;
        q.push_back(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = to; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> cycle_order(const Graph& g, const std::vector<Vertex>& block) {
  VertexSet in(g.n(), false);
  for (Vertex v : block) in[v] = true;
  Vertex start = block.front();
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (in[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == start || next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

bool is_cactus(const Graph& g, const BlockTree& bt) {
  for (const auto& b : bt.blocks) {
    if (b.size() <= 2) continue;
    int inner = 0;
    for (auto [u, v] : g.edges())
      if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) ++inner;
    if (inner != static_cast<int>(b.size())) return false;
  }
  return true;
}

}  // namespace ballcomp
