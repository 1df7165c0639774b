#include "momapf/heuristic.hpp"

#include <queue>
#include <utility>

namespace momapf {

HeuristicTable compute_heuristic(const Graph& g, int goal) {
  HeuristicTable table;
  table.h.assign(g.vertex_count, CostVec(g.objectives, kInfCost));

  // reverse adjacency, per-component weights resolved inside the loop
  std::vector<std::vector<std::pair<int, const CostVec*>>> radj(g.vertex_count);
  for (int u = 0; u < g.vertex_count; ++u)
    for (const auto& e : g.adj[u]) radj[e.to].emplace_back(u, &e.cost);

  for (int k = 0; k < g.objectives; ++k) {
    using Item = std::pair<cost_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    std::vector<cost_t> dist(g.vertex_count, kInfCost);
    dist[goal] = 0;
    open.emplace(0, goal);
    while (!open.empty()) {
      auto [d, v] = open.top();
      open.pop();
      if (d > dist[v]) continue;
      for (const auto& [u, cost] : radj[v]) {
        cost_t nd = d + (*cost)[k];
        if (nd < dist[u]) {
          dist[u] = nd;
          open.emplace(nd, u);
        }
      }
    }
    for (int v = 0; v < g.vertex_count; ++v) table.h[v][k] = dist[v];
  }
  return table;
}

HeuristicTable zero_heuristic(const Graph& g) {
  HeuristicTable table;
  table.h.assign(g.vertex_count, CostVec(g.objectives, 0));
  return table;
}

}  // namespace momapf
