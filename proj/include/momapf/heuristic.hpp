#pragma once

#include <limits>
#include <vector>

#include "momapf/instance.hpp"

namespace momapf {

// large enough to mark unreachable, small enough that g + h never overflows
inline constexpr cost_t kInfCost = std::numeric_limits<cost_t>::max() / 4;

// h(v)[k] = exact single-objective shortest distance from v to the goal using
// component k alone; admissible and consistent per component.
struct HeuristicTable {
  std::vector<CostVec> h;
  const CostVec& at(int v) const { return h[v]; }
};

// per-objective Dijkstra on the reversed graph, seeded at the goal
HeuristicTable compute_heuristic(const Graph& g, int goal);

// all-zero table of the right shape, for runs without the heuristic
HeuristicTable zero_heuristic(const Graph& g);

}  // namespace momapf
