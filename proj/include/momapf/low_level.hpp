#pragma once

#include <vector>

#include "momapf/constraints.hpp"
#include "momapf/heuristic.hpp"
#include "momapf/instance.hpp"

namespace momapf {

// A single-agent plan as the vertex occupied at each timestep; the agent
// terminates at vertices.back() (its goal) and occupies it forever after.
struct Path {
  std::vector<int> vertices;  // vertices[t] for t = 0 .. term_time()
  CostVec cost;

  int term_time() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

// every action passes the constraint check and the terminate time clears all
// later vertex constraints on the goal (a terminated agent never moves again)
bool path_satisfies(const ConstraintSet& cons, int agent, const Path& path);

// Cost-unique Pareto-optimal frontier of constraint-satisfying paths from
// agent.start to agent.goal, lex-sorted by cost; one witness path per cost.
// Empty result means the goal is unreachable under the constraints.
//
// Label-setting search over states (vertex, min(t, T_cap)) where T_cap is one
// past the agent's latest constraint timestep; beyond T_cap the constraint
// environment is time-invariant so labels collapse onto vertex-only states.
// The open list pops lexicographically smallest f = g + h; a label dies if
// its g is weakly dominated at its state or its f is weakly dominated by a
// finalized goal cost. The search drains the open list so the frontier is
// complete; positive edge costs plus the state collapse bound the label sets
// (componentwise-incomparable vectors cannot pile up forever).
std::vector<Path> pareto_paths(const Graph& g, const Agent& agent, const ConstraintSet& cons,
                               const HeuristicTable& h);

// Shared per-solve planner state: one heuristic table per agent, the frontier
// cache, and call counters.
class LowLevel {
 public:
  LowLevel(const Instance& inst, bool use_heuristic = true, bool use_cache = true);

  const std::vector<Path>& frontier_for(int agent, const ConstraintSet& cons);

  const Instance& instance() const { return *inst_; }
  std::uint64_t requests() const { return cache_.hits + cache_.misses; }
  std::uint64_t computes() const { return cache_.misses; }
  std::uint64_t cache_hits() const { return cache_.hits; }

 private:
  const Instance* inst_;
  std::vector<HeuristicTable> h_;
  FrontierCache<std::vector<Path>> cache_;
};

}  // namespace momapf
