#pragma once

#include <vector>

#include "momapf/constraints.hpp"
#include "momapf/cost_vec.hpp"
#include "momapf/high_level.hpp"
#include "momapf/instance.hpp"
#include "momapf/low_level.hpp"

namespace momapf {

// Reference solver: exhaustive label search over joint states (all agent
// positions plus a terminated flag per agent), independent of the search
// code it checks. Intended for small instances only.
struct OracleResult {
  std::vector<Solution> frontier;  // lex-sorted by cost, with witness paths
  bool fixpoint = false;  // frontier unchanged after doubling the cost bound
  CostVec bound_used;     // per-objective cost cap of the reported frontier
};

// Runs the joint search under a per-objective cost bound seeded from
// single-agent distances, doubling the bound until the frontier stops
// changing (or max_doublings is hit, leaving fixpoint false).
OracleResult joint_pareto(const Instance& inst, int max_doublings = 16);

// Every constraint-obeying start→goal walk of at most max_steps actions,
// including walks that pass through the goal and return. Exhaustive, so keep
// max_steps small.
std::vector<Path> enumerate_paths(const Graph& g, const Agent& agent,
                                  const ConstraintSet& cons, int max_steps);

// All joint plans (one bounded walk per agent) compatible with the node
// under the given strategy's membership rules. Conflicts are not filtered;
// compatibility is about regions of plan space, not validity.
std::vector<std::vector<Path>> enumerate_compatible(const Instance& inst, const CTNode& node,
                                                    int max_steps, SplitStrategy s);

}  // namespace momapf
