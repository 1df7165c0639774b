#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momapf/constraints.hpp"
#include "momapf/cost_vec.hpp"
#include "momapf/instance.hpp"
#include "momapf/low_level.hpp"

namespace momapf {

enum class SplitStrategy { standard, cost, disjoint };

std::string to_string(SplitStrategy s);
SplitStrategy strategy_from_string(const std::string& s);  // throws std::invalid_argument

// First disagreement between two joint plans. For a vertex conflict u == v;
// for an edge conflict agent i moves u->v while agent j moves v->u at step t.
struct Conflict {
  ConstraintKind kind = ConstraintKind::vertex;
  int i = -1;
  int j = -1;
  int u = -1;
  int v = -1;
  int t = 0;
  bool operator==(const Conflict&) const = default;
};

// Where a path's agent sits at step t; terminated agents stay at their goal.
int occupancy(const Path& path, int t);

// Scans steps in order; within a step agent pairs (i,j) in lexicographic
// order, checking the vertex collision before the swap. Swaps are only
// reported when the instance says they matter.
std::optional<Conflict> detect_first_conflict(const Instance& inst,
                                              const std::vector<Path>& paths);

// The two constraints that resolve a conflict, one per involved agent
// (first entry constrains agent i, second agent j).
std::pair<Constraint, Constraint> constraints_for(const Conflict& c);

struct CTNode {
  ConstraintSet constraints;
  std::vector<Path> paths;
  CostVec cost;                         // sum of path costs
  std::vector<CostVec> lb;              // per-agent cost lower bound
  std::vector<std::vector<CostVec>> ub; // per-agent exclusion frontier
  std::int64_t seq = -1;
  std::int64_t parent = -1;
};

// Enumerates the full cross product of unconstrained frontiers, last agent
// varying fastest. The sink may return false to abort early; the return
// value says whether enumeration ran to completion.
bool for_each_root(LowLevel& ll, const std::function<bool(CTNode&&)>& sink);
std::vector<CTNode> init_roots(LowLevel& ll);

// All three splits resolve the same conflict and keep the lb/ub bookkeeping
// in the same shape so children of any strategy can be re-split by another.
std::vector<CTNode> split_standard(LowLevel& ll, const CTNode& parent, const Conflict& c);
std::vector<CTNode> split_cost(LowLevel& ll, const CTNode& parent, const Conflict& c);
std::vector<CTNode> split_disjoint(LowLevel& ll, const CTNode& parent, const Conflict& c);
std::vector<CTNode> split(LowLevel& ll, const CTNode& parent, const Conflict& c,
                          SplitStrategy s);

// Membership tests for the region of plan space a node is responsible for.
// standard: path obeys the node's constraints. cost: additionally the node's
// per-agent lower bound weakly dominates the path cost. disjoint: cost rules
// plus no exclusion-frontier entry weakly dominates the path cost.
bool path_compatible(const CTNode& node, int agent, const Path& path, SplitStrategy s);
bool solution_compatible(const CTNode& node, const std::vector<Path>& paths,
                         SplitStrategy s);

struct Solution {
  CostVec cost;
  std::vector<Path> paths;
};

class SolutionSet {
 public:
  // rejects anything weakly dominated by a member (equal costs included),
  // evicts members the newcomer strictly dominates
  bool add(Solution s);
  bool dominates(const CostVec& cost) const;  // some member weakly dominates cost
  const std::vector<Solution>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::vector<CostVec> costs() const;

 private:
  std::vector<Solution> members_;
};

struct SearchStats {
  std::uint64_t pops = 0;
  std::uint64_t pruned_pops = 0;
  std::uint64_t expansions = 0;   // pops that survived pruning
  std::uint64_t generations = 0;  // roots + children pushed
  std::uint64_t splits = 0;
  std::uint64_t children = 0;
  std::uint64_t ll_requests = 0;
  std::uint64_t ll_computes = 0;
  std::uint64_t cache_hits = 0;
  double wall_time_s = 0.0;

  double mean_branching() const {
    return splits ? static_cast<double>(children) / static_cast<double>(splits) : 0.0;
  }
};

enum class SolveStatus { complete, timeout, expansion_limit, node_limit };
std::string to_string(SolveStatus s);

struct TraceEvent {
  enum class Kind { pop, prune, split, child, solution };
  Kind kind = Kind::pop;
  std::int64_t seq = -1;
  std::int64_t parent = -1;
  CostVec cost;
  std::optional<Conflict> conflict;   // split events
  std::optional<Constraint> added;    // child events (absent for roots)
};
const char* to_string(TraceEvent::Kind k);

struct SolveHooks {
  // fired right after a popped node is split, before children enter the queue
  std::function<void(LowLevel&, const CTNode&, const Conflict&, const std::vector<CTNode>&)>
      on_split;
  std::function<void(const TraceEvent&)> on_trace;
};

struct SolveOptions {
  SplitStrategy strategy = SplitStrategy::standard;
  double time_limit_s = 0.0;        // <= 0: no limit
  std::uint64_t max_expansions = 0; // 0: no limit
  std::uint64_t max_nodes = 1'000'000;
  bool use_heuristic = true;
  bool use_cache = true;
};

struct SolveResult {
  SolutionSet solutions;
  SearchStats stats;
  SolveStatus status = SolveStatus::complete;
  bool unsolvable = false;  // some agent has no feasible path at all
};

SolveResult solve(const Instance& inst, const SolveOptions& opt = {},
                  const SolveHooks* hooks = nullptr);

}  // namespace momapf
