#include "momapf/high_level.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <stdexcept>

namespace momapf {

std::string to_string(SplitStrategy s) {
  switch (s) {
    case SplitStrategy::standard: return "standard";
    case SplitStrategy::cost: return "cost";
    case SplitStrategy::disjoint: return "disjoint";
  }
  return "?";
}

SplitStrategy strategy_from_string(const std::string& s) {
  if (s == "standard") return SplitStrategy::standard;
  if (s == "cost") return SplitStrategy::cost;
  if (s == "disjoint") return SplitStrategy::disjoint;
  throw std::invalid_argument("unknown split strategy: " + s);
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::complete: return "complete";
    case SolveStatus::timeout: return "timeout";
    case SolveStatus::expansion_limit: return "expansion_limit";
    case SolveStatus::node_limit: return "node_limit";
  }
  return "?";
}

const char* to_string(TraceEvent::Kind k) {
  switch (k) {
    case TraceEvent::Kind::pop: return "pop";
    case TraceEvent::Kind::prune: return "prune";
    case TraceEvent::Kind::split: return "split";
    case TraceEvent::Kind::child: return "child";
    case TraceEvent::Kind::solution: return "solution";
  }
  return "?";
}

int occupancy(const Path& path, int t) {
  if (t < 0) throw std::invalid_argument("occupancy: negative timestep");
  int term = path.term_time();
  return path.vertices[t >= term ? term : t];
}

std::optional<Conflict> detect_first_conflict(const Instance& inst,
                                              const std::vector<Path>& paths) {
  const int m = static_cast<int>(paths.size());
  int horizon = 0;
  for (const Path& p : paths) horizon = std::max(horizon, p.term_time());

  for (int t = 0; t <= horizon; ++t) {
    for (int i = 0; i < m; ++i) {
      const int ui = occupancy(paths[i], t);
      for (int j = i + 1; j < m; ++j) {
        const int uj = occupancy(paths[j], t);
        if (ui == uj) return Conflict{ConstraintKind::vertex, i, j, ui, ui, t};
        if (inst.swap_conflicts && t < horizon) {
          const int vi = occupancy(paths[i], t + 1);
          const int vj = occupancy(paths[j], t + 1);
          if (ui != vi && vi == uj && vj == ui)
            return Conflict{ConstraintKind::edge, i, j, ui, vi, t};
        }
      }
    }
  }
  return std::nullopt;
}

std::pair<Constraint, Constraint> constraints_for(const Conflict& c) {
  if (c.kind == ConstraintKind::vertex)
    return {vertex_constraint(c.i, c.v, c.t), vertex_constraint(c.j, c.v, c.t)};
  return {edge_constraint(c.i, c.u, c.v, c.t), edge_constraint(c.j, c.v, c.u, c.t)};
}

namespace {

CostVec sum_costs(const std::vector<Path>& paths) {
  CostVec total = paths.front().cost;
  for (std::size_t i = 1; i < paths.size(); ++i) total += paths[i].cost;
  return total;
}

// exclusion frontiers a fresh root inherits from the lex-earlier siblings of
// its chosen path: everything at least as expensive as an alternative already
// owned by an earlier root is not this root's responsibility
std::vector<std::vector<CostVec>> sibling_exclusions(const std::vector<Path>& frontier) {
  std::vector<std::vector<CostVec>> out(frontier.size());
  for (std::size_t j = 1; j < frontier.size(); ++j) {
    std::vector<CostVec> raw;
    raw.reserve(j);
    for (std::size_t k = 0; k < j; ++k)
      raw.push_back(comax(frontier[j].cost, frontier[k].cost));
    out[j] = nd_filter(raw);
  }
  return out;
}

}  // namespace

bool for_each_root(LowLevel& ll, const std::function<bool(CTNode&&)>& sink) {
  const Instance& inst = ll.instance();
  const int m = static_cast<int>(inst.agents.size());
  const ConstraintSet none(m);

  // copies: with caching off the returned reference only lives until the
  // next request, and all agents' frontiers are needed at once here
  std::vector<std::vector<Path>> frontiers(m);
  std::vector<std::vector<std::vector<CostVec>>> exclusions(m);
  for (int i = 0; i < m; ++i) {
    frontiers[i] = ll.frontier_for(i, none);
    if (frontiers[i].empty()) return true;  // no roots at all
    exclusions[i] = sibling_exclusions(frontiers[i]);
  }

  std::vector<std::size_t> idx(m, 0);
  std::int64_t seq = 0;
  for (;;) {
    CTNode node;
    node.constraints = none;
    node.paths.reserve(m);
    node.lb.reserve(m);
    node.ub.reserve(m);
    for (int i = 0; i < m; ++i) {
      const Path& p = frontiers[i][idx[i]];
      node.paths.push_back(p);
      node.lb.push_back(p.cost);
      node.ub.push_back(exclusions[i][idx[i]]);
    }
    node.cost = sum_costs(node.paths);
    node.seq = seq++;
    if (!sink(std::move(node))) return false;

    int pos = m - 1;  // odometer: last agent varies fastest
    while (pos >= 0 && ++idx[pos] == frontiers[pos].size()) idx[pos--] = 0;
    if (pos < 0) return true;
  }
}

std::vector<CTNode> init_roots(LowLevel& ll) {
  std::vector<CTNode> roots;
  for_each_root(ll, [&](CTNode&& n) {
    roots.push_back(std::move(n));
    return true;
  });
  return roots;
}

namespace {

// shared per-side machinery: each split resolves the conflict by constraining
// one of the two agents and replanning only that agent
struct SideContext {
  int agent;
  ConstraintSet constraints;
  const std::vector<Path>* frontier;
};

SideContext make_side(LowLevel& ll, const CTNode& parent, const Constraint& added) {
  SideContext side;
  side.agent = added.agent;
  side.constraints = parent.constraints.add(added);
  side.frontier = &ll.frontier_for(side.agent, side.constraints);
  return side;
}

CTNode make_child(const CTNode& parent, const SideContext& side, const Path& path,
                  CostVec lb, std::vector<CostVec> ub) {
  CTNode child;
  child.constraints = side.constraints;
  child.paths = parent.paths;
  child.paths[side.agent] = path;
  child.cost = sum_costs(child.paths);
  child.lb = parent.lb;
  child.lb[side.agent] = std::move(lb);
  child.ub = parent.ub;
  child.ub[side.agent] = std::move(ub);
  child.parent = parent.seq;
  return child;
}

// the nondominated lower bounds reachable on this side, in lex order, paired
// with the lex-first frontier path witnessing each bound
std::vector<std::pair<CostVec, const Path*>> side_bounds(const CTNode& parent,
                                                         const SideContext& side) {
  std::vector<CostVec> raw;
  raw.reserve(side.frontier->size());
  for (const Path& p : *side.frontier) raw.push_back(comax(parent.lb[side.agent], p.cost));
  std::vector<CostVec> bounds = nd_filter(raw);
  sort_lex(bounds);

  std::vector<std::pair<CostVec, const Path*>> out;
  out.reserve(bounds.size());
  for (CostVec& b : bounds) {
    const Path* witness = nullptr;
    for (const Path& p : *side.frontier)
      if (comax(parent.lb[side.agent], p.cost) == b) {
        witness = &p;
        break;
      }
    out.emplace_back(std::move(b), witness);
  }
  return out;
}

std::vector<CostVec> tighten_exclusions(const CostVec& lb, const std::vector<CostVec>& ub) {
  std::vector<CostVec> raw;
  raw.reserve(ub.size());
  for (const CostVec& v : ub) raw.push_back(comax(lb, v));
  return nd_filter(raw);
}

}  // namespace

std::vector<CTNode> split_standard(LowLevel& ll, const CTNode& parent, const Conflict& c) {
  auto [ci, cj] = constraints_for(c);
  std::vector<CTNode> children;
  for (const Constraint& added : {ci, cj}) {
    SideContext side = make_side(ll, parent, added);
    for (const Path& p : *side.frontier) {
      CostVec lb = comax(parent.lb[side.agent], p.cost);
      std::vector<CostVec> ub = tighten_exclusions(lb, parent.ub[side.agent]);
      children.push_back(make_child(parent, side, p, std::move(lb), std::move(ub)));
    }
  }
  return children;
}

std::vector<CTNode> split_cost(LowLevel& ll, const CTNode& parent, const Conflict& c) {
  auto [ci, cj] = constraints_for(c);
  std::vector<CTNode> children;
  for (const Constraint& added : {ci, cj}) {
    SideContext side = make_side(ll, parent, added);
    for (auto& [lb, witness] : side_bounds(parent, side)) {
      std::vector<CostVec> ub = tighten_exclusions(lb, parent.ub[side.agent]);
      children.push_back(make_child(parent, side, *witness, std::move(lb), std::move(ub)));
    }
  }
  return children;
}

std::vector<CTNode> split_disjoint(LowLevel& ll, const CTNode& parent, const Conflict& c) {
  auto [ci, cj] = constraints_for(c);
  std::vector<CTNode> children;
  for (const Constraint& added : {ci, cj}) {
    SideContext side = make_side(ll, parent, added);
    // bounds already handed to an emitted sibling are excluded from later
    // ones; a bound excluded by its own frontier yields no child and claims
    // nothing
    std::vector<CostVec> accumulated = parent.ub[side.agent];
    for (auto& [lb, witness] : side_bounds(parent, side)) {
      std::vector<CostVec> ub = tighten_exclusions(lb, accumulated);
      if (contains(ub, lb)) continue;
      children.push_back(make_child(parent, side, *witness, lb, std::move(ub)));
      accumulated.push_back(lb);
    }
  }
  return children;
}

std::vector<CTNode> split(LowLevel& ll, const CTNode& parent, const Conflict& c,
                          SplitStrategy s) {
  switch (s) {
    case SplitStrategy::standard: return split_standard(ll, parent, c);
    case SplitStrategy::cost: return split_cost(ll, parent, c);
    case SplitStrategy::disjoint: return split_disjoint(ll, parent, c);
  }
  throw std::invalid_argument("unknown split strategy");
}

bool path_compatible(const CTNode& node, int agent, const Path& path, SplitStrategy s) {
  if (!path_satisfies(node.constraints, agent, path)) return false;
  if (s == SplitStrategy::standard) return true;
  if (!weakly_dominates(node.lb[agent], path.cost)) return false;
  if (s == SplitStrategy::cost) return true;
  return !any_weakly_dominates(node.ub[agent], path.cost);
}

bool solution_compatible(const CTNode& node, const std::vector<Path>& paths,
                         SplitStrategy s) {
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (!path_compatible(node, static_cast<int>(i), paths[i], s)) return false;
  return true;
}

bool SolutionSet::add(Solution s) {
  for (const Solution& m : members_)
    if (weakly_dominates(m.cost, s.cost)) return false;
  std::erase_if(members_,
                [&](const Solution& m) { return momapf::dominates(s.cost, m.cost); });
  members_.push_back(std::move(s));
  return true;
}

bool SolutionSet::dominates(const CostVec& cost) const {
  for (const Solution& m : members_)
    if (weakly_dominates(m.cost, cost)) return true;
  return false;
}

std::vector<CostVec> SolutionSet::costs() const {
  std::vector<CostVec> out;
  out.reserve(members_.size());
  for (const Solution& m : members_) out.push_back(m.cost);
  return out;
}

namespace {

struct QueueEntry {
  CostVec cost;
  std::int64_t seq;
};

struct QueueAfter {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    int c = lex_compare(a.cost, b.cost);
    if (c != 0) return c > 0;
    return a.seq > b.seq;  // FIFO among equal costs
  }
};

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opt, const SolveHooks* hooks) {
  validate_instance(inst);
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  auto out_of_time = [&] { return opt.time_limit_s > 0.0 && elapsed() >= opt.time_limit_s; };

  LowLevel ll(inst, opt.use_heuristic, opt.use_cache);
  SolveResult res;
  auto finish = [&](SolveStatus status) {
    res.status = status;
    res.stats.ll_requests = ll.requests();
    res.stats.ll_computes = ll.computes();
    res.stats.cache_hits = ll.cache_hits();
    res.stats.wall_time_s = elapsed();
    return res;
  };
  auto trace = [&](TraceEvent ev) {
    if (hooks && hooks->on_trace) hooks->on_trace(ev);
  };

  std::deque<CTNode> nodes;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueAfter> open;
  std::int64_t next_seq = 0;
  bool aborted = false;

  bool done = for_each_root(ll, [&](CTNode&& root) {
    if (out_of_time() || static_cast<std::uint64_t>(next_seq) >= opt.max_nodes) {
      aborted = true;
      return false;
    }
    root.seq = next_seq++;
    res.stats.generations++;
    trace({TraceEvent::Kind::child, root.seq, -1, root.cost, std::nullopt, std::nullopt});
    open.push(QueueEntry{root.cost, root.seq});
    nodes.push_back(std::move(root));
    return true;
  });
  if (!done || aborted)
    return finish(out_of_time() ? SolveStatus::timeout : SolveStatus::node_limit);
  if (nodes.empty()) {
    res.unsolvable = true;
    return finish(SolveStatus::complete);
  }

  while (!open.empty()) {
    if (out_of_time()) return finish(SolveStatus::timeout);
    if (opt.max_expansions && res.stats.expansions >= opt.max_expansions)
      return finish(SolveStatus::expansion_limit);
    if (static_cast<std::uint64_t>(next_seq) >= opt.max_nodes)
      return finish(SolveStatus::node_limit);

    const std::int64_t id = open.top().seq;
    open.pop();
    const CTNode& node = nodes[id];
    res.stats.pops++;

    if (res.solutions.dominates(node.cost)) {
      res.stats.pruned_pops++;
      trace({TraceEvent::Kind::prune, node.seq, node.parent, node.cost, std::nullopt,
             std::nullopt});
      continue;
    }
    res.stats.expansions++;
    trace({TraceEvent::Kind::pop, node.seq, node.parent, node.cost, std::nullopt,
           std::nullopt});

    std::optional<Conflict> conflict = detect_first_conflict(inst, node.paths);
    if (!conflict) {
      res.solutions.add(Solution{node.cost, node.paths});
      trace({TraceEvent::Kind::solution, node.seq, node.parent, node.cost, std::nullopt,
             std::nullopt});
      continue;
    }

    res.stats.splits++;
    trace({TraceEvent::Kind::split, node.seq, node.parent, node.cost, conflict,
           std::nullopt});
    std::vector<CTNode> children = split(ll, node, *conflict, opt.strategy);
    if (hooks && hooks->on_split) hooks->on_split(ll, node, *conflict, children);

    auto [ci, cj] = constraints_for(*conflict);
    for (CTNode& child : children) {
      if (res.solutions.dominates(node.cost)) continue;  // never fires after a clean pop
      child.seq = next_seq++;
      res.stats.generations++;
      res.stats.children++;
      // a child differs from its parent by one constraint on one agent
      std::optional<Constraint> added =
          child.constraints.for_agent(conflict->i).size() !=
                  node.constraints.for_agent(conflict->i).size()
              ? ci
              : cj;
      trace({TraceEvent::Kind::child, child.seq, child.parent, child.cost, std::nullopt,
             added});
      open.push(QueueEntry{child.cost, child.seq});
      nodes.push_back(std::move(child));
    }
  }

  return finish(SolveStatus::complete);
}

}  // namespace momapf
