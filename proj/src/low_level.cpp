#include "momapf/low_level.hpp"

#include <algorithm>
#include <queue>

namespace momapf {

bool path_satisfies(const ConstraintSet& cons, int agent, const Path& path) {
  if (path.vertices.empty()) return false;
  int term = path.term_time();
  for (int t = 0; t < term; ++t)
    if (cons.forbids(agent, path.vertices[t], path.vertices[t + 1], t)) return false;
  // occupying the start at t=0 counts as vertex usage too
  for (const auto& c : cons.for_agent(agent))
    if (c.kind == ConstraintKind::vertex && c.t == 0 && c.v == path.vertices.front()) return false;
  return !cons.blocks_goal_at_or_after(agent, path.vertices.back(), term);
}

namespace {

struct Label {
  int vertex;
  int tc;  // min(true timestep, T_cap)
  int parent;
  bool alive;
  CostVec g;
  CostVec f;
};

struct HeapEntry {
  CostVec f;
  std::uint32_t seq;
  std::int32_t id;
};

struct HeapAfter {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    int c = lex_compare(a.f, b.f);
    if (c != 0) return c > 0;
    return a.seq > b.seq;  // FIFO among equal keys
  }
};

std::vector<int> chain_vertices(const std::vector<Label>& arena, int id) {
  std::vector<int> out;
  for (int cur = id; cur >= 0; cur = arena[cur].parent) out.push_back(arena[cur].vertex);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Path> pareto_paths(const Graph& g, const Agent& agent, const ConstraintSet& cons,
                               const HeuristicTable& h) {
  const int goal = agent.goal;
  const int t_cap = cons.latest_time(agent.id) + 1;

  // a vertex constraint on the start at t=0 can never be satisfied
  for (const auto& c : cons.for_agent(agent.id))
    if (c.kind == ConstraintKind::vertex && c.t == 0 && c.v == agent.start) return {};
  if (h.at(agent.start)[0] >= kInfCost) return {};

  std::vector<Label> arena;
  std::vector<std::vector<int>> state_labels(static_cast<std::size_t>(g.vertex_count) *
                                             (t_cap + 1));
  auto state_of = [&](int vertex, int tc) { return static_cast<std::size_t>(vertex) * (t_cap + 1) + tc; };

  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapAfter> open;
  std::uint32_t next_seq = 0;

  std::vector<CostVec> goal_costs;  // finalized frontier costs, in pop order
  std::vector<Path> result;

  // Offers a label at (vertex, tc); dominated offers die here, equal-cost
  // offers may only replace the stored witness chain by a lexicographically
  // larger vertex sequence.
  auto offer = [&](int vertex, int tc, CostVec ng, CostVec nf, int parent) {
    auto& bucket = state_labels[state_of(vertex, tc)];
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      Label& x = arena[bucket[i]];
      if (weakly_dominates(x.g, ng)) {
        if (x.g == ng) {
          std::vector<int> candidate =
              parent >= 0 ? chain_vertices(arena, parent) : std::vector<int>();
          candidate.push_back(vertex);
          std::vector<int> incumbent = chain_vertices(arena, bucket[i]);
          if (std::lexicographical_compare(incumbent.begin(), incumbent.end(), candidate.begin(),
                                           candidate.end()))
            x.parent = parent;
        }
        return;
      }
    }
    std::erase_if(bucket, [&](int id) {
      if (dominates(ng, arena[id].g)) {
        arena[id].alive = false;
        return true;
      }
      return false;
    });
    int id = static_cast<int>(arena.size());
    arena.push_back(Label{vertex, tc, parent, true, std::move(ng), nf});
    bucket.push_back(id);
    open.push(HeapEntry{std::move(nf), next_seq++, id});
  };

  {
    CostVec g0(g.objectives, 0);
    CostVec f0 = g0 + h.at(agent.start);
    offer(agent.start, std::min(0, t_cap), std::move(g0), std::move(f0), -1);
  }

  while (!open.empty()) {
    HeapEntry top = open.top();
    open.pop();
    const int id = top.id;
    if (!arena[id].alive) continue;
    if (any_weakly_dominates(goal_costs, arena[id].f)) continue;

    const int vertex = arena[id].vertex;
    const int tc = arena[id].tc;

    if (vertex == goal) {
      // terminating is legal unless a later vertex constraint still pins the
      // goal; labels past T_cap are beyond every constraint by construction
      bool legal = tc >= t_cap || !cons.blocks_goal_at_or_after(agent.id, goal, tc);
      if (legal && !any_weakly_dominates(goal_costs, arena[id].g)) {
        Path p;
        p.vertices = chain_vertices(arena, id);
        p.cost = arena[id].g;
        goal_costs.push_back(p.cost);
        result.push_back(std::move(p));
      }
      // fall through: leaving and returning later can still pay off when a
      // constraint blocks the goal now
    }

    for (const auto& e : g.adj[vertex]) {
      if (tc < t_cap && cons.forbids(agent.id, vertex, e.to, tc)) continue;
      if (h.at(e.to)[0] >= kInfCost) continue;  // goal unreachable from there
      CostVec ng = arena[id].g + e.cost;
      CostVec nf = ng + h.at(e.to);
      if (any_weakly_dominates(goal_costs, nf)) continue;
      offer(e.to, std::min(tc + 1, t_cap), std::move(ng), std::move(nf), id);
    }
  }

  return result;
}

LowLevel::LowLevel(const Instance& inst, bool use_heuristic, bool use_cache) : inst_(&inst) {
  h_.reserve(inst.agents.size());
  for (const Agent& a : inst.agents)
    h_.push_back(use_heuristic ? compute_heuristic(inst.graph, a.goal)
                               : zero_heuristic(inst.graph));
  cache_.enabled = use_cache;
}

const std::vector<Path>& LowLevel::frontier_for(int agent, const ConstraintSet& cons) {
  return cache_.lookup_or_compute(agent, cons, [&] {
    return pareto_paths(inst_->graph, inst_->agents[agent], cons, h_[agent]);
  });
}

}  // namespace momapf
