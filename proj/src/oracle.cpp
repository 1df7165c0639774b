#include "momapf/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

#include "momapf/heuristic.hpp"

namespace momapf {

namespace {

// single-objective forward Dijkstra, kept local so the oracle does not lean
// on the heuristic code it is meant to check
std::vector<cost_t> scalar_dist(const Graph& g, int source, int k) {
  std::vector<cost_t> dist(g.vertex_count, kInfCost);
  using Item = std::pair<cost_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[source] = 0;
  open.emplace(0, source);
  while (!open.empty()) {
    auto [d, v] = open.top();
    open.pop();
    if (d > dist[v]) continue;
    for (const Edge& e : g.adj[v]) {
      cost_t nd = d + e.cost[k];
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        open.emplace(nd, e.to);
      }
    }
  }
  return dist;
}

struct JointKey {
  std::vector<int> pos;
  std::uint32_t mask = 0;
  bool operator==(const JointKey&) const = default;
};

struct JointKeyHash {
  std::size_t operator()(const JointKey& k) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](std::size_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (int p : k.pos) mix(static_cast<std::size_t>(p) + 1);
    mix(k.mask);
    return h;
  }
};

struct JointLabel {
  JointKey key;
  CostVec g;
  int parent;
  bool alive;
};

struct JointHeapEntry {
  CostVec g;
  std::uint32_t seq;
  int id;
};

struct JointHeapAfter {
  bool operator()(const JointHeapEntry& a, const JointHeapEntry& b) const {
    int c = lex_compare(a.g, b.g);
    if (c != 0) return c > 0;
    return a.seq > b.seq;
  }
};

std::vector<Path> witness_paths(const Instance& inst, const std::vector<JointLabel>& arena,
                                int id) {
  std::vector<const JointKey*> chain;
  for (int cur = id; cur >= 0; cur = arena[cur].parent) chain.push_back(&arena[cur].key);
  std::reverse(chain.begin(), chain.end());

  const int m = static_cast<int>(inst.agents.size());
  std::vector<Path> paths(m);
  for (int i = 0; i < m; ++i) {
    // the step that sets the terminated bit is a free no-op, so the path
    // ends at the last state where the agent was still active
    std::size_t first_done = chain.size();
    for (std::size_t t = 0; t < chain.size(); ++t)
      if (chain[t]->mask & (1u << i)) {
        first_done = t;
        break;
      }
    for (std::size_t t = 0; t < first_done; ++t)
      paths[i].vertices.push_back(chain[t]->pos[i]);
    paths[i].cost = CostVec(inst.graph.objectives, 0);
    for (std::size_t t = 0; t + 1 < paths[i].vertices.size(); ++t)
      paths[i].cost += *inst.graph.edge_cost(paths[i].vertices[t], paths[i].vertices[t + 1]);
  }
  return paths;
}

std::vector<Solution> joint_search(const Instance& inst, const CostVec& bound) {
  const Graph& g = inst.graph;
  const int m = static_cast<int>(inst.agents.size());
  const std::uint32_t all_done = (1u << m) - 1;

  std::vector<JointLabel> arena;
  std::unordered_map<JointKey, std::vector<int>, JointKeyHash> states;
  std::priority_queue<JointHeapEntry, std::vector<JointHeapEntry>, JointHeapAfter> open;
  std::uint32_t next_seq = 0;
  std::vector<Solution> found;

  auto solution_dominates = [&](const CostVec& c) {
    for (const Solution& s : found)
      if (weakly_dominates(s.cost, c)) return true;
    return false;
  };

  auto offer = [&](JointKey key, CostVec ng, int parent) {
    for (std::size_t k = 0; k < ng.size(); ++k)
      if (ng[k] > bound[k]) return;
    if (solution_dominates(ng)) return;
    auto& bucket = states[key];
    for (int id : bucket)
      if (weakly_dominates(arena[id].g, ng)) return;
    std::erase_if(bucket, [&](int id) {
      if (dominates(ng, arena[id].g)) {
        arena[id].alive = false;
        return true;
      }
      return false;
    });
    int id = static_cast<int>(arena.size());
    arena.push_back(JointLabel{std::move(key), ng, parent, true});
    bucket.push_back(id);
    open.push(JointHeapEntry{std::move(ng), next_seq++, id});
  };

  {
    JointKey start;
    start.pos.reserve(m);
    for (const Agent& a : inst.agents) start.pos.push_back(a.start);
    offer(std::move(start), CostVec(g.objectives, 0), -1);
  }

  // per-agent move menu is recomputed per expansion: edges in adjacency
  // order, then terminate when standing on the goal, and only the free
  // stay-put once terminated
  struct Option {
    int to;
    const CostVec* cost;  // nullptr: free (terminate / stay terminated)
    bool done;
  };

  while (!open.empty()) {
    JointHeapEntry top = open.top();
    open.pop();
    const int id = top.id;
    if (!arena[id].alive) continue;
    if (solution_dominates(arena[id].g)) continue;

    const JointKey key = arena[id].key;  // copy: arena may grow below
    const CostVec g_now = arena[id].g;

    if (key.mask == all_done) {
      found.push_back(Solution{g_now, witness_paths(inst, arena, id)});
      continue;
    }

    std::vector<std::vector<Option>> menu(m);
    for (int i = 0; i < m; ++i) {
      if (key.mask & (1u << i)) {
        menu[i].push_back(Option{key.pos[i], nullptr, true});
        continue;
      }
      for (const Edge& e : g.adj[key.pos[i]]) menu[i].push_back(Option{e.to, &e.cost, false});
      if (key.pos[i] == inst.agents[i].goal) menu[i].push_back(Option{key.pos[i], nullptr, true});
    }

    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      JointKey nk;
      nk.pos.resize(m);
      nk.mask = key.mask;
      CostVec ng = g_now;
      for (int i = 0; i < m; ++i) {
        const Option& o = menu[i][pick[i]];
        nk.pos[i] = o.to;
        if (o.done) nk.mask |= (1u << i);
        if (o.cost) ng += *o.cost;
      }

      bool ok = true;
      for (int i = 0; i < m && ok; ++i)
        for (int j = i + 1; j < m && ok; ++j) {
          if (nk.pos[i] == nk.pos[j]) ok = false;
          if (ok && inst.swap_conflicts && key.pos[i] != nk.pos[i] &&
              nk.pos[i] == key.pos[j] && nk.pos[j] == key.pos[i])
            ok = false;
        }
      if (ok) offer(std::move(nk), std::move(ng), id);

      int pos = m - 1;
      while (pos >= 0 && ++pick[pos] == menu[pos].size()) pick[pos--] = 0;
      if (pos < 0) break;
    }
  }

  return found;
}

std::vector<CostVec> frontier_costs(const std::vector<Solution>& sols) {
  std::vector<CostVec> out;
  out.reserve(sols.size());
  for (const Solution& s : sols) out.push_back(s.cost);
  return out;
}

}  // namespace

OracleResult joint_pareto(const Instance& inst, int max_doublings) {
  validate_instance(inst);
  const Graph& g = inst.graph;

  OracleResult res;
  CostVec seed(g.objectives, 0);
  for (std::size_t k = 0; k < seed.size(); ++k) {
    cost_t total = 0;
    for (const Agent& a : inst.agents) {
      cost_t d = scalar_dist(g, a.start, static_cast<int>(k))[a.goal];
      if (d >= kInfCost) {  // some agent can never reach its goal
        res.fixpoint = true;
        res.bound_used = CostVec(g.objectives, 0);
        return res;
      }
      total += d;
    }
    seed[k] = 4 + 2 * total;
  }

  CostVec bound = seed;
  std::vector<Solution> prev = joint_search(inst, bound);
  for (int round = 0; round < max_doublings; ++round) {
    CostVec doubled = bound + bound;
    std::vector<Solution> next = joint_search(inst, doubled);
    if (frontier_costs(prev) == frontier_costs(next)) {
      res.frontier = std::move(next);
      res.fixpoint = true;
      res.bound_used = doubled;
      return res;
    }
    bound = doubled;
    prev = std::move(next);
  }
  res.frontier = std::move(prev);
  res.fixpoint = false;
  res.bound_used = bound;
  return res;
}

std::vector<Path> enumerate_paths(const Graph& g, const Agent& agent,
                                  const ConstraintSet& cons, int max_steps) {
  std::vector<Path> out;
  for (const auto& c : cons.for_agent(agent.id))
    if (c.kind == ConstraintKind::vertex && c.t == 0 && c.v == agent.start) return out;

  std::vector<int> walk{agent.start};

  auto rec = [&](auto&& self, int v, int t, const CostVec& cost) -> void {
    if (v == agent.goal && !cons.blocks_goal_at_or_after(agent.id, agent.goal, t))
      out.push_back(Path{walk, cost});
    if (t == max_steps) return;
    for (const Edge& e : g.adj[v]) {
      if (cons.forbids(agent.id, v, e.to, t)) continue;
      walk.push_back(e.to);
      self(self, e.to, t + 1, cost + e.cost);
      walk.pop_back();
    }
  };
  rec(rec, agent.start, 0, CostVec(g.objectives, 0));
  return out;
}

std::vector<std::vector<Path>> enumerate_compatible(const Instance& inst, const CTNode& node,
                                                    int max_steps, SplitStrategy s) {
  const int m = static_cast<int>(inst.agents.size());
  std::vector<std::vector<Path>> per_agent(m);
  for (int i = 0; i < m; ++i)
    for (Path& p : enumerate_paths(inst.graph, inst.agents[i], node.constraints, max_steps))
      if (path_compatible(node, i, p, s)) per_agent[i].push_back(std::move(p));

  std::vector<std::vector<Path>> tuples;
  for (const auto& list : per_agent)
    if (list.empty()) return tuples;

  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    std::vector<Path> tuple;
    tuple.reserve(m);
    for (int i = 0; i < m; ++i) tuple.push_back(per_agent[i][pick[i]]);
    tuples.push_back(std::move(tuple));
    int pos = m - 1;
    while (pos >= 0 && ++pick[pos] == per_agent[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return tuples;
}

}  // namespace momapf
