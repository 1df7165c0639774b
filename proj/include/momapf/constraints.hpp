#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace momapf {

enum class ConstraintKind : std::uint8_t { vertex = 0, edge = 1 };

// A vertex constraint <agent, v, t> prohibits the agent from occupying v at
// timestep t. An edge constraint <agent, u, v, t> prohibits the agent from
// leaving u at timestep t along the directed edge to v (arriving at t+1).
struct Constraint {
  ConstraintKind kind = ConstraintKind::vertex;
  int agent = -1;
  int u = -1;  // edge source; unused (-1) for vertex constraints
  int v = -1;  // blocked vertex, or edge target
  int t = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline Constraint vertex_constraint(int agent, int v, int t) {
  return Constraint{ConstraintKind::vertex, agent, -1, v, t};
}
inline Constraint edge_constraint(int agent, int u, int v, int t) {
  return Constraint{ConstraintKind::edge, agent, u, v, t};
}

// canonical order (kind, t, u, v); agent is fixed by the containing bucket
bool canonical_less(const Constraint& a, const Constraint& b);

// Per-agent constraint collection. Buckets stay sorted and duplicate-free so
// equal sets always produce identical encodings regardless of insertion order.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(int agent_count) : per_agent_(agent_count) {}

  int agent_count() const { return static_cast<int>(per_agent_.size()); }
  std::size_t total() const;

  // agents the set has no bucket for simply have no constraints
  const std::vector<Constraint>& for_agent(int agent) const {
    static const std::vector<Constraint> none;
    return agent >= 0 && agent < agent_count() ? per_agent_[agent] : none;
  }

  // value semantics: returns a new set with c included (idempotent)
  ConstraintSet add(const Constraint& c) const;
  bool contains(const Constraint& c) const;

  // Whether the action of moving u -> v at timestep t (u == v is a wait,
  // arrival at t+1) is prohibited for the agent.
  bool forbids(int agent, int u, int v, int t) const;

  // latest timestep mentioned by the agent's constraints, -1 if none
  int latest_time(int agent) const;

  // true if a vertex constraint <agent, goal, t'> with t' >= t exists; an
  // agent terminating at t occupies its goal at every t' >= t
  bool blocks_goal_at_or_after(int agent, int goal, int t) const;

  std::string encode(int agent) const;

 private:
  std::vector<std::vector<Constraint>> per_agent_;
};

// Memoizes deterministic frontier computations keyed by the agent id and the
// canonical encoding of that agent's own constraints. The reference returned
// with the cache disabled points at a scratch slot that the next call reuses.
template <class Frontier>
class FrontierCache {
 public:
  bool enabled = true;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

  template <class Compute>
  const Frontier& lookup_or_compute(int agent, const ConstraintSet& cons, Compute&& compute) {
    if (!enabled) {
      ++misses;
      scratch_ = compute();
      return scratch_;
    }
    std::string key = std::to_string(agent);
    key += '|';
    key += cons.encode(agent);
    auto it = map_.find(key);
    if (it != map_.end()) {
      ++hits;
      return it->second;
    }
    ++misses;
    // compute() runs before insertion: a throwing computation caches nothing
    return map_.emplace(std::move(key), compute()).first->second;
  }

  void clear() {
    map_.clear();
    hits = misses = 0;
  }

 private:
  std::unordered_map<std::string, Frontier> map_;
  Frontier scratch_;
};

}  // namespace momapf
