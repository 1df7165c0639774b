#include "momapf/instance.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace momapf {

void Graph::add_edge(int u, int v, CostVec c) {
  if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
    throw std::invalid_argument("edge endpoint out of range");
  adj.resize(vertex_count);
  adj[u].push_back(Edge{v, std::move(c)});
}

bool Graph::has_edge(int u, int v) const { return edge_cost(u, v) != nullptr; }

const CostVec* Graph::edge_cost(int u, int v) const {
  if (u < 0 || u >= vertex_count) return nullptr;
  for (const auto& e : adj[u])
    if (e.to == v) return &e.cost;
  return nullptr;
}

std::string Graph::vertex_name(int v) const {
  if (v >= 0 && v < static_cast<int>(names.size())) return names[v];
  return std::to_string(v);
}

int Graph::vertex_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void validate_graph(const Graph& g) {
  if (g.vertex_count <= 0) throw std::invalid_argument("graph has no vertices");
  if (g.objectives < 1) throw std::invalid_argument("graph needs at least one objective");
  if (g.scale < 1) throw std::invalid_argument("fixed-point scale must be >= 1");
  if (static_cast<int>(g.adj.size()) != g.vertex_count)
    throw std::invalid_argument("adjacency size does not match vertex count");
  if (!g.names.empty() && static_cast<int>(g.names.size()) != g.vertex_count)
    throw std::invalid_argument("vertex name list size does not match vertex count");

  for (int u = 0; u < g.vertex_count; ++u) {
    bool self_loop = false;
    std::set<int> targets;
    for (const auto& e : g.adj[u]) {
      if (e.to < 0 || e.to >= g.vertex_count)
        throw std::invalid_argument("edge target out of range at vertex " + g.vertex_name(u));
      if (!targets.insert(e.to).second)
        throw std::invalid_argument("duplicate edge " + g.vertex_name(u) + " -> " +
                                    g.vertex_name(e.to));
      if (e.to == u) self_loop = true;
      if (static_cast<int>(e.cost.size()) != g.objectives)
        throw std::invalid_argument("edge cost length mismatch at vertex " + g.vertex_name(u));
      bool positive = false;
      for (cost_t x : e.cost) {
        if (x < 0) throw std::invalid_argument("negative edge cost component");
        if (x > 0) positive = true;
      }
      // a zero-cost action would let the search cycle for free
      if (!positive) throw std::invalid_argument("edge cost must be positive in some component");
    }
    if (!self_loop)
      throw std::invalid_argument("vertex " + g.vertex_name(u) + " is missing its wait self-loop");
  }
}

void validate_instance(const Instance& inst) {
  validate_graph(inst.graph);
  if (inst.agents.empty()) throw std::invalid_argument("instance has no agents");
  std::set<int> starts, goals;
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const Agent& a = inst.agents[i];
    if (a.id != static_cast<int>(i)) throw std::invalid_argument("agent ids must be 0..m-1");
    if (a.start < 0 || a.start >= inst.graph.vertex_count || a.goal < 0 ||
        a.goal >= inst.graph.vertex_count)
      throw std::invalid_argument("agent start/goal out of range");
    if (!starts.insert(a.start).second)
      throw std::invalid_argument("agent starts must be pairwise distinct");
    if (!goals.insert(a.goal).second)
      throw std::invalid_argument("agent goals must be pairwise distinct");
  }
}

}  // namespace momapf
