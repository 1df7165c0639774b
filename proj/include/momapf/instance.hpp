#pragma once

#include <string>
#include <vector>

#include "momapf/cost_vec.hpp"

namespace momapf {

struct Edge {
  int to = -1;
  CostVec cost;
};

// Weighted directed graph with vector edge costs. Every vertex carries a
// self-loop edge modelling a wait action.
struct Graph {
  int vertex_count = 0;
  int objectives = 0;  // cost vector length N
  cost_t scale = 1;    // fixed-point units per display unit
  std::vector<std::vector<Edge>> adj;
  std::vector<std::string> names;  // optional, empty or one per vertex

  void add_edge(int u, int v, CostVec c);
  bool has_edge(int u, int v) const;
  const CostVec* edge_cost(int u, int v) const;  // nullptr if absent
  std::string vertex_name(int v) const;
  int vertex_by_name(const std::string& name) const;  // -1 if unknown
};

// Checks structural invariants: valid endpoints, one self-loop per vertex, no
// duplicate edges, cost length N with components >= 0 and at least one > 0.
void validate_graph(const Graph& g);

struct Agent {
  int id = -1;
  int start = -1;
  int goal = -1;
};

struct Instance {
  std::string name;
  Graph graph;
  std::vector<Agent> agents;
  // Whether two agents traversing <u,v> and <v,u> in the same timestep count
  // as an edge conflict. Grid instances always set this; explicit edge-list
  // instances may clear it when opposite directions model separate lanes.
  bool swap_conflicts = true;
};

// valid vertex ids, pairwise-distinct starts and pairwise-distinct goals
void validate_instance(const Instance& inst);

}  // namespace momapf
