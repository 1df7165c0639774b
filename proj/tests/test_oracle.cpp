#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "momapf/high_level.hpp"
#include "momapf/low_level.hpp"
#include "momapf/oracle.hpp"
#include "testutil.hpp"

using namespace momapf;
using testutil::golden_instance;
using testutil::random_grid_instance;
using testutil::vid;

namespace {

std::vector<int> verts(const Instance& inst, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(vid(inst, n));
  return out;
}

void check_witness(const Instance& inst, const Solution& s) {
  REQUIRE(s.paths.size() == inst.agents.size());
  CostVec total(inst.graph.objectives, 0);
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const Path& p = s.paths[i];
    REQUIRE(!p.vertices.empty());
    CHECK(p.vertices.front() == inst.agents[i].start);
    CHECK(p.vertices.back() == inst.agents[i].goal);
    CostVec walked(inst.graph.objectives, 0);
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      const CostVec* c = inst.graph.edge_cost(p.vertices[k], p.vertices[k + 1]);
      REQUIRE(c != nullptr);
      walked += *c;
    }
    CHECK(walked == p.cost);
    total += p.cost;
  }
  CHECK(total == s.cost);
  CHECK(!detect_first_conflict(inst, s.paths).has_value());
}

std::vector<CostVec> frontier_costs(const OracleResult& r) {
  std::vector<CostVec> out;
  for (const Solution& s : r.frontier) out.push_back(s.cost);
  return out;
}

// two 3-vertex islands: each agent has a two-point frontier of its own
Instance two_islands() {
  Instance inst;
  inst.name = "two-islands";
  Graph& g = inst.graph;
  g.vertex_count = 6;
  g.objectives = 2;
  g.adj.resize(6);
  g.add_edge(0, 1, CostVec{1, 1});
  g.add_edge(1, 2, CostVec{1, 1});
  g.add_edge(0, 2, CostVec{3, 1});
  g.add_edge(3, 5, CostVec{1, 3});
  g.add_edge(3, 4, CostVec{1, 1});
  g.add_edge(4, 5, CostVec{1, 1});
  for (int v = 0; v < 6; ++v) g.add_edge(v, v, CostVec{1, 1});
  inst.agents.push_back(Agent{0, 0, 2});
  inst.agents.push_back(Agent{1, 3, 5});
  return inst;
}

// a two-cell corridor the agents must cross in opposite directions
Instance corridor(bool swap_conflicts) {
  Instance inst;
  inst.name = "corridor";
  inst.swap_conflicts = swap_conflicts;
  Graph& g = inst.graph;
  g.vertex_count = 2;
  g.objectives = 2;
  g.adj.resize(2);
  g.add_edge(0, 1, CostVec{1, 1});
  g.add_edge(1, 0, CostVec{1, 1});
  g.add_edge(0, 0, CostVec{1, 1});
  g.add_edge(1, 1, CostVec{1, 1});
  inst.agents.push_back(Agent{0, 0, 1});
  inst.agents.push_back(Agent{1, 1, 0});
  return inst;
}

}  // namespace

TEST_CASE("golden joint frontier with conflict-free witnesses") {
  Instance inst = golden_instance();
  OracleResult res = joint_pareto(inst);
  REQUIRE(res.fixpoint);
  CHECK(frontier_costs(res) == std::vector<CostVec>{CostVec{13, 14}, CostVec{16, 12}});
  for (const Solution& s : res.frontier) check_witness(inst, s);
}

TEST_CASE("zero doubling rounds leave the fixpoint unconfirmed") {
  Instance inst = golden_instance();
  OracleResult res = joint_pareto(inst, 0);
  CHECK(!res.fixpoint);
  // the seeded bound is already generous enough for this instance
  CHECK(frontier_costs(res) == std::vector<CostVec>{CostVec{13, 14}, CostVec{16, 12}});
}

TEST_CASE("single agent: joint search equals the low-level frontier") {
  testutil::RandomGridSpec spec;
  spec.min_agents = spec.max_agents = 1;
  for (std::uint64_t seed : {3u, 4u, 5u, 6u}) {
    Instance inst = random_grid_instance(seed, spec);
    CAPTURE(inst.name);

    LowLevel ll(inst);
    std::vector<CostVec> want;
    for (const Path& p : ll.frontier_for(0, ConstraintSet(1))) want.push_back(p.cost);

    OracleResult res = joint_pareto(inst);
    REQUIRE(res.fixpoint);
    std::vector<CostVec> got = frontier_costs(res);
    sort_lex(got);
    sort_lex(want);
    CHECK(got == want);
    for (const Solution& s : res.frontier) check_witness(inst, s);
  }
}

TEST_CASE("independent agents: frontier is the nondominated sum of parts") {
  Instance inst = two_islands();
  OracleResult res = joint_pareto(inst);
  REQUIRE(res.fixpoint);
  // {(2,2),(3,1)} x {(1,3),(2,2)} summed and filtered
  CHECK(frontier_costs(res) ==
        std::vector<CostVec>{CostVec{3, 5}, CostVec{4, 4}, CostVec{5, 3}});
  for (const Solution& s : res.frontier) check_witness(inst, s);

  SolveResult solved = solve(inst);
  REQUIRE(solved.status == SolveStatus::complete);
  CHECK(solved.stats.splits == 0);
  std::vector<CostVec> got = solved.solutions.costs();
  sort_lex(got);
  CHECK(got == frontier_costs(res));
}

TEST_CASE("corridor: swap semantics decide solvability") {
  OracleResult strict = joint_pareto(corridor(true));
  CHECK(strict.fixpoint);
  CHECK(strict.frontier.empty());

  Instance relaxed = corridor(false);
  OracleResult res = joint_pareto(relaxed);
  REQUIRE(res.fixpoint);
  CHECK(frontier_costs(res) == std::vector<CostVec>{CostVec{2, 2}});
  for (const Solution& s : res.frontier) check_witness(relaxed, s);

  SolveResult solved = solve(relaxed);
  REQUIRE(solved.status == SolveStatus::complete);
  CHECK(solved.solutions.costs() == std::vector<CostVec>{CostVec{2, 2}});
}

TEST_CASE("unreachable goal: empty frontier, fixpoint immediately") {
  Instance inst;
  inst.graph.vertex_count = 2;
  inst.graph.objectives = 2;
  inst.graph.adj.resize(2);
  inst.graph.add_edge(0, 0, CostVec{1, 1});
  inst.graph.add_edge(1, 1, CostVec{1, 1});
  inst.agents.push_back(Agent{0, 0, 1});
  OracleResult res = joint_pareto(inst);
  CHECK(res.fixpoint);
  CHECK(res.frontier.empty());
}

TEST_CASE("path enumeration walks the graph in adjacency order") {
  Instance inst = golden_instance();
  ConstraintSet none(2);

  SUBCASE("two steps reach the goal two ways") {
    auto paths = enumerate_paths(inst.graph, inst.agents[0], none, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].vertices == verts(inst, {"A", "B", "D"}));
    CHECK(paths[0].cost == CostVec{6, 4});
    CHECK(paths[1].vertices == verts(inst, {"A", "C", "D"}));
    CHECK(paths[1].cost == CostVec{3, 6});
  }

  SUBCASE("walks may pass through the goal and linger") {
    auto paths = enumerate_paths(inst.graph, inst.agents[0], none, 3);
    std::vector<std::vector<int>> want = {
        verts(inst, {"A", "B", "D"}),      verts(inst, {"A", "B", "D", "D"}),
        verts(inst, {"A", "B", "B", "D"}), verts(inst, {"A", "C", "D"}),
        verts(inst, {"A", "C", "D", "D"}), verts(inst, {"A", "C", "C", "D"}),
        verts(inst, {"A", "A", "B", "D"}), verts(inst, {"A", "A", "C", "D"}),
    };
    REQUIRE(paths.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(paths[i].vertices == want[i]);
  }

  SUBCASE("a vertex constraint reroutes every walk") {
    const int D = vid(inst, "D");
    ConstraintSet cons = none.add(vertex_constraint(0, D, 2));
    auto paths = enumerate_paths(inst.graph, inst.agents[0], cons, 3);
    std::vector<std::vector<int>> want = {
        verts(inst, {"A", "B", "B", "D"}),
        verts(inst, {"A", "C", "C", "D"}),
        verts(inst, {"A", "A", "B", "D"}),
        verts(inst, {"A", "A", "C", "D"}),
    };
    REQUIRE(paths.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(paths[i].vertices == want[i]);
      CHECK(path_satisfies(cons, 0, paths[i]));
    }
  }

  SUBCASE("a blocked start yields nothing") {
    ConstraintSet cons = none.add(vertex_constraint(0, inst.agents[0].start, 0));
    CHECK(enumerate_paths(inst.graph, inst.agents[0], cons, 4).empty());
  }

  SUBCASE("goal constraints postpone termination") {
    const int D = vid(inst, "D");
    ConstraintSet cons = none.add(vertex_constraint(0, D, 3));
    // at three steps every ending would terminate at t <= 3, which the
    // constraint still covers
    CHECK(enumerate_paths(inst.graph, inst.agents[0], cons, 3).empty());
    auto paths = enumerate_paths(inst.graph, inst.agents[0], cons, 4);
    REQUIRE(!paths.empty());
    for (const Path& p : paths) {
      CHECK(p.term_time() == 4);
      CHECK(path_satisfies(cons, 0, p));
    }
  }
}

TEST_CASE("compatible joint plans for a node") {
  Instance inst = golden_instance();
  LowLevel ll(inst);
  std::vector<CTNode> roots = init_roots(ll);
  REQUIRE(roots.size() == 2);
  const CTNode& n2 = roots[1];  // lb (6,4), exclusion {(6,6)} for agent 0

  auto tuples = enumerate_compatible(inst, n2, 4, SplitStrategy::disjoint);
  REQUIRE(!tuples.empty());

  bool found_pinned = false;
  for (const auto& tuple : tuples) {
    REQUIRE(tuple.size() == 2);
    CHECK(solution_compatible(n2, tuple, SplitStrategy::disjoint));
    // agent 0 plans below the lower bound belong to the first root
    CHECK(tuple[0].vertices != verts(inst, {"A", "C", "D"}));
    CHECK(tuple[0].vertices != verts(inst, {"A", "C", "C", "D"}));
    // four steps leave agent 1 exactly one route
    CHECK(tuple[1].vertices == verts(inst, {"E", "F", "D", "B", "A"}));
    if (tuple[0].vertices == verts(inst, {"A", "B", "D"})) found_pinned = true;
  }
  CHECK(found_pinned);

  // the less exclusive strategies accept supersets
  auto cost_tuples = enumerate_compatible(inst, n2, 4, SplitStrategy::cost);
  auto std_tuples = enumerate_compatible(inst, n2, 4, SplitStrategy::standard);
  CHECK(tuples.size() <= cost_tuples.size());
  CHECK(cost_tuples.size() <= std_tuples.size());

  // an impossible constraint empties one agent's list and thus the product
  CTNode blocked = n2;
  blocked.constraints = blocked.constraints.add(vertex_constraint(1, inst.agents[1].start, 0));
  CHECK(enumerate_compatible(inst, blocked, 4, SplitStrategy::standard).empty());
}

TEST_CASE("oracle runs are deterministic") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    Instance inst = random_grid_instance(seed);
    CAPTURE(inst.name);
    OracleResult a = joint_pareto(inst);
    OracleResult b = joint_pareto(inst);
    REQUIRE(a.fixpoint);
    CHECK(frontier_costs(a) == frontier_costs(b));
    for (const Solution& s : a.frontier) check_witness(inst, s);
  }
}
