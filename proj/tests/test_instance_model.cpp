#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "momapf/grid.hpp"
#include "momapf/instance_json.hpp"
#include "testutil.hpp"

using namespace momapf;

namespace {

GridMap full_grid(int w, int h) {
  GridMap g;
  g.width = w;
  g.height = h;
  g.passable.assign(static_cast<std::size_t>(w) * h, 1);
  return g;
}

}  // namespace

TEST_CASE("map parsing accepts the standard cell alphabet") {
  std::istringstream in(
      "type octile\n"
      "height 3\n"
      "width 4\n"
      "map\n"
      "..G@\n"
      ".@T.\n"
      "O...\n");
  GridMap g = load_map(in);
  CHECK(g.width == 4);
  CHECK(g.height == 3);
  CHECK(g.is_passable(0, 0));
  CHECK(g.is_passable(2, 0));   // G counts as ground
  CHECK_FALSE(g.is_passable(3, 0));
  CHECK_FALSE(g.is_passable(1, 1));
  CHECK_FALSE(g.is_passable(2, 1));  // trees block
  CHECK_FALSE(g.is_passable(0, 2));  // swamp blocks
  CHECK(g.is_passable(3, 2));
  CHECK_FALSE(g.in_bounds(4, 0));
  CHECK_FALSE(g.is_passable(-1, 0));
}

TEST_CASE("map parse errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_map(in);
  };
  CHECK_THROWS_WITH_AS(parse("nope\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse("type octile\nheight x\nwidth 2\nmap\n..\n"),
                       doctest::Contains("bad height"), ParseError);
  CHECK_THROWS_WITH_AS(parse("type octile\nheight 2\nwidth 2\nmap\n...\n..\n"),
                       doctest::Contains("row length"), ParseError);
  CHECK_THROWS_WITH_AS(parse("type octile\nheight 2\nwidth 2\nmap\n.z\n..\n"),
                       doctest::Contains("unknown cell character"), ParseError);
  CHECK_THROWS_WITH_AS(parse("type octile\nheight 2\nwidth 2\nmap\n..\n"),
                       doctest::Contains("map rows"), ParseError);
  CHECK_THROWS_AS(parse("type octile\nheight 0\nwidth 2\nmap\n"), ParseError);
}

TEST_CASE("scenario parsing") {
  std::string text =
      "version 1\n"
      "0\tm.map\t8\t8\t1\t2\t3\t4\t4\n"
      "0\tm.map\t8\t8\t5\t6\t7\t0\t8\n";
  {
    std::istringstream in(text);
    auto rows = load_scenario(in, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].first == Cell{1, 2});
    CHECK(rows[0].second == Cell{3, 4});
    CHECK(rows[1].first == Cell{5, 6});
  }
  {
    std::istringstream in(text);
    CHECK(load_scenario(in, 1).size() == 1);
  }
  {
    // asking for more agents than the file provides is a usage error
    std::istringstream in(text);
    CHECK_THROWS_AS(load_scenario(in, 3), std::invalid_argument);
  }
  {
    std::istringstream in("version 1\n0\tm.map\t8\t8\t9\t2\t3\t4\t4\n");
    CHECK_THROWS_WITH_AS(load_scenario(in, 1), doctest::Contains("outside the declared map"),
                         ParseError);
  }
  {
    std::istringstream in("0\tm.map\t8\t8\t1\t2\t3\t4\t4\n");
    CHECK_THROWS_WITH_AS(load_scenario(in, 0), doctest::Contains("version"), ParseError);
  }
  {
    std::istringstream in("version 1\n0\tm.map\t8\t8\t1\t2\n");
    CHECK_THROWS_WITH_AS(load_scenario(in, 1), doctest::Contains("9 tab-separated"), ParseError);
  }
}

TEST_CASE("shipped scenario files load") {
  auto rows = load_scenario_file(testutil::data_path("scen/empty-16-16-random-1.scen"), 6);
  CHECK(rows.size() == 6);
  CHECK(count_scenario_rows(testutil::data_path("scen/empty-16-16-random-1.scen")) == 12);
  GridMap m = load_map_file(testutil::data_path("empty-16-16.map"));
  CHECK(m.width == 16);
  CHECK(m.height == 16);
}

TEST_CASE("random costs come from {1,2} and rebuild identically") {
  GridMap grid = full_grid(4, 4);
  ObjectiveConfig cfg;
  cfg.kind = ObjectiveKind::random_bi;
  cfg.seed = 99;

  GridGraph a = build_graph(grid, cfg);
  GridGraph b = build_graph(grid, cfg);
  CHECK(serialize_graph(a.graph) == serialize_graph(b.graph));
  CHECK(a.graph.objectives == 2);
  CHECK(a.graph.vertex_count == 16);

  for (const auto& bucket : a.graph.adj)
    for (const auto& e : bucket)
      for (cost_t x : e.cost) {
        CHECK(x >= 1);
        CHECK(x <= 2);
      }

  cfg.seed = 100;
  CHECK(serialize_graph(build_graph(grid, cfg).graph) != serialize_graph(a.graph));

  cfg.kind = ObjectiveKind::random_tri;
  CHECK(build_graph(grid, cfg).graph.objectives == 3);
}

TEST_CASE("frozen sampling pin") {
  // guards the draw order: row-major source cell, N/S/W/E/wait, component
  GridMap grid = full_grid(2, 2);
  ObjectiveConfig cfg;
  cfg.kind = ObjectiveKind::random_bi;
  cfg.seed = 42;
  const std::string expected =
      "n=4 N=2 scale=1\n"
      "0,0: 0,1=1/1 1,0=1/1 0,0=2/1\n"
      "1,0: 1,1=1/1 0,0=1/2 1,0=2/1\n"
      "0,1: 0,0=1/1 1,1=2/1 0,1=1/1\n"
      "1,1: 1,0=2/2 0,1=2/1 1,1=2/2\n";
  CHECK(serialize_graph(build_graph(grid, cfg).graph) == expected);
}

TEST_CASE("wait cost override replaces sampled waits without shifting the draw stream") {
  GridMap grid = full_grid(2, 2);
  ObjectiveConfig plain;
  plain.kind = ObjectiveKind::random_bi;
  plain.seed = 5;
  ObjectiveConfig fixed = plain;
  fixed.wait_cost_override = 0;
  fixed.flowtime_position = 2;  // free waits need the time component to stay valid

  GridGraph g1 = build_graph(grid, plain);
  GridGraph g2 = build_graph(grid, fixed);
  for (int v = 0; v < g2.graph.vertex_count; ++v) {
    const CostVec* wait = g2.graph.edge_cost(v, v);
    REQUIRE(wait != nullptr);
    CHECK(*wait == CostVec{0, 0, 1});
  }
  // move edges see the same draw stream in both builds
  for (int v = 0; v < g2.graph.vertex_count; ++v)
    for (const auto& e : g1.graph.adj[v])
      if (e.to != v) {
        CostVec want = e.cost;
        want.push_back(1);
        CHECK(*g2.graph.edge_cost(v, e.to) == want);
      }

  // without flowtime an all-zero wait edge is an invalid graph
  ObjectiveConfig bad = plain;
  bad.wait_cost_override = 0;
  CHECK_THROWS_AS(build_graph(grid, bad), std::invalid_argument);
}

TEST_CASE("height map is a centered hill") {
  GridMap grid = full_grid(3, 3);
  CHECK(make_height_map(grid, 2) == std::vector<int>{0, 1, 0, 1, 2, 1, 0, 1, 0});
  CHECK(make_height_map(grid, 4) == std::vector<int>{0, 1, 0, 1, 4, 1, 0, 1, 0});
  CHECK(make_height_map(full_grid(1, 1), 7) == std::vector<int>{7});
  CHECK_THROWS_AS(make_height_map(grid, -1), std::invalid_argument);
}

TEST_CASE("time-energy costs charge climbs by height difference") {
  GridMap grid = full_grid(3, 3);
  grid.heights = make_height_map(grid, 4);
  ObjectiveConfig cfg;
  cfg.kind = ObjectiveKind::time_energy;
  GridGraph gg = build_graph(grid, cfg);
  const Graph& g = gg.graph;

  auto id = [&](int x, int y) { return gg.cell_to_vertex[grid.cell_index(x, y)]; };
  CHECK(*g.edge_cost(id(0, 1), id(1, 1)) == CostVec{1, 3});  // climb 1 -> 4
  CHECK(*g.edge_cost(id(1, 1), id(0, 1)) == CostVec{1, 1});  // descent is flat rate
  CHECK(*g.edge_cost(id(0, 0), id(1, 0)) == CostVec{1, 1});  // climb 0 -> 1
  CHECK(*g.edge_cost(id(1, 1), id(1, 1)) == CostVec{1, 1});  // wait
  CHECK(*g.edge_cost(id(0, 0), id(0, 0)) == CostVec{1, 1});

  GridMap bare = full_grid(3, 3);
  CHECK_THROWS_AS(build_graph(bare, cfg), std::invalid_argument);
}

TEST_CASE("flowtime component insertion") {
  Instance inst = testutil::golden_instance();
  const Graph& g = inst.graph;
  int C = testutil::vid(inst, "C"), D = testutil::vid(inst, "D");

  Graph front = augment_flowtime(g, 0);
  CHECK(front.objectives == 3);
  CHECK(*front.edge_cost(C, D) == CostVec{2, 1, 4});   // scale 2 => 2 per action
  CHECK(*front.edge_cost(C, C) == CostVec{2, 2, 0});

  Graph back = augment_flowtime(g, 2);
  CHECK(*back.edge_cost(C, D) == CostVec{1, 4, 2});

  CHECK_THROWS_AS(augment_flowtime(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(augment_flowtime(g, -1), std::invalid_argument);
}

TEST_CASE("grid instances validate agent placement") {
  GridMap grid = full_grid(3, 3);
  grid.passable[grid.cell_index(2, 2)] = 0;
  ObjectiveConfig cfg;
  cfg.kind = ObjectiveKind::random_bi;

  Instance ok = make_grid_instance(grid, cfg, {{Cell{0, 0}, Cell{2, 1}}, {Cell{1, 1}, Cell{0, 2}}},
                                   "demo");
  CHECK(ok.agents.size() == 2);
  CHECK(ok.swap_conflicts);
  CHECK(ok.name == "demo");

  CHECK_THROWS_AS(
      make_grid_instance(grid, cfg, {{Cell{2, 2}, Cell{0, 0}}}, ""),
      std::invalid_argument);
  // duplicate starts are rejected
  CHECK_THROWS_AS(
      make_grid_instance(grid, cfg, {{Cell{0, 0}, Cell{1, 0}}, {Cell{0, 0}, Cell{2, 0}}}, ""),
      std::invalid_argument);
}

TEST_CASE("instance json round trip") {
  Instance inst = testutil::golden_instance();
  CHECK(inst.name == "golden-2agent");
  CHECK(inst.graph.scale == 2);
  CHECK_FALSE(inst.swap_conflicts);
  CHECK(inst.graph.vertex_count == 6);
  CHECK(inst.agents.size() == 2);
  CHECK(inst.agents[0].start == testutil::vid(inst, "A"));
  CHECK(inst.agents[0].goal == testutil::vid(inst, "D"));

  std::istringstream in(save_instance_json(inst));
  Instance again = load_instance_json(in);
  CHECK(serialize_graph(again.graph) == serialize_graph(inst.graph));
  CHECK(again.swap_conflicts == inst.swap_conflicts);
  CHECK(again.agents.size() == inst.agents.size());
  CHECK(again.name == inst.name);
}

TEST_CASE("instance json rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_instance_json(in);
  };
  CHECK_THROWS_AS(parse("{not json"), ParseError);
  CHECK_THROWS_AS(parse("{}"), ParseError);  // missing fields
  CHECK_THROWS_AS(parse(R"({"objectives":1,"vertices":["A"],
      "edges":[{"from":"A","to":"Z","cost":[1]}],"agents":[]})"),
                  ParseError);  // unknown vertex
  // structurally valid json whose content breaks instance rules
  CHECK_THROWS_AS(parse(R"({"objectives":1,"vertices":["A","B"],
      "edges":[{"from":"A","to":"A","cost":[1]},{"from":"B","to":"B","cost":[1]},
               {"from":"A","to":"B","cost":[1]}],
      "agents":[{"start":"A","goal":"B"},{"start":"A","goal":"B"}]})"),
                  ParseError);  // duplicate starts
  CHECK_THROWS_AS(load_instance_json_file("/nonexistent/file.json"), ParseError);
}
