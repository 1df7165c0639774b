#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "momapf/constraints.hpp"

using namespace momapf;

TEST_CASE("constraint builders") {
  Constraint v = vertex_constraint(1, 5, 3);
  CHECK(v.kind == ConstraintKind::vertex);
  CHECK(v.agent == 1);
  CHECK(v.u == -1);
  CHECK(v.v == 5);
  CHECK(v.t == 3);

  Constraint e = edge_constraint(0, 2, 7, 4);
  CHECK(e.kind == ConstraintKind::edge);
  CHECK(e.u == 2);
  CHECK(e.v == 7);
  CHECK(e.t == 4);
}

TEST_CASE("add is idempotent and order independent") {
  ConstraintSet base(2);
  Constraint a = vertex_constraint(0, 3, 2);
  Constraint b = edge_constraint(0, 1, 3, 2);
  Constraint c = vertex_constraint(1, 3, 2);

  ConstraintSet s1 = base.add(a).add(b).add(c).add(a);
  ConstraintSet s2 = base.add(c).add(b).add(a);
  CHECK(s1.total() == 3);
  CHECK(s1.encode(0) == s2.encode(0));
  CHECK(s1.encode(1) == s2.encode(1));
  CHECK(s1.contains(a));
  CHECK(s1.contains(b));
  CHECK_FALSE(s1.contains(vertex_constraint(0, 3, 9)));

  // base is untouched: value semantics
  CHECK(base.total() == 0);
  CHECK(s1.encode(0) != base.encode(0));

  CHECK_THROWS_AS(base.add(vertex_constraint(5, 0, 0)), std::out_of_range);
  CHECK_THROWS_AS(base.add(vertex_constraint(-1, 0, 0)), std::out_of_range);
}

TEST_CASE("forbids matches the occupancy semantics") {
  ConstraintSet s(2);
  s = s.add(vertex_constraint(0, 5, 3));  // agent 0 must not occupy 5 at t=3
  s = s.add(edge_constraint(0, 2, 7, 4)); // agent 0 must not take 2->7 at t=4

  // arriving at v at t+1 is occupying it at t+1
  CHECK(s.forbids(0, 4, 5, 2));
  CHECK(s.forbids(0, 5, 5, 2));  // waiting into the blocked step
  CHECK_FALSE(s.forbids(0, 4, 5, 3));
  CHECK_FALSE(s.forbids(0, 4, 5, 1));
  CHECK(s.forbids(0, 2, 7, 4));
  CHECK_FALSE(s.forbids(0, 7, 2, 4));  // directed
  CHECK_FALSE(s.forbids(0, 2, 7, 3));
  // other agents unaffected
  CHECK_FALSE(s.forbids(1, 4, 5, 2));
  CHECK_FALSE(s.forbids(1, 2, 7, 4));
}

TEST_CASE("forbids agrees with a direct scan") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    ConstraintSet s(3);
    std::vector<Constraint> all;
    int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      Constraint c = rng() % 2 ? vertex_constraint(static_cast<int>(rng() % 3),
                                                   static_cast<int>(rng() % 4),
                                                   static_cast<int>(rng() % 5))
                               : edge_constraint(static_cast<int>(rng() % 3),
                                                 static_cast<int>(rng() % 4),
                                                 static_cast<int>(rng() % 4),
                                                 static_cast<int>(rng() % 5));
      s = s.add(c);
      all.push_back(c);
    }
    for (int q = 0; q < 40; ++q) {
      int agent = static_cast<int>(rng() % 3);
      int u = static_cast<int>(rng() % 4), v = static_cast<int>(rng() % 4);
      int t = static_cast<int>(rng() % 5);
      bool expect = false;
      for (const Constraint& c : all) {
        if (c.agent != agent) continue;
        if (c.kind == ConstraintKind::vertex && c.v == v && c.t == t + 1) expect = true;
        if (c.kind == ConstraintKind::edge && c.u == u && c.v == v && c.t == t) expect = true;
      }
      CHECK(s.forbids(agent, u, v, t) == expect);
    }
  }
}

TEST_CASE("latest_time and goal blocking") {
  ConstraintSet s(1);
  CHECK(s.latest_time(0) == -1);
  s = s.add(vertex_constraint(0, 2, 4)).add(edge_constraint(0, 1, 2, 6));
  CHECK(s.latest_time(0) == 6);

  CHECK(s.blocks_goal_at_or_after(0, 2, 4));
  CHECK(s.blocks_goal_at_or_after(0, 2, 0));
  CHECK_FALSE(s.blocks_goal_at_or_after(0, 2, 5));  // only the edge remains later
  CHECK_FALSE(s.blocks_goal_at_or_after(0, 3, 0));

  // out-of-range agents read as unconstrained
  CHECK(s.latest_time(7) == -1);
  CHECK_FALSE(s.forbids(7, 1, 2, 5));
}

TEST_CASE("frontier cache counts and stays transparent") {
  FrontierCache<std::vector<int>> cache;
  ConstraintSet s(2);
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return std::vector<int>{calls};
  };

  const auto& a = cache.lookup_or_compute(0, s, compute);
  CHECK(a == std::vector<int>{1});
  const auto& b = cache.lookup_or_compute(0, s, compute);
  CHECK(&a == &b);  // same stored entry
  CHECK(calls == 1);
  CHECK(cache.hits == 1);
  CHECK(cache.misses == 1);

  // different agent or different constraints are different keys
  cache.lookup_or_compute(1, s, compute);
  cache.lookup_or_compute(0, s.add(vertex_constraint(0, 1, 1)), compute);
  CHECK(calls == 3);
  CHECK(cache.misses == 3);

  cache.clear();
  cache.lookup_or_compute(0, s, compute);
  CHECK(calls == 4);
}

TEST_CASE("disabled cache recomputes every request") {
  FrontierCache<std::vector<int>> cache;
  cache.enabled = false;
  ConstraintSet s(1);
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return std::vector<int>{calls};
  };
  CHECK(cache.lookup_or_compute(0, s, compute) == std::vector<int>{1});
  CHECK(cache.lookup_or_compute(0, s, compute) == std::vector<int>{2});
  CHECK(cache.hits == 0);
  CHECK(cache.misses == 2);
}

TEST_CASE("throwing computations cache nothing") {
  FrontierCache<std::vector<int>> cache;
  ConstraintSet s(1);
  int calls = 0;
  auto boom = [&]() -> std::vector<int> {
    ++calls;
    if (calls == 1) throw std::runtime_error("first call fails");
    return {42};
  };
  CHECK_THROWS_AS(cache.lookup_or_compute(0, s, boom), std::runtime_error);
  CHECK(cache.lookup_or_compute(0, s, boom) == std::vector<int>{42});
  CHECK(calls == 2);
}
