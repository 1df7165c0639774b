#include "momapf/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace momapf {

RunRecord run_one(const Instance& inst, const RunConfig& cfg, const SolveHooks* hooks) {
  SolveOptions opt;
  opt.strategy = cfg.strategy;
  opt.time_limit_s = cfg.time_limit_s;
  opt.max_expansions = cfg.max_expansions;
  opt.max_nodes = cfg.max_nodes;
  opt.use_heuristic = cfg.use_heuristic;
  opt.use_cache = cfg.use_cache;

  SolveResult res = solve(inst, opt, hooks);

  RunRecord rec;
  rec.config = cfg;
  if (rec.config.instance_name.empty()) rec.config.instance_name = inst.name;
  rec.status = res.status;
  rec.unsolvable = res.unsolvable;
  rec.scale = inst.graph.scale;
  rec.frontier = res.solutions.costs();
  sort_lex(rec.frontier);
  rec.stats = res.stats;
  return rec;
}

namespace {

nlohmann::json cost_to_json(const CostVec& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k < c.size(); ++k) arr.push_back(c[k]);
  return arr;
}

}  // namespace

std::string record_to_json(const RunRecord& rec) {
  nlohmann::json j;
  j["instance"] = rec.config.instance_name;
  j["map"] = rec.config.map_name;
  j["objective"] = rec.config.objective;
  j["agents"] = rec.config.agents;
  j["seed"] = rec.config.seed;
  j["scenario"] = rec.config.scenario;
  j["strategy"] = to_string(rec.config.strategy);
  j["time_limit_s"] = rec.config.time_limit_s;
  j["use_heuristic"] = rec.config.use_heuristic;
  j["use_cache"] = rec.config.use_cache;
  j["status"] = to_string(rec.status);
  j["unsolvable"] = rec.unsolvable;
  j["scale"] = rec.scale;
  nlohmann::json frontier = nlohmann::json::array();
  for (const CostVec& c : rec.frontier) frontier.push_back(cost_to_json(c));
  j["frontier"] = frontier;
  j["stats"] = {{"pops", rec.stats.pops},
                {"pruned_pops", rec.stats.pruned_pops},
                {"expansions", rec.stats.expansions},
                {"generations", rec.stats.generations},
                {"splits", rec.stats.splits},
                {"children", rec.stats.children},
                {"ll_requests", rec.stats.ll_requests},
                {"ll_computes", rec.stats.ll_computes},
                {"cache_hits", rec.stats.cache_hits},
                {"mean_branching", rec.stats.mean_branching()}};
  j["wall_time_s"] = rec.stats.wall_time_s;
  return j.dump();
}

std::string trace_to_json(const TraceEvent& ev) {
  nlohmann::json j;
  j["event"] = to_string(ev.kind);
  j["seq"] = ev.seq;
  j["parent"] = ev.parent;
  j["cost"] = cost_to_json(ev.cost);
  if (ev.conflict) {
    j["conflict"] = {{"kind", ev.conflict->kind == ConstraintKind::vertex ? "vertex" : "edge"},
                     {"i", ev.conflict->i},
                     {"j", ev.conflict->j},
                     {"u", ev.conflict->u},
                     {"v", ev.conflict->v},
                     {"t", ev.conflict->t}};
  }
  if (ev.added) {
    j["added"] = {{"kind", ev.added->kind == ConstraintKind::vertex ? "vertex" : "edge"},
                  {"agent", ev.added->agent},
                  {"u", ev.added->u},
                  {"v", ev.added->v},
                  {"t", ev.added->t}};
  }
  return j.dump();
}

std::vector<RunRecord> run_suite(const std::vector<SuiteItem>& items, int threads) {
  std::vector<RunRecord> records(items.size());
  if (items.empty()) return records;
  threads = std::max(1, std::min<int>(threads, static_cast<int>(items.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      records[i] = run_one(items[i].instance, items[i].config);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return records;
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
  // group key: map, objective, agent count; rows within a group: one per
  // strategy, compared over the instances all of them finished
  using GroupKey = std::tuple<std::string, std::string, int>;
  std::map<GroupKey, std::map<std::string, std::vector<const RunRecord*>>> groups;
  for (const RunRecord& r : records)
    groups[{r.config.map_name, r.config.objective, r.config.agents}]
          [to_string(r.config.strategy)]
              .push_back(&r);

  std::vector<AggregateRow> rows;
  for (auto& [key, by_strategy] : groups) {
    std::map<std::string, int> finish_count;
    for (auto& [strategy, runs] : by_strategy)
      for (const RunRecord* r : runs)
        if (r->status == SolveStatus::complete) finish_count[r->config.instance_name]++;

    const int strategy_count = static_cast<int>(by_strategy.size());
    int common = 0;
    for (auto& [name, n] : finish_count)
      if (n == strategy_count) common++;

    for (const char* strategy : {"standard", "cost", "disjoint"}) {
      auto it = by_strategy.find(strategy);
      if (it == by_strategy.end()) continue;
      AggregateRow row;
      row.map_name = std::get<0>(key);
      row.objective = std::get<1>(key);
      row.agents = std::get<2>(key);
      row.strategy = strategy;
      row.instances = static_cast<int>(it->second.size());
      row.common_solved = common;
      double rt = 0, ex = 0, br = 0;
      for (const RunRecord* r : it->second) {
        if (r->status == SolveStatus::complete) row.solved++;
        if (finish_count[r->config.instance_name] == strategy_count) {
          rt += r->stats.wall_time_s;
          ex += static_cast<double>(r->stats.expansions);
          br += r->stats.mean_branching();
        }
      }
      row.success_rate = row.instances ? static_cast<double>(row.solved) / row.instances : 0.0;
      if (common > 0) {
        row.mean_runtime_s = rt / common;
        row.mean_expansions = ex / common;
        row.mean_branching = br / common;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::string out =
      "map,objective,agents,strategy,instances,solved,success_rate,common_solved,"
      "mean_runtime_s,mean_expansions,mean_branching\n";
  char buf[512];
  for (const AggregateRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%s,%d,%d,%.4f,%d,%.6f,%.2f,%.4f\n",
                  r.map_name.c_str(), r.objective.c_str(), r.agents, r.strategy.c_str(),
                  r.instances, r.solved, r.success_rate, r.common_solved, r.mean_runtime_s,
                  r.mean_expansions, r.mean_branching);
    out += buf;
  }
  return out;
}

}  // namespace momapf
