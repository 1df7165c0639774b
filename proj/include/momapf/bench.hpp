#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momapf/high_level.hpp"
#include "momapf/instance.hpp"

namespace momapf {

struct RunConfig {
  std::string instance_name;
  std::string map_name;
  std::string objective;
  int agents = 0;
  std::uint64_t seed = 0;
  int scenario = 0;
  SplitStrategy strategy = SplitStrategy::standard;
  double time_limit_s = 0.0;
  std::uint64_t max_expansions = 0;
  std::uint64_t max_nodes = 1'000'000;
  bool use_heuristic = true;
  bool use_cache = true;
};

struct RunRecord {
  RunConfig config;
  SolveStatus status = SolveStatus::complete;
  bool unsolvable = false;
  cost_t scale = 1;
  std::vector<CostVec> frontier;  // integer units, lex-sorted
  SearchStats stats;
};

RunRecord run_one(const Instance& inst, const RunConfig& cfg,
                  const SolveHooks* hooks = nullptr);

// one JSON object per line; every field except wall_time_s is deterministic
// for a given instance and config
std::string record_to_json(const RunRecord& rec);
std::string trace_to_json(const TraceEvent& ev);

struct SuiteItem {
  Instance instance;
  RunConfig config;
};

// runs items on a small worker pool; the result order matches the input
// order regardless of scheduling
std::vector<RunRecord> run_suite(const std::vector<SuiteItem>& items, int threads);

struct AggregateRow {
  std::string map_name;
  std::string objective;
  int agents = 0;
  std::string strategy;
  int instances = 0;
  int solved = 0;
  double success_rate = 0.0;
  int common_solved = 0;  // instances finished by every strategy in the group
  double mean_runtime_s = 0.0;    // means below are over commonly solved runs
  double mean_expansions = 0.0;
  double mean_branching = 0.0;
};

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

}  // namespace momapf
