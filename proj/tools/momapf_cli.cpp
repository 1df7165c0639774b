#include <cstdlib>
#include <thread>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "momapf/bench.hpp"
#include "momapf/grid.hpp"
#include "momapf/high_level.hpp"
#include "momapf/instance_json.hpp"
#include "momapf/oracle.hpp"

namespace {

using namespace momapf;

namespace fs = std::filesystem;

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("MOMAPF_OUT_DIR"); env && *env) return env;
  return "momapf_out";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

struct GridArgs {
  std::string map_path;
  std::vector<std::string> scen_paths;
  std::string objective = "random-bi";
  std::uint64_t seed = 0;
  int max_height = 4;
  int flowtime_at = -1;
};

ObjectiveConfig objective_config(const GridArgs& args) {
  auto kind = objective_from_string(args.objective);
  if (!kind) throw std::invalid_argument("unknown objective: " + args.objective);
  ObjectiveConfig cfg;
  cfg.kind = *kind;
  cfg.seed = args.seed;
  cfg.flowtime_position = args.flowtime_at;
  return cfg;
}

Instance grid_instance(const GridArgs& args, const std::string& scen_path, int agents,
                       const std::string& name) {
  GridMap grid = load_map_file(args.map_path);
  ObjectiveConfig cfg = objective_config(args);
  if (cfg.kind == ObjectiveKind::time_energy) grid.heights = make_height_map(grid, args.max_height);
  auto pairs = load_scenario_file(scen_path, agents);
  return make_grid_instance(grid, cfg, pairs, name);
}

std::string frontier_summary(const std::vector<CostVec>& frontier, cost_t scale) {
  std::ostringstream os;
  for (const CostVec& c : frontier) os << "  (" << format_scaled(c, scale) << ")\n";
  return os.str();
}

int cmd_solve(const std::string& instance_path, const GridArgs& grid_args, int agents,
              const std::string& strategy, double time_limit, std::uint64_t max_expansions,
              bool no_heuristic, bool no_cache, const std::string& out_dir_flag, bool trace,
              const std::string& tag) {
  Instance inst;
  RunConfig cfg;
  if (!instance_path.empty()) {
    inst = load_instance_json_file(instance_path);
    cfg.map_name = fs::path(instance_path).filename().string();
    cfg.objective = "file";
    cfg.agents = static_cast<int>(inst.agents.size());
  } else {
    inst = grid_instance(grid_args, grid_args.scen_paths.front(), agents,
                         fs::path(grid_args.scen_paths.front()).stem().string() + "-a" +
                             std::to_string(agents));
    cfg.map_name = fs::path(grid_args.map_path).filename().string();
    cfg.objective = grid_args.objective;
    cfg.agents = agents;
    cfg.seed = grid_args.seed;
  }
  cfg.instance_name = tag.empty() ? inst.name : tag;
  cfg.strategy = strategy_from_string(strategy);
  cfg.time_limit_s = time_limit;
  cfg.max_expansions = max_expansions;
  cfg.use_heuristic = !no_heuristic;
  cfg.use_cache = !no_cache;

  fs::path out_dir = resolve_out_dir(out_dir_flag);
  fs::create_directories(out_dir);

  std::string trace_lines;
  SolveHooks hooks;
  if (trace)
    hooks.on_trace = [&](const TraceEvent& ev) {
      trace_lines += trace_to_json(ev);
      trace_lines += '\n';
    };

  RunRecord rec = run_one(inst, cfg, trace ? &hooks : nullptr);
  write_file(out_dir / "runs.jsonl", record_to_json(rec) + "\n");
  if (trace) write_file(out_dir / "trace.jsonl", trace_lines);

  std::cout << "instance: " << rec.config.instance_name << "\n"
            << "strategy: " << to_string(rec.config.strategy) << "\n"
            << "status: " << to_string(rec.status) << (rec.unsolvable ? " (unsolvable)" : "")
            << "\n"
            << "frontier (" << rec.frontier.size() << " points):\n"
            << frontier_summary(rec.frontier, rec.scale) << "expansions: "
            << rec.stats.expansions << ", generated: " << rec.stats.generations
            << ", mean branching: " << rec.stats.mean_branching() << "\n"
            << "results in " << out_dir.string() << "\n";
  return 0;
}

int cmd_suite(const GridArgs& grid_args, const std::string& agents_range,
              const std::string& strategies_csv, double time_limit, int threads,
              const std::string& out_dir_flag) {
  int lo = 0, hi = 0;
  if (auto dash = agents_range.find('-'); dash != std::string::npos) {
    lo = std::stoi(agents_range.substr(0, dash));
    hi = std::stoi(agents_range.substr(dash + 1));
  } else {
    lo = hi = std::stoi(agents_range);
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad agents range: " + agents_range);

  std::vector<SplitStrategy> strategies;
  {
    std::stringstream ss(strategies_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) strategies.push_back(strategy_from_string(tok));
    if (strategies.empty()) throw std::invalid_argument("no strategies given");
  }

  std::vector<SuiteItem> items;
  for (int agents = lo; agents <= hi; ++agents)
    for (std::size_t s = 0; s < grid_args.scen_paths.size(); ++s) {
      const std::string& scen = grid_args.scen_paths[s];
      std::string name = fs::path(scen).stem().string() + "-a" + std::to_string(agents);
      Instance inst = grid_instance(grid_args, scen, agents, name);
      for (SplitStrategy strat : strategies) {
        SuiteItem item;
        item.instance = inst;
        item.config.instance_name = name;
        item.config.map_name = fs::path(grid_args.map_path).filename().string();
        item.config.objective = grid_args.objective;
        item.config.agents = agents;
        item.config.seed = grid_args.seed;
        item.config.scenario = static_cast<int>(s);
        item.config.strategy = strat;
        item.config.time_limit_s = time_limit;
        items.push_back(std::move(item));
      }
    }

  std::vector<RunRecord> records = run_suite(items, threads);

  fs::path out_dir = resolve_out_dir(out_dir_flag);
  fs::create_directories(out_dir);
  std::string lines;
  for (const RunRecord& r : records) {
    lines += record_to_json(r);
    lines += '\n';
  }
  write_file(out_dir / "runs.jsonl", lines);
  std::string csv = aggregate_csv(aggregate(records));
  write_file(out_dir / "aggregate.csv", csv);

  std::cout << csv << "results in " << out_dir.string() << "\n";
  return 0;
}

int cmd_oracle(const std::string& instance_path) {
  Instance inst = load_instance_json_file(instance_path);
  OracleResult res = joint_pareto(inst);
  std::cout << "frontier (" << res.frontier.size() << " points):\n";
  for (const Solution& s : res.frontier)
    std::cout << "  (" << format_scaled(s.cost, inst.graph.scale) << ")\n";
  std::cout << "fixpoint: " << (res.fixpoint ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-objective multi-agent path finding solver"};
  app.require_subcommand(1);

  std::string instance_path, strategy = "standard", out_dir, tag;
  GridArgs grid_args;
  int agents = 2;
  double time_limit = 0.0;
  std::uint64_t max_expansions = 0;
  bool no_heuristic = false, no_cache = false, trace = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
  auto* inst_opt = solve_cmd->add_option("--instance", instance_path, "instance JSON file");
  auto* map_opt = solve_cmd->add_option("--map", grid_args.map_path, "MovingAI .map file");
  solve_cmd->add_option("--scen", grid_args.scen_paths, "MovingAI .scen file");
  solve_cmd->add_option("--agents", agents, "number of scenario entries to use")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--objective", grid_args.objective,
                        "random-bi | random-tri | time-energy");
  solve_cmd->add_option("--seed", grid_args.seed, "objective sampling seed");
  solve_cmd->add_option("--max-height", grid_args.max_height, "hill height for time-energy")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--flowtime-at", grid_args.flowtime_at,
                        "insert a flowtime objective at this index");
  solve_cmd->add_option("--strategy", strategy, "standard | cost | disjoint");
  solve_cmd->add_option("--time-limit", time_limit, "seconds, must be positive")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-expansions", max_expansions, "0 = unlimited");
  solve_cmd->add_flag("--no-heuristic", no_heuristic, "expand on raw costs");
  solve_cmd->add_flag("--no-cache", no_cache, "recompute every frontier");
  solve_cmd->add_option("--out-dir", out_dir, "output directory");
  solve_cmd->add_flag("--trace", trace, "write trace.jsonl");
  solve_cmd->add_option("--tag", tag, "label for the run record");
  inst_opt->excludes(map_opt);
  map_opt->excludes(inst_opt);

  std::string agents_range = "2", strategies_csv = "standard,cost,disjoint";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* suite_cmd = app.add_subcommand("suite", "run a benchmark suite");
  suite_cmd->add_option("--map", grid_args.map_path, "MovingAI .map file")->required();
  suite_cmd->add_option("--scen", grid_args.scen_paths, "scenario files (repeatable)")
      ->required();
  suite_cmd->add_option("--agents", agents_range, "count or inclusive range, e.g. 2-6");
  suite_cmd->add_option("--objective", grid_args.objective,
                        "random-bi | random-tri | time-energy");
  suite_cmd->add_option("--seed", grid_args.seed, "objective sampling seed");
  suite_cmd->add_option("--max-height", grid_args.max_height, "hill height for time-energy");
  suite_cmd->add_option("--flowtime-at", grid_args.flowtime_at,
                        "insert a flowtime objective at this index");
  suite_cmd->add_option("--strategies", strategies_csv, "comma-separated strategy list");
  suite_cmd->add_option("--time-limit", time_limit, "seconds per run, must be positive")
      ->check(CLI::PositiveNumber);
  suite_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--out-dir", out_dir, "output directory");

  std::string oracle_path;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference frontier");
  oracle_cmd->add_option("--instance", oracle_path, "instance JSON file")->required();

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) {
      if (instance_path.empty() && (grid_args.map_path.empty() || grid_args.scen_paths.empty()))
        throw CLI::ValidationError("solve", "need --instance or --map with --scen");
      return cmd_solve(instance_path, grid_args, agents, strategy, time_limit, max_expansions,
                       no_heuristic, no_cache, out_dir, trace, tag);
    }
    if (suite_cmd->parsed())
      return cmd_suite(grid_args, agents_range, strategies_csv, time_limit, threads, out_dir);
    return cmd_oracle(oracle_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
