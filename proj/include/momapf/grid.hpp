#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "momapf/instance.hpp"

namespace momapf {

// malformed input files; carries the offending line number in the message
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> passable;  // row-major [y * width + x]
  std::vector<int> heights;            // per-cell, empty unless attached

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  int cell_index(int x, int y) const { return y * width + x; }
  bool is_passable(int x, int y) const { return in_bounds(x, y) && passable[cell_index(x, y)]; }
};

// MovingAI .map format: a "type" line, "height H", "width W", "map", then H
// rows of W cell characters. '.' and 'G' are passable; '@', 'O', 'T' are not.
GridMap load_map(std::istream& in);
GridMap load_map_file(const std::string& path);

// MovingAI .scen format: a "version" header, then tab-separated rows
// bucket map width height start-x start-y goal-x goal-y optimal.
// Returns the first `count` (start, goal) cell pairs in file order.
// Asking for more rows than the file has throws std::invalid_argument.
std::vector<std::pair<Cell, Cell>> load_scenario(std::istream& in, int count);
std::vector<std::pair<Cell, Cell>> load_scenario_file(const std::string& path, int count);
int count_scenario_rows(const std::string& path);

enum class ObjectiveKind { random_bi, random_tri, time_energy };
const char* to_string(ObjectiveKind k);
std::optional<ObjectiveKind> objective_from_string(const std::string& s);

struct ObjectiveConfig {
  ObjectiveKind kind = ObjectiveKind::random_bi;
  std::uint64_t seed = 0;
  // insert an all-ones flowtime component at this index after building; -1 = off
  int flowtime_position = -1;
  // fixed cost for every component of the wait self-loops under the random
  // kinds (overridden waits consume no draws); unset = sampled like any edge
  std::optional<cost_t> wait_cost_override;
};

struct GridGraph {
  Graph graph;
  std::vector<int> cell_to_vertex;  // -1 for blocked cells
  std::vector<Cell> vertex_to_cell;
};

// One vertex per passable cell, a move edge for each ordered pair of
// 4-adjacent passable cells, and a wait self-loop at every vertex.
//
// random_bi / random_tri draw every cost component uniformly from {1, 2}
// with std::mt19937_64(seed); the draw order is fixed: row-major source
// cell, directions N, S, W, E, then wait, then component index. Only edges
// that exist consume draws.
//
// time_energy costs (1, e) per move where e = height(to) - height(from) when
// climbing and 1 otherwise; waits cost (1, 1). Requires grid.heights.
GridGraph build_graph(const GridMap& grid, const ObjectiveConfig& cfg);

// Linear hill peaked at the map center: round(max_height * (1 - d / d_max))
// with Euclidean distance d between cell centers.
std::vector<int> make_height_map(const GridMap& grid, int max_height);

// New graph with one extra objective whose value is one time unit (scale) on
// every edge including self-loops; position selects the component index.
Graph augment_flowtime(const Graph& g, int position);

// Composes build_graph with agent placement from scenario cells.
Instance make_grid_instance(const GridMap& grid, const ObjectiveConfig& cfg,
                            const std::vector<std::pair<Cell, Cell>>& agents,
                            const std::string& name = "");

// canonical text form used for byte-level determinism checks
std::string serialize_graph(const Graph& g);

}  // namespace momapf
