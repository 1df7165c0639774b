#include "momapf/grid.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace momapf {

namespace {

std::string expect_header(std::istream& in, int& line_no, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line " + std::to_string(line_no) + ": expected '" + key + "' header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind(key, 0) != 0)
    throw ParseError("line " + std::to_string(line_no - 1) + ": expected '" + key + "', got '" + line + "'");
  return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
}

int parse_int_field(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + std::string(what) + " '" + s + "'");
  }
}

}  // namespace

GridMap load_map(std::istream& in) {
  int line_no = 1;
  expect_header(in, line_no, "type");
  GridMap g;
  g.height = parse_int_field(expect_header(in, line_no, "height"), line_no - 1, "height");
  g.width = parse_int_field(expect_header(in, line_no, "width"), line_no - 1, "width");
  if (g.width <= 0 || g.height <= 0)
    throw ParseError("line " + std::to_string(line_no - 1) + ": non-positive map dimensions");
  expect_header(in, line_no, "map");

  g.passable.assign(static_cast<std::size_t>(g.width) * g.height, 0);
  for (int y = 0; y < g.height; ++y) {
    std::string row;
    if (!std::getline(in, row))
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(g.height) +
                       " map rows, got " + std::to_string(y));
    ++line_no;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (static_cast<int>(row.size()) != g.width)
      throw ParseError("line " + std::to_string(line_no - 1) + ": row length " +
                       std::to_string(row.size()) + " does not match width " + std::to_string(g.width));
    for (int x = 0; x < g.width; ++x) {
      char c = row[x];
      if (c == '.' || c == 'G')
        g.passable[g.cell_index(x, y)] = 1;
      else if (c == '@' || c == 'O' || c == 'T')
        g.passable[g.cell_index(x, y)] = 0;
      else
        throw ParseError("line " + std::to_string(line_no - 1) + ": unknown cell character '" +
                         std::string(1, c) + "'");
    }
  }
  bool any = false;
  for (auto p : g.passable) any = any || p;
  if (!any) throw ParseError("map has no passable cell");
  return g;
}

GridMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  return load_map(in);
}

static std::vector<std::pair<Cell, Cell>> parse_scenario(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty scenario file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("version", 0) != 0)
    throw ParseError("line 1: expected 'version' header, got '" + line + "'");
  std::vector<std::pair<Cell, Cell>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string bucket, map_name, w, h, sx, sy, gx, gy, optimal;
    if (!(std::getline(ls, bucket, '\t') && std::getline(ls, map_name, '\t') &&
          std::getline(ls, w, '\t') && std::getline(ls, h, '\t') && std::getline(ls, sx, '\t') &&
          std::getline(ls, sy, '\t') && std::getline(ls, gx, '\t') && std::getline(ls, gy, '\t') &&
          std::getline(ls, optimal)))
      throw ParseError("line " + std::to_string(line_no) + ": expected 9 tab-separated fields");
    int width = parse_int_field(w, line_no, "map width");
    int height = parse_int_field(h, line_no, "map height");
    Cell s{parse_int_field(sx, line_no, "start x"), parse_int_field(sy, line_no, "start y")};
    Cell g{parse_int_field(gx, line_no, "goal x"), parse_int_field(gy, line_no, "goal y")};
    auto inside = [&](Cell c) { return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height; };
    if (!inside(s) || !inside(g))
      throw ParseError("line " + std::to_string(line_no) + ": cell outside the declared map size");
    rows.emplace_back(s, g);
  }
  return rows;
}

std::vector<std::pair<Cell, Cell>> load_scenario(std::istream& in, int count) {
  if (count < 0) throw std::invalid_argument("scenario row count must be >= 0");
  auto rows = parse_scenario(in);
  if (count > static_cast<int>(rows.size()))
    throw std::invalid_argument("scenario has " + std::to_string(rows.size()) +
                                " rows, requested " + std::to_string(count));
  rows.resize(count);
  return rows;
}

std::vector<std::pair<Cell, Cell>> load_scenario_file(const std::string& path, int count) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return load_scenario(in, count);
}

int count_scenario_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return static_cast<int>(parse_scenario(in).size());
}

const char* to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::random_bi: return "random-bi";
    case ObjectiveKind::random_tri: return "random-tri";
    case ObjectiveKind::time_energy: return "time-energy";
  }
  return "?";
}

std::optional<ObjectiveKind> objective_from_string(const std::string& s) {
  if (s == "random-bi") return ObjectiveKind::random_bi;
  if (s == "random-tri") return ObjectiveKind::random_tri;
  if (s == "time-energy") return ObjectiveKind::time_energy;
  return std::nullopt;
}

GridGraph build_graph(const GridMap& grid, const ObjectiveConfig& cfg) {
  if (cfg.kind == ObjectiveKind::time_energy && grid.heights.empty())
    throw std::invalid_argument("time-energy objectives need a height map");

  GridGraph out;
  out.cell_to_vertex.assign(grid.passable.size(), -1);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_passable(x, y)) {
        out.cell_to_vertex[grid.cell_index(x, y)] = static_cast<int>(out.vertex_to_cell.size());
        out.vertex_to_cell.push_back(Cell{x, y});
      }

  Graph& g = out.graph;
  g.vertex_count = static_cast<int>(out.vertex_to_cell.size());
  g.objectives = cfg.kind == ObjectiveKind::random_tri ? 3 : 2;
  g.scale = 1;
  g.adj.resize(g.vertex_count);
  g.names.reserve(g.vertex_count);
  for (const Cell& c : out.vertex_to_cell)
    g.names.push_back(std::to_string(c.x) + "," + std::to_string(c.y));

  std::mt19937_64 rng(cfg.seed);
  auto draw = [&] { return static_cast<cost_t>(1 + (rng() % 2)); };

  // N, S, W, E, then wait (dx, dy); y grows downwards
  const int dx[5] = {0, 0, -1, 1, 0};
  const int dy[5] = {-1, 1, 0, 0, 0};

  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      if (!grid.is_passable(x, y)) continue;
      int u = out.cell_to_vertex[grid.cell_index(x, y)];
      for (int d = 0; d < 5; ++d) {
        int nx = x + dx[d], ny = y + dy[d];
        if (!grid.is_passable(nx, ny)) continue;
        int v = out.cell_to_vertex[grid.cell_index(nx, ny)];
        CostVec c;
        if (cfg.kind == ObjectiveKind::time_energy) {
          bool wait = d == 4;
          cost_t energy = 1;
          if (!wait) {
            int dh = grid.heights[grid.cell_index(nx, ny)] - grid.heights[grid.cell_index(x, y)];
            if (dh > 0) energy = dh;
          }
          c = CostVec{1, energy};
        } else {
          for (int k = 0; k < g.objectives; ++k) c.push_back(draw());
          // still burns the draws so move costs don't depend on the override
          if (d == 4 && cfg.wait_cost_override)
            c = CostVec(g.objectives, *cfg.wait_cost_override);
        }
        g.add_edge(u, v, std::move(c));
      }
    }
  }

  if (cfg.flowtime_position >= 0) g = augment_flowtime(g, cfg.flowtime_position);
  validate_graph(g);
  return out;
}

std::vector<int> make_height_map(const GridMap& grid, int max_height) {
  if (max_height < 0) throw std::invalid_argument("max_height must be >= 0");
  double cx = (grid.width - 1) / 2.0;
  double cy = (grid.height - 1) / 2.0;
  double d_max = 0;
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      d_max = std::max(d_max, std::hypot(x - cx, y - cy));
  std::vector<int> h(grid.passable.size(), 0);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x) {
      double d = std::hypot(x - cx, y - cy);
      double frac = d_max > 0 ? 1.0 - d / d_max : 1.0;
      h[grid.cell_index(x, y)] = static_cast<int>(std::llround(max_height * frac));
    }
  return h;
}

Graph augment_flowtime(const Graph& g, int position) {
  if (position < 0 || position > g.objectives)
    throw std::invalid_argument("flowtime position out of range");
  Graph out = g;
  out.objectives = g.objectives + 1;
  for (auto& bucket : out.adj)
    for (auto& e : bucket) {
      CostVec c;
      for (int k = 0; k < position; ++k) c.push_back(e.cost[k]);
      c.push_back(g.scale);  // one time unit per action, waits included
      for (int k = position; k < g.objectives; ++k) c.push_back(e.cost[k]);
      e.cost = std::move(c);
    }
  return out;
}

Instance make_grid_instance(const GridMap& grid, const ObjectiveConfig& cfg,
                            const std::vector<std::pair<Cell, Cell>>& agents,
                            const std::string& name) {
  GridGraph gg = build_graph(grid, cfg);
  Instance inst;
  inst.name = name;
  inst.graph = std::move(gg.graph);
  inst.swap_conflicts = true;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const auto& [s, t] = agents[i];
    if (!grid.is_passable(s.x, s.y) || !grid.is_passable(t.x, t.y))
      throw std::invalid_argument("agent " + std::to_string(i) + " placed on a blocked cell");
    inst.agents.push_back(Agent{static_cast<int>(i), gg.cell_to_vertex[grid.cell_index(s.x, s.y)],
                                gg.cell_to_vertex[grid.cell_index(t.x, t.y)]});
  }
  validate_instance(inst);
  return inst;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count << " N=" << g.objectives << " scale=" << g.scale << '\n';
  for (int u = 0; u < g.vertex_count; ++u) {
    os << g.vertex_name(u) << ':';
    for (const auto& e : g.adj[u]) {
      os << ' ' << g.vertex_name(e.to) << '=';
      for (std::size_t k = 0; k < e.cost.size(); ++k) os << (k ? "/" : "") << e.cost[k];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace momapf
