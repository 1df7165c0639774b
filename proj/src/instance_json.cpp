#include "momapf/instance_json.hpp"

#include <fstream>

#include "json.hpp"
#include "momapf/grid.hpp"  // ParseError

namespace momapf {

using nlohmann::json;

static int lookup_vertex(const Graph& g, const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw ParseError(std::string("instance json: missing string field '") + field + "'");
  std::string name = j[field].get<std::string>();
  int v = g.vertex_by_name(name);
  if (v < 0) throw ParseError("instance json: unknown vertex '" + name + "'");
  return v;
}

Instance load_instance_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  try {
    Instance inst;
    inst.name = j.value("name", std::string());
    inst.swap_conflicts = j.value("swap_conflicts", true);
    Graph& g = inst.graph;
    g.scale = j.value("scale", cost_t{1});
    g.objectives = j.at("objectives").get<int>();
    for (const auto& v : j.at("vertices")) g.names.push_back(v.get<std::string>());
    g.vertex_count = static_cast<int>(g.names.size());
    g.adj.resize(g.vertex_count);
    for (const auto& e : j.at("edges")) {
      CostVec c;
      for (const auto& x : e.at("cost")) c.push_back(x.get<cost_t>());
      g.add_edge(lookup_vertex(g, e, "from"), lookup_vertex(g, e, "to"), std::move(c));
    }
    for (const auto& a : j.at("agents"))
      inst.agents.push_back(Agent{static_cast<int>(inst.agents.size()),
                                  lookup_vertex(g, a, "start"), lookup_vertex(g, a, "goal")});
    validate_instance(inst);
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
}

Instance load_instance_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  return load_instance_json(in);
}

std::string save_instance_json(const Instance& inst) {
  const Graph& g = inst.graph;
  json j;
  j["name"] = inst.name;
  j["scale"] = g.scale;
  j["objectives"] = g.objectives;
  j["swap_conflicts"] = inst.swap_conflicts;
  j["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count; ++v) j["vertices"].push_back(g.vertex_name(v));
  j["edges"] = json::array();
  for (int u = 0; u < g.vertex_count; ++u)
    for (const auto& e : g.adj[u]) {
      json je;
      je["from"] = g.vertex_name(u);
      je["to"] = g.vertex_name(e.to);
      je["cost"] = std::vector<cost_t>(e.cost.begin(), e.cost.end());
      j["edges"].push_back(std::move(je));
    }
  j["agents"] = json::array();
  for (const Agent& a : inst.agents) {
    json ja;
    ja["start"] = g.vertex_name(a.start);
    ja["goal"] = g.vertex_name(a.goal);
    j["agents"].push_back(std::move(ja));
  }
  return j.dump(2) + "\n";
}

}  // namespace momapf
