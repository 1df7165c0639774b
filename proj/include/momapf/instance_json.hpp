#pragma once

#include <iosfwd>
#include <string>

#include "momapf/instance.hpp"

namespace momapf {

// JSON instance format:
// {
//   "name": "...", "scale": 2, "objectives": 2, "swap_conflicts": false,
//   "vertices": ["A", "B", ...],
//   "edges": [{"from": "A", "to": "B", "cost": [2, 2]}, ...],
//   "agents": [{"start": "A", "goal": "D"}, ...]
// }
// Edge costs are integers in fixed-point units. Self-loops are listed
// explicitly like any other edge. "swap_conflicts" defaults to true.
Instance load_instance_json(std::istream& in);
Instance load_instance_json_file(const std::string& path);
std::string save_instance_json(const Instance& inst);

}  // namespace momapf
