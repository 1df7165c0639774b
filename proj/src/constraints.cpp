#include "momapf/constraints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace momapf {

bool canonical_less(const Constraint& a, const Constraint& b) {
  auto key = [](const Constraint& c) { return std::tuple(c.kind, c.t, c.u, c.v); };
  return key(a) < key(b);
}

std::size_t ConstraintSet::total() const {
  std::size_t n = 0;
  for (const auto& bucket : per_agent_) n += bucket.size();
  return n;
}

ConstraintSet ConstraintSet::add(const Constraint& c) const {
  if (c.agent < 0 || c.agent >= agent_count())
    throw std::out_of_range("constraint agent id out of range");
  ConstraintSet out = *this;
  auto& bucket = out.per_agent_[c.agent];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), c, canonical_less);
  if (it != bucket.end() && *it == c) return out;
  bucket.insert(it, c);
  return out;
}

bool ConstraintSet::contains(const Constraint& c) const {
  if (c.agent < 0 || c.agent >= agent_count()) return false;
  const auto& bucket = per_agent_[c.agent];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), c, canonical_less);
  return it != bucket.end() && *it == c;
}

bool ConstraintSet::forbids(int agent, int u, int v, int t) const {
  for (const auto& c : for_agent(agent)) {
    if (c.kind == ConstraintKind::vertex) {
      if (c.v == v && c.t == t + 1) return true;
    } else {
      if (c.u == u && c.v == v && c.t == t) return true;
    }
  }
  return false;
}

int ConstraintSet::latest_time(int agent) const {
  int latest = -1;
  for (const auto& c : for_agent(agent)) latest = std::max(latest, c.t);
  return latest;
}

bool ConstraintSet::blocks_goal_at_or_after(int agent, int goal, int t) const {
  for (const auto& c : for_agent(agent))
    if (c.kind == ConstraintKind::vertex && c.v == goal && c.t >= t) return true;
  return false;
}

std::string ConstraintSet::encode(int agent) const {
  std::ostringstream os;
  for (const auto& c : for_agent(agent)) {
    if (c.kind == ConstraintKind::vertex)
      os << 'V' << c.t << ',' << c.v << ';';
    else
      os << 'E' << c.t << ',' << c.u << ',' << c.v << ';';
  }
  return os.str();
}

}  // namespace momapf
