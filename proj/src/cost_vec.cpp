#include "momapf/cost_vec.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace momapf {

std::vector<CostVec> nd_filter(const std::vector<CostVec>& vs) {
  std::vector<CostVec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < vs.size() && keep; ++j) {
      if (j == i) continue;
      if (dominates(vs[j], vs[i])) keep = false;
      // among equal-cost duplicates the earliest input survives
      if (vs[j] == vs[i] && j < i) keep = false;
    }
    if (keep) out.push_back(vs[i]);
  }
  return out;
}

bool any_weakly_dominates(const std::vector<CostVec>& vs, const CostVec& c) {
  for (const auto& v : vs)
    if (weakly_dominates(v, c)) return true;
  return false;
}

bool contains(const std::vector<CostVec>& vs, const CostVec& c) {
  return std::find(vs.begin(), vs.end(), c) != vs.end();
}

void sort_lex(std::vector<CostVec>& vs) { std::sort(vs.begin(), vs.end(), lex_less); }

std::string format_scaled(const CostVec& c, cost_t scale) {
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    cost_t whole = c[i] / scale;
    cost_t rem = c[i] % scale;
    os << whole;
    if (rem != 0) {
      // expand the remainder as decimal digits; stop when exact or after 9 digits
      os << '.';
      for (int d = 0; rem != 0 && d < 9; ++d) {
        rem *= 10;
        os << rem / scale;
        rem %= scale;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CostVec& c) {
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os << ')';
}

bool NDSet::insert(CostVec c, std::int64_t payload) {
  for (const auto& m : members_)
    if (weakly_dominates(m.cost, c)) return false;
  std::erase_if(members_, [&](const Member& m) { return dominates(c, m.cost); });
  members_.push_back(Member{std::move(c), payload});
  return true;
}

bool NDSet::dominated(const CostVec& c) const {
  for (const auto& m : members_)
    if (weakly_dominates(m.cost, c)) return true;
  return false;
}

std::vector<CostVec> NDSet::costs() const {
  std::vector<CostVec> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.cost);
  return out;
}

}  // namespace momapf
