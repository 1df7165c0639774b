#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace momapf {

using cost_t = std::int64_t;

// Cost vector in fixed-point units. Components are exact integers; a
// per-instance scale factor maps them to display units (e.g. scale 2 stores
// 1.5 as 3). All comparisons are exact integer comparisons.
class CostVec {
 public:
  CostVec() = default;
  CostVec(std::size_t n, cost_t fill) : v_(n, fill) {}
  CostVec(std::initializer_list<cost_t> xs) : v_(xs.begin(), xs.end()) {}

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  cost_t operator[](std::size_t i) const { return v_[i]; }
  cost_t& operator[](std::size_t i) { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  void push_back(cost_t x) { v_.push_back(x); }

  CostVec& operator+=(const CostVec& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  friend CostVec operator+(CostVec a, const CostVec& b) {
    a += b;
    return a;
  }
  friend bool operator==(const CostVec& a, const CostVec& b) { return a.v_ == b.v_; }
  friend bool operator!=(const CostVec& a, const CostVec& b) { return !(a == b); }

  void require_same_size(const CostVec& o) const {
    if (v_.size() != o.v_.size()) throw std::invalid_argument("cost vector length mismatch");
  }

 private:
  boost::container::small_vector<cost_t, 4> v_;
};

// u weakly dominates v (u ⪯ v): u_i <= v_i for all i.
inline bool weakly_dominates(const CostVec& u, const CostVec& v) {
  u.require_same_size(v);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

// u dominates v (u ≺ v): weak dominance with u != v.
inline bool dominates(const CostVec& u, const CostVec& v) {
  u.require_same_size(v);
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    if (u[i] < v[i]) strict = true;
  }
  return strict;
}

inline CostVec comax(const CostVec& u, const CostVec& v) {
  u.require_same_size(v);
  CostVec r = u;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (v[i] > r[i]) r[i] = v[i];
  return r;
}

// -1 / 0 / +1 for u before v, equal, u after v in lexicographic order.
inline int lex_compare(const CostVec& u, const CostVec& v) {
  u.require_same_size(v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return -1;
    if (u[i] > v[i]) return 1;
  }
  return 0;
}

inline bool lex_less(const CostVec& u, const CostVec& v) { return lex_compare(u, v) < 0; }

// Nondominated, cost-unique subset. Keeps the earliest of equal-cost inputs
// and preserves input order among the survivors.
std::vector<CostVec> nd_filter(const std::vector<CostVec>& vs);

// true iff some member of vs weakly dominates c (equality included)
bool any_weakly_dominates(const std::vector<CostVec>& vs, const CostVec& c);
// exact membership
bool contains(const std::vector<CostVec>& vs, const CostVec& c);

void sort_lex(std::vector<CostVec>& vs);

// "6.5,7" style display of fixed-point units under the given scale
std::string format_scaled(const CostVec& c, cost_t scale);
std::ostream& operator<<(std::ostream& os, const CostVec& c);

// Incrementally maintained nondominated, cost-unique vector set. Each member
// can carry a payload handle (a path or node id).
class NDSet {
 public:
  struct Member {
    CostVec cost;
    std::int64_t payload;
  };

  // Rejects a cost that is weakly dominated by (or equal to) an existing
  // member; evicts members the new cost dominates. Returns true if inserted.
  bool insert(CostVec c, std::int64_t payload = -1);
  bool dominated(const CostVec& c) const;  // some member ⪯ c
  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::vector<CostVec> costs() const;

 private:
  std::vector<Member> members_;
};

}  // namespace momapf
