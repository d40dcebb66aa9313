#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

struct NextHop {
  int face = -1;
  SimTime cost = 0;  // one-way shortest-path delay via this face
};

struct FibEntry {
  std::string prefix;
  std::vector<NextHop> next_hops;  // ascending cost, face-id tiebreak

  void sort_hops() {
    std::sort(next_hops.begin(), next_hops.end(), [](const NextHop& a, const NextHop& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      return a.face < b.face;
    });
  }
};

class Fib {
 public:
  FibEntry& entry(const std::string& prefix) {
    auto& e = entries_[prefix];
    e.prefix = prefix;
    return e;
  }

  const FibEntry* lookup(const std::string& prefix) const {
    auto it = entries_.find(prefix);
    return it == entries_.end() ? nullptr : &it->second;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [prefix, e] : entries_) fn(e);
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, FibEntry> entries_;
};

}  // namespace nfsim
