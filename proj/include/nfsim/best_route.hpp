#pragma once

#include <optional>

#include "nfsim/strategy.hpp"

namespace nfsim {

// best_route face selection. New interests take the lowest-cost face.
// Retransmissions first try the lowest-cost face with no unexpired
// out-record; with every face in use, they fall back to the face used
// most recently.
std::optional<int> br_choose(const FibEntry& fib, const PitEntry* entry, bool is_retx,
                             SimTime now);

class BestRouteStrategy : public Strategy {
 public:
  std::optional<int> choose_face(Node&, const FibEntry& fib, const PitEntry* entry,
                                 const Interest&, bool is_retx, SimTime now) override {
    return br_choose(fib, entry, is_retx, now);
  }
};

}  // namespace nfsim
