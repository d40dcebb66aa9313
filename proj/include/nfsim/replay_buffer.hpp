#pragma once

#include <cstddef>
#include <vector>

#include "nfsim/rng.hpp"

namespace nfsim {

struct Experience {
  std::vector<double> state;
  int action = 0;
  double reward = 0.0;
  std::vector<double> next_state;
  bool terminal = false;
};

// Bounded FIFO of past transitions. Capacity 0 is no-buffer mode: only
// the most recent transition is retained and training uses it alone.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {}

  void push(Experience e) {
    std::size_t effective = capacity_ == 0 ? 1 : capacity_;
    if (ring_.size() < effective) {
      ring_.push_back(std::move(e));
    } else {
      ring_[head_] = std::move(e);
      head_ = (head_ + 1) % effective;
    }
  }

  std::size_t size() const { return ring_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool no_buffer_mode() const { return capacity_ == 0; }

  const Experience& sample(Rng& rng) const {
    return ring_[rng.uniform_int(static_cast<std::uint32_t>(ring_.size()))];
  }

  // Oldest-first enumeration, for inspection in tests.
  const Experience& at_fifo(std::size_t i) const {
    return ring_[(head_ + i) % ring_.size()];
  }

  const Experience& newest() const { return at_fifo(ring_.size() - 1); }

  void clear() {
    ring_.clear();
    head_ = 0;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // index of oldest once full
  std::vector<Experience> ring_;
};

}  // namespace nfsim
