#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

struct LinkSpec {
  SimTime delay = 0;               // one-way propagation delay
  std::int64_t bandwidth_bps = 0;  // serialization rate
  int queue_capacity = 100;        // packets awaiting / under serialization

  void validate() const {
    if (delay <= 0) throw std::invalid_argument("link delay must be > 0");
    if (bandwidth_bps <= 0) throw std::invalid_argument("link bandwidth must be > 0");
    if (queue_capacity < 1) throw std::invalid_argument("link queue capacity must be >= 1");
  }
};

// One direction of a point-to-point link with a drop-tail FIFO queue.
// The queue counts packets not yet fully serialized; a packet in flight
// (post-serialization, pre-arrival) does not occupy the queue.
class LinkDir {
 public:
  explicit LinkDir(LinkSpec spec = {}) : spec_(spec) {}

  const LinkSpec& spec() const { return spec_; }

  // Offers a packet. Returns its arrival time at the far end, or nullopt
  // if the queue is full and the packet is dropped.
  std::optional<SimTime> transmit(std::int64_t size_bits, SimTime now) {
    prune(now);
    ++offered_;
    if (static_cast<int>(completions_.size()) >= spec_.queue_capacity) {
      ++dropped_;
      return std::nullopt;
    }
    SimTime start = std::max(now, next_free_);
    SimTime serialization = size_bits * kSecond / spec_.bandwidth_bps;
    SimTime done = start + serialization;
    next_free_ = done;
    completions_.push(done);
    ++delivered_;
    return done + spec_.delay;
  }

  int queued(SimTime now) {
    prune(now);
    return static_cast<int>(completions_.size());
  }

  std::uint64_t offered() const { return offered_; }
  std::uint64_t delivered() const { return delivered_; }
  std::uint64_t dropped() const { return dropped_; }

 private:
  void prune(SimTime now) {
    while (!completions_.empty() && completions_.top() <= now) completions_.pop();
  }

  LinkSpec spec_;
  SimTime next_free_ = 0;
  std::priority_queue<SimTime, std::vector<SimTime>, std::greater<SimTime>> completions_;
  std::uint64_t offered_ = 0;
  std::uint64_t delivered_ = 0;
  std::uint64_t dropped_ = 0;
};

}  // namespace nfsim
