#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-threaded discrete-event engine. Events are totally ordered by
// (fire_at, seq) where seq is assigned in scheduling order, so ties fire
// in the order they were scheduled.
class Engine {
 public:
  using Handler = std::function<void()>;

  SimTime now() const { return now_; }

  void schedule(SimTime fire_at, Handler fn) {
    if (fire_at < now_) {
      throw SimError("schedule: event in the past");
    }
    queue_.push(Event{fire_at, next_seq_++, std::move(fn)});
  }

  void schedule_in(SimTime delay, Handler fn) { schedule(now_ + delay, std::move(fn)); }

  // Processes every event with fire_at <= t_end, in order, then advances
  // the clock to t_end. Returns the number of events processed.
  std::uint64_t run_until(SimTime t_end) {
    std::uint64_t processed = 0;
    while (!queue_.empty() && queue_.top().fire_at <= t_end) {
      // Handlers may schedule; pop before invoking.
      Event ev = std::move(const_cast<Event&>(queue_.top()));
      queue_.pop();
      now_ = ev.fire_at;
      ev.fn();
      ++processed;
    }
    now_ = t_end;
    return processed;
  }

  bool empty() const { return queue_.empty(); }

 private:
  struct Event {
    SimTime fire_at;
    std::uint64_t seq;
    Handler fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.seq > b.seq;
    }
  };

  SimTime now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
};

}  // namespace nfsim
