#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

// Per-agent counters accumulated over one decision epoch. Face indices
// are positions in the agent's truncated FIB ranking (0 = best), not
// node-local face ids. The last-5 delay rings are sliding windows and
// survive epoch resets; everything else is cleared at each boundary.
class EpochStats {
 public:
  explicit EpochStats(int k_faces = 2)
      : k_(k_faces),
        r_orig_(k_faces, 0),
        satisfied_(k_faces, 0),
        forwarded_(k_faces, 0),
        last5_(k_faces) {}

  void reset(SimTime epoch_start, int chosen_face) {
    epoch_start_ = epoch_start;
    lf_ = chosen_face;
    m_ = 0;
    r_ = 0;
    n_ = 0;
    rtt_samples_.clear();
    std::fill(r_orig_.begin(), r_orig_.end(), 0);
    std::fill(satisfied_.begin(), satisfied_.end(), 0);
    std::fill(forwarded_.begin(), forwarded_.end(), 0);
  }

  // An interest was forwarded via `face` this epoch. Retransmissions
  // carry the face index of their original (first) transmission; only
  // those forwarded via the chosen face feed R / R_j.
  void count_forwarded(int face, bool is_new, int orig_face) {
    ++forwarded_[face];
    if (face != lf_) return;
    if (is_new) {
      ++n_;
    } else {
      ++r_;
      if (orig_face >= 0 && orig_face < k_) ++r_orig_[orig_face];
    }
  }

  // Data arrived for an out-record on `face` that was sent at `sent_at`.
  void record_data(int face, double rtt_seconds, SimTime sent_at) {
    auto& ring = last5_[face];
    ring.push_back(rtt_seconds);
    if (ring.size() > 5) ring.erase(ring.begin());
    if (sent_at >= epoch_start_) ++satisfied_[face];
    if (face == lf_) {
      ++m_;
      rtt_samples_.push_back(rtt_seconds);
    }
  }

  SimTime epoch_start() const { return epoch_start_; }
  int chosen_face() const { return lf_; }
  int k() const { return k_; }
  std::int64_t data_count() const { return m_; }
  std::int64_t retransmitted() const { return r_; }
  std::int64_t fresh() const { return n_; }
  std::int64_t retransmitted_from(int face) const { return r_orig_[face]; }
  std::int64_t satisfied(int face) const { return satisfied_[face]; }
  std::int64_t forwarded(int face) const { return forwarded_[face]; }
  const std::vector<double>& rtt_samples() const { return rtt_samples_; }
  const std::vector<double>& last5_delays(int face) const { return last5_[face]; }

  double avg_rtt_seconds() const {
    if (rtt_samples_.empty()) return 0.0;
    double s = 0.0;
    for (double v : rtt_samples_) s += v;
    return s / static_cast<double>(rtt_samples_.size());
  }

  void clear_windows() {
    for (auto& ring : last5_) ring.clear();
  }

 private:
  int k_;
  SimTime epoch_start_ = 0;
  int lf_ = 0;
  std::int64_t m_ = 0;
  std::int64_t r_ = 0;
  std::int64_t n_ = 0;
  std::vector<double> rtt_samples_;
  std::vector<std::int64_t> r_orig_;
  std::vector<std::int64_t> satisfied_;
  std::vector<std::int64_t> forwarded_;
  std::vector<std::vector<double>> last5_;
};

}  // namespace nfsim
