#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace nfsim {

// Re-transmission ratio: share of the epoch's retransmitted packets whose
// original transmission used face j.
inline double retx_ratio(std::int64_t r_j, std::int64_t r_total) {
  if (r_j <= 0) return 0.0;
  return static_cast<double>(r_j) / static_cast<double>(r_total);
}

// Re-transmission difference: retransmitted minus new packets in the
// epoch, clamped at zero.
inline double retx_diff(std::int64_t r_total, std::int64_t n_new) {
  std::int64_t d = r_total - n_new;
  return d < 0 ? 0.0 : static_cast<double>(d);
}

// RW reward: negative mean RTT over the epoch plus a per-retransmission
// penalty of C seconds. With no data received the mean term is zero.
// rtt_seconds holds one sample per Data packet received via the chosen
// face; r_total counts retransmitted packets forwarded via it.
inline double reward_rw(const std::vector<double>& rtt_seconds, std::int64_t r_total,
                        double penalty_c_seconds) {
  double mean = 0.0;
  if (!rtt_seconds.empty()) {
    mean = std::accumulate(rtt_seconds.begin(), rtt_seconds.end(), 0.0) /
           static_cast<double>(rtt_seconds.size());
  }
  return -(mean + penalty_c_seconds * static_cast<double>(r_total));
}

// RW1 reward, four cases on (R - N vs threshold, AvgD zero or not).
// avg_delay_ms is the average delay (milliseconds) of data received via
// the chosen face; r_lf counts retransmissions originally sent via it.
inline double reward_rw1(double avg_delay_ms, std::int64_t r_total, std::int64_t n_new,
                         std::int64_t r_lf, double cm, std::int64_t r_thrs) {
  bool over = (r_total - n_new) > r_thrs;
  bool has_delay = avg_delay_ms != 0.0;
  if (over && has_delay) return -(avg_delay_ms + static_cast<double>(r_lf) * cm);
  if (over) return -(static_cast<double>(r_lf) * cm);
  if (has_delay) return -avg_delay_ms;
  return -10000.0;
}

}  // namespace nfsim
