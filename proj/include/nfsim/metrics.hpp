#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

struct MetricsReport {
  // Per-second series over the full episode (averaged over replicates).
  std::vector<double> throughput_mbps;  // consumer goodput per second
  std::vector<double> delay_ms;         // mean app delay of packets received that second

  double throughput_mean = 0.0;  // post-warmup series mean
  double throughput_stddev = 0.0;
  double delay_mean_ms = 0.0;
  double delay_stddev_ms = 0.0;

  double total_throughput_mbps = 0.0;  // post-warmup bits / (duration - warmup)
  double avg_app_delay_ms = 0.0;       // post-warmup, received packets only

  std::map<std::string, std::vector<double>> agent_episode_rewards;
  std::map<std::string, std::vector<double>> agent_rtt_seconds;      // for delay CDFs
  std::map<std::string, std::vector<double>> agent_face_share;       // utilization per face rank

  std::uint64_t interests_sent = 0;
  std::uint64_t consumer_retransmissions = 0;
  std::uint64_t data_received = 0;
  std::uint64_t link_drops = 0;
};

double mean_of(const std::vector<double>& v);
double stddev_of(const std::vector<double>& v);
double variance_of(const std::vector<double>& v);  // sample variance

}  // namespace nfsim
