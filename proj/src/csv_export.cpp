#include "nfsim/csv_export.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace nfsim {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: LF endings everywhere
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void export_csv(const MetricsReport& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);

  {
    auto f = open_out(out_dir + "/throughput.csv");
    f << "t,mbps\n";
    for (std::size_t s = 0; s < report.throughput_mbps.size(); ++s) {
      f << s << "," << fmt(report.throughput_mbps[s]) << "\n";
    }
  }
  {
    auto f = open_out(out_dir + "/delay.csv");
    f << "t,ms\n";
    for (std::size_t s = 0; s < report.delay_ms.size(); ++s) {
      f << s << "," << fmt(report.delay_ms[s]) << "\n";
    }
  }
  {
    auto f = open_out(out_dir + "/rewards.csv");
    f << "agent,episode,cumulative_reward\n";
    for (const auto& [agent, rewards] : report.agent_episode_rewards) {
      for (std::size_t e = 0; e < rewards.size(); ++e) {
        f << agent << "," << e << "," << fmt(rewards[e]) << "\n";
      }
    }
  }
  {
    auto f = open_out(out_dir + "/delay_cdf.csv");
    f << "agent,rtt_ms,cumulative_fraction\n";
    for (const auto& [agent, rtts] : report.agent_rtt_seconds) {
      auto sorted = rtts;
      std::sort(sorted.begin(), sorted.end());
      std::size_t n = sorted.size();
      for (std::size_t i = 0; i < n; ++i) {
        double frac = static_cast<double>(i + 1) / static_cast<double>(n);
        f << agent << "," << fmt(sorted[i] * 1000.0) << "," << fmt(frac) << "\n";
      }
    }
  }
}

}  // namespace nfsim
