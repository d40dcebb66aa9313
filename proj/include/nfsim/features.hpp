#pragma once

#include <algorithm>
#include <vector>

#include "nfsim/epoch_stats.hpp"
#include "nfsim/rewards.hpp"

namespace nfsim {

enum class RetxFeature { None, Ratio, Diff };

struct FeatureConfig {
  bool avg_delay = true;
  bool satisfaction_ratio = true;
  RetxFeature retx = RetxFeature::None;

  int per_face_count() const {
    return (avg_delay ? 1 : 0) + (satisfaction_ratio ? 1 : 0) + (retx != RetxFeature::None ? 1 : 0);
  }
  int dimension(int k_faces) const { return per_face_count() * k_faces; }
};

constexpr double kDelayCapSeconds = 2.0;   // clip before scaling to [0,1]
constexpr double kRetxDiffScale = 1.0 / 64.0;

// Builds the state vector: one block per face in FIB rank order. Every
// component lands in [0,1].
inline std::vector<double> extract_features(const EpochStats& stats, const FeatureConfig& cfg) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.dimension(stats.k())));
  for (int j = 0; j < stats.k(); ++j) {
    if (cfg.avg_delay) {
      const auto& ring = stats.last5_delays(j);
      double mean = 0.0;
      if (!ring.empty()) {
        for (double v : ring) mean += v;
        mean /= static_cast<double>(ring.size());
      }
      out.push_back(std::clamp(mean, 0.0, kDelayCapSeconds) / kDelayCapSeconds);
    }
    if (cfg.satisfaction_ratio) {
      double ratio = stats.forwarded(j) > 0
                         ? static_cast<double>(stats.satisfied(j)) /
                               static_cast<double>(stats.forwarded(j))
                         : 0.0;
      out.push_back(std::clamp(ratio, 0.0, 1.0));
    }
    switch (cfg.retx) {
      case RetxFeature::None:
        break;
      case RetxFeature::Ratio:
        out.push_back(retx_ratio(stats.retransmitted_from(j), stats.retransmitted()));
        break;
      case RetxFeature::Diff: {
        double d = j == stats.chosen_face()
                       ? retx_diff(stats.retransmitted(), stats.fresh()) * kRetxDiffScale
                       : 0.0;
        out.push_back(std::clamp(d, 0.0, 1.0));
        break;
      }
    }
  }
  return out;
}

}  // namespace nfsim
