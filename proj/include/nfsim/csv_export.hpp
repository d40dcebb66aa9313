#pragma once

#include <string>

#include "nfsim/metrics.hpp"

namespace nfsim {

// Writes throughput.csv, delay.csv, rewards.csv, and delay_cdf.csv into
// out_dir (created if missing). UTF-8, LF line endings, fixed headers.
void export_csv(const MetricsReport& report, const std::string& out_dir);

}  // namespace nfsim
