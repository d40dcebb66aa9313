#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfsim/dqn.hpp"
#include "nfsim/idqf.hpp"
#include "nfsim/topology.hpp"

namespace nfsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full experiment description. Parsed from a key = value text file;
// unknown keys are errors so hyperparameter typos cannot pass silently.
struct ScenarioConfig {
  std::string topology_path;
  std::int64_t rate_pps = 100;
  std::int64_t data_payload_bits = 8200;
  std::int64_t interest_size_bits = 320;
  double duration_s = 60.0;
  int episodes = 50;
  std::uint64_t seed = 1;
  std::vector<std::string> agents;  // node ids running IDQF
  IdqfConfig idqf;
  DqnHyper hyper;
  std::size_t replay_capacity = 5000;
  double retx_timeout_s = 1.0;
  std::size_t cs_capacity = 0;
  double warmup_s = 20.0;
  int replicates = 5;
  double pit_lifetime_s = 2.0;

  void validate() const;
};

ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace nfsim
