#pragma once

#include <string>

#include "nfsim/runner.hpp"

namespace nfsim {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Textual weight dump, one file per agent (agent_<node>.ckpt). The
// header pins dims, feature flags, action count, and a hyperparameter
// snapshot; parameters are hexfloats, so save/load round-trips exactly.
void save_checkpoints(const AgentPool& pool, const ScenarioConfig& cfg,
                      const std::string& out_dir);

// Loads agent_<node>.ckpt for every configured agent and validates the
// header against cfg. Mismatched dims are fatal.
AgentPool load_checkpoints(const ScenarioConfig& cfg, const std::string& dir);

}  // namespace nfsim
