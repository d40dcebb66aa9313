#pragma once

#include <map>
#include <optional>
#include <string>

#include "nfsim/dqn_agent.hpp"
#include "nfsim/metrics.hpp"
#include "nfsim/scenario.hpp"
#include "nfsim/topology.hpp"

namespace nfsim {

using AgentPool = std::map<std::string, AgentState>;

enum class RunMode {
  Train,       // epsilon-greedy decisions, learning on
  Greedy,      // trained policy, no exploration, no learning
  BestRoute,   // no agents at all
};

// One agent per configured node; network dims derived from the feature
// set and the action count (top-K faces).
AgentPool make_agent_pool(const ScenarioConfig& cfg);

struct EpisodeOutcome {
  std::vector<std::pair<SimTime, std::int64_t>> rx_bits;
  std::vector<std::pair<SimTime, SimTime>> delays;
  std::uint64_t sent_new = 0;
  std::uint64_t consumer_retx = 0;
  std::uint64_t received = 0;
  std::uint64_t link_drops = 0;
  std::map<std::string, double> agent_reward;
  std::map<std::string, std::vector<double>> agent_rtts;
  std::map<std::string, std::vector<std::uint64_t>> agent_face_counts;
};

// Runs one fresh-network episode. `env_seed` drives everything except
// the agents' own RNG streams, which live in the pool.
EpisodeOutcome run_episode(const ScenarioConfig& cfg, const TopologySpec& topo,
                           AgentPool* agents, RunMode mode, std::uint64_t env_seed);

struct TrainingResult {
  // rewards[node][episode] = cumulative reward of that episode
  std::map<std::string, std::vector<double>> rewards;
};

TrainingResult run_training(const ScenarioConfig& cfg, const TopologySpec& topo,
                            AgentPool& agents);

// Greedy evaluation over cfg.replicates seeds (or BR when agents is
// null). The pool is copied internally; evaluation never mutates it.
MetricsReport run_evaluation(const ScenarioConfig& cfg, const TopologySpec& topo,
                             const AgentPool* agents);

}  // namespace nfsim
