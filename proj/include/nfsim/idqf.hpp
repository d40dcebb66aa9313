#pragma once

#include <unordered_map>
#include <vector>

#include "nfsim/dqn_agent.hpp"
#include "nfsim/engine.hpp"
#include "nfsim/epoch_stats.hpp"
#include "nfsim/features.hpp"
#include "nfsim/strategy.hpp"

namespace nfsim {

enum class RetxMode { BrWay, AgentWay };
enum class RewardKind { Rw, Rw1 };

struct IdqfConfig {
  SimTime delta_t = 100 * kMillisecond;  // decision period
  RetxMode retx_mode = RetxMode::AgentWay;
  FeatureConfig features;
  RewardKind reward = RewardKind::Rw;
  int top_k_faces = 2;

  void validate() const {
    if (delta_t <= 0) throw std::invalid_argument("delta_t must be > 0");
    if (top_k_faces < 2) throw std::invalid_argument("top_k_faces must be >= 2");
  }
};

// Tracks, per content name, the face index of the FIRST transmission so
// a later retransmission can be attributed to its original face.
// Entries linger one epoch past PIT-entry removal.
class OriginTable {
 public:
  void record_first(const Name& name, int face_index) {
    table_.emplace(name, Entry{face_index, -1});
  }

  int lookup(const Name& name) const {
    auto it = table_.find(name);
    return it == table_.end() ? -1 : it->second.face_index;
  }

  void on_pit_erased(const Name& name, SimTime now, SimTime grace) {
    auto it = table_.find(name);
    if (it != table_.end()) it->second.evict_at = now + grace;
  }

  void prune(SimTime now) {
    for (auto it = table_.begin(); it != table_.end();) {
      if (it->second.evict_at >= 0 && it->second.evict_at <= now) {
        it = table_.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::size_t size() const { return table_.size(); }

 private:
  struct Entry {
    int face_index;
    SimTime evict_at;  // -1 while the PIT entry is alive
  };
  std::unordered_map<Name, Entry, NameHash> table_;
};

// The per-node DQN forwarding strategy. The agent's chosen face is held
// for a whole decision epoch; epoch boundaries are detected lazily on
// interest arrival, with a guard timer closing idle epochs.
class IdqfStrategy : public Strategy {
 public:
  IdqfStrategy(IdqfConfig cfg, AgentState& agent, Engine& engine, bool greedy = false);

  // Called once the node's FIB is populated, before traffic starts.
  void begin_episode(Node& node, SimTime now);
  // Closes the final epoch, marking its transition terminal.
  void finish_episode(Node& node, SimTime now);

  std::optional<int> choose_face(Node& node, const FibEntry& fib, const PitEntry* entry,
                                 const Interest& interest, bool is_retx, SimTime now) override;
  void on_data(Node& node, const Data& data, const OutRecord& matched, SimTime now) override;
  void on_pit_erased(const Name& name, SimTime now) override;

  double episode_reward() const { return episode_reward_; }
  const std::vector<std::uint64_t>& face_forwarded_total() const { return face_forwarded_total_; }
  const std::vector<double>& epoch_rewards() const { return epoch_rewards_; }
  std::uint64_t decisions_made() const { return decisions_made_; }
  const std::vector<double>& rtt_log_seconds() const { return rtt_log_; }
  const EpochStats& stats() const { return stats_; }

  const AgentState& agent() const { return agent_; }

 private:
  void close_epoch(Node& node, SimTime now, bool terminal);
  void arm_guard(Node& node);
  int face_index_of(int face_id) const;
  double compute_reward() const;

  IdqfConfig cfg_;
  AgentState& agent_;
  Engine& engine_;
  bool greedy_;

  std::vector<int> action_faces_;  // face id per action index, FIB rank order
  EpochStats stats_;
  OriginTable origins_;
  std::vector<double> pending_state_;
  int pending_action_ = -1;
  bool episode_done_ = false;
  std::uint64_t guard_gen_ = 0;
  std::uint64_t decisions_made_ = 0;

  double episode_reward_ = 0.0;
  std::vector<std::uint64_t> face_forwarded_total_;
  std::vector<double> epoch_rewards_;
  std::vector<double> rtt_log_;  // every RTT sample, for delay CDFs
};

}  // namespace nfsim
