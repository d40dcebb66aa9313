#include "nfsim/idqf.hpp"

#include <algorithm>

#include "nfsim/best_route.hpp"
#include "nfsim/rewards.hpp"

namespace nfsim {

IdqfStrategy::IdqfStrategy(IdqfConfig cfg, AgentState& agent, Engine& engine, bool greedy)
    : cfg_(cfg), agent_(agent), engine_(engine), greedy_(greedy), stats_(cfg.top_k_faces) {
  cfg_.validate();
}

void IdqfStrategy::begin_episode(Node& node, SimTime now) {
  // Single-prefix scenarios: the node's only FIB entry drives the agent.
  // The action set is the truncated ranking, fixed for the whole run.
  const FibEntry* fib = nullptr;
  action_faces_.clear();
  node.fib.for_each([&](const FibEntry& e) {
    if (fib == nullptr) fib = &e;
  });
  if (fib == nullptr) throw SimError("idqf: agent node has no FIB entry");
  int k = std::min<int>(cfg_.top_k_faces, static_cast<int>(fib->next_hops.size()));
  for (int i = 0; i < k; ++i) action_faces_.push_back(fib->next_hops[i].face);

  stats_ = EpochStats(cfg_.top_k_faces);
  pending_state_ = extract_features(stats_, cfg_.features);
  pending_action_ = agent_.decide(pending_state_, greedy_);
  ++decisions_made_;
  stats_.reset(now, pending_action_);
  episode_done_ = false;
  arm_guard(node);
}

void IdqfStrategy::finish_episode(Node& node, SimTime now) {
  if (episode_done_) return;
  close_epoch(node, now, /*terminal=*/true);
  episode_done_ = true;
}

double IdqfStrategy::compute_reward() const {
  if (cfg_.reward == RewardKind::Rw) {
    return reward_rw(stats_.rtt_samples(), stats_.retransmitted(),
                     agent_.hyper.penalty_c_seconds);
  }
  double avg_ms = stats_.avg_rtt_seconds() * 1000.0;
  return reward_rw1(avg_ms, stats_.retransmitted(), stats_.fresh(),
                    stats_.retransmitted_from(stats_.chosen_face()), agent_.hyper.cm,
                    agent_.hyper.r_thrs);
}

void IdqfStrategy::close_epoch(Node& node, SimTime now, bool terminal) {
  double reward = compute_reward();
  episode_reward_ += reward;
  epoch_rewards_.push_back(reward);

  std::vector<double> next_state = extract_features(stats_, cfg_.features);
  if (pending_action_ >= 0) {
    agent_.buffer.push(
        Experience{pending_state_, pending_action_, reward, next_state, terminal});
    if (!greedy_) agent_.train_if_ready();
  }
  if (terminal) return;

  pending_action_ = agent_.decide(next_state, greedy_);
  ++decisions_made_;
  pending_state_ = std::move(next_state);
  stats_.reset(now, pending_action_);
  origins_.prune(now);
  arm_guard(node);
}

void IdqfStrategy::arm_guard(Node& node) {
  std::uint64_t gen = ++guard_gen_;
  engine_.schedule(stats_.epoch_start() + 2 * cfg_.delta_t, [this, &node, gen] {
    if (gen != guard_gen_ || episode_done_) return;
    if (engine_.now() >= stats_.epoch_start() + cfg_.delta_t) {
      close_epoch(node, engine_.now(), false);
    }
  });
}

int IdqfStrategy::face_index_of(int face_id) const {
  for (std::size_t i = 0; i < action_faces_.size(); ++i) {
    if (action_faces_[i] == face_id) return static_cast<int>(i);
  }
  return -1;
}

std::optional<int> IdqfStrategy::choose_face(Node& node, const FibEntry& fib,
                                             const PitEntry* entry, const Interest& interest,
                                             bool is_retx, SimTime now) {
  if (action_faces_.empty()) return std::nullopt;
  if (now >= stats_.epoch_start() + cfg_.delta_t && !episode_done_) {
    close_epoch(node, now, false);
  }

  int face_id;
  if (is_retx && cfg_.retx_mode == RetxMode::BrWay) {
    auto chosen = br_choose(fib, entry, true, now);
    if (!chosen) return std::nullopt;
    face_id = *chosen;
  } else {
    face_id = action_faces_[pending_action_];
  }

  int idx = face_index_of(face_id);
  if (idx >= 0) {
    if (face_forwarded_total_.size() != action_faces_.size())
      face_forwarded_total_.assign(action_faces_.size(), 0);
    ++face_forwarded_total_[idx];
    if (is_retx) {
      stats_.count_forwarded(idx, false, origins_.lookup(interest.name));
    } else {
      origins_.record_first(interest.name, idx);
      stats_.count_forwarded(idx, true, -1);
    }
  }
  return face_id;
}

void IdqfStrategy::on_data(Node&, const Data&, const OutRecord& matched, SimTime now) {
  int idx = face_index_of(matched.face);
  if (idx < 0) return;
  double rtt = to_seconds(now - matched.sent_at);
  stats_.record_data(idx, rtt, matched.sent_at);
  rtt_log_.push_back(rtt);
}

void IdqfStrategy::on_pit_erased(const Name& name, SimTime now) {
  origins_.on_pit_erased(name, now, cfg_.delta_t);
}

}  // namespace nfsim
