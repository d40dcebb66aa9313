#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nfsim/dqn.hpp"

namespace nfsim {

// Learning state of one agent. Persists across episodes while network
// state (PIT, queues, epoch statistics) is rebuilt fresh per episode.
struct AgentState {
  std::string node_id;  // topology node the agent sits on
  Mlp net;
  std::optional<Mlp> target;
  ReplayBuffer buffer;
  DqnHyper hyper;
  Rng rng;
  std::uint64_t decision_steps = 0;
  std::uint64_t train_steps = 0;

  AgentState(std::string node, int input_dim, int hidden_dim, int actions,
             const DqnHyper& h, std::size_t replay_capacity, Rng r)
      : node_id(std::move(node)),
        net(input_dim, hidden_dim, actions),
        buffer(replay_capacity),
        hyper(h),
        rng(r) {
    net.init_random(rng);
    if (hyper.use_target_network) target = net;
  }

  double current_epsilon() const { return epsilon_at(decision_steps, hyper); }

  int decide(std::span<const double> state, bool greedy) {
    double eps = greedy ? 0.0 : current_epsilon();
    int action = act(net, state, eps, rng);
    ++decision_steps;
    return action;
  }

  bool ready_to_train() const {
    return buffer.no_buffer_mode() ? buffer.size() >= 1
                                   : buffer.size() >= static_cast<std::size_t>(hyper.batch_size);
  }

  std::optional<double> train_if_ready() {
    if (!ready_to_train()) return std::nullopt;
    const Mlp* boot = target ? &*target : nullptr;
    double loss = train_step(net, buffer, hyper, rng, boot);
    ++train_steps;
    if (target && train_steps % static_cast<std::uint64_t>(hyper.target_sync_every) == 0) {
      *target = net;
    }
    return loss;
  }
};

}  // namespace nfsim
