#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "nfsim/mlp.hpp"
#include "nfsim/replay_buffer.hpp"
#include "nfsim/rng.hpp"

namespace nfsim {

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DqnHyper {
  double lr = 0.001;         // network gradient step size
  double gamma = 0.9;        // discount factor
  double eps_start = 1.0;
  double eps_min = 0.05;
  double decay_rate = 0.001;  // exploration decay per agent decision
  int batch_size = 16;
  int episodes = 50;
  double penalty_c_seconds = 4.0;  // RW drop penalty
  double cm = 4000.0;              // RW1 constant multiplier
  std::int64_t r_thrs = 0;         // RW1 retransmission threshold
  double q_blend = 1.0;            // Q-target blending coefficient
  bool use_target_network = false;
  int target_sync_every = 100;  // steps, when target network enabled

  void validate() const {
    if (gamma < 0.0 || gamma >= 1.0) throw std::invalid_argument("gamma must be in [0,1)");
    if (eps_min <= 0.0 || eps_min > eps_start || eps_start > 1.0)
      throw std::invalid_argument("need 0 < eps_min <= eps_start <= 1");
    if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  }
};

// eps = eps_min + (eps_start - eps_min) * exp(-decay_rate * step), where
// step counts agent decisions across episodes.
double epsilon_at(std::uint64_t step, const DqnHyper& hyper);

// Epsilon-greedy action: uniform with probability eps, else the argmax
// Q-value with ties broken toward the lowest index.
int act(const Mlp& net, std::span<const double> state, double eps, Rng& rng);

int greedy_action(const Mlp& net, std::span<const double> state);

// One DQN update: samples a mini-batch (or the single stored transition
// in no-buffer mode), builds targets y = r + gamma * max_a' Q(s', a')
// (bootstrap dropped on terminal transitions), and takes one gradient
// step on the squared error of the taken action's Q-value. Returns the
// mean batch loss. target_net, when given, supplies the bootstrap
// Q-values instead of net.
double train_step(Mlp& net, ReplayBuffer& buffer, const DqnHyper& hyper, Rng& rng,
                  const Mlp* target_net = nullptr);

}  // namespace nfsim
