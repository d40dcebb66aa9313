#include "nfsim/dqn.hpp"

#include <algorithm>
#include <cmath>

namespace nfsim {

double epsilon_at(std::uint64_t step, const DqnHyper& hyper) {
  return hyper.eps_min +
         (hyper.eps_start - hyper.eps_min) * std::exp(-hyper.decay_rate * static_cast<double>(step));
}

int greedy_action(const Mlp& net, std::span<const double> state) {
  auto q = net.forward(state);
  int best = 0;
  for (int a = 1; a < static_cast<int>(q.size()); ++a) {
    if (q[a] > q[best]) best = a;
  }
  return best;
}

int act(const Mlp& net, std::span<const double> state, double eps, Rng& rng) {
  if (rng.uniform() < eps) {
    return static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(net.output_dim())));
  }
  return greedy_action(net, state);
}

double train_step(Mlp& net, ReplayBuffer& buffer, const DqnHyper& hyper, Rng& rng,
                  const Mlp* target_net) {
  const Mlp& bootstrap = target_net ? *target_net : net;
  int batch = buffer.no_buffer_mode() ? 1 : hyper.batch_size;

  std::vector<double> grad(net.param_count(), 0.0);
  double loss_sum = 0.0;
  for (int b = 0; b < batch; ++b) {
    const Experience& e =
        buffer.no_buffer_mode() ? buffer.newest() : buffer.sample(rng);
    double y = e.reward;
    if (!e.terminal) {
      auto qn = bootstrap.forward(e.next_state);
      y += hyper.gamma * *std::max_element(qn.begin(), qn.end());
    }
    if (hyper.q_blend != 1.0) {
      double q_cur = net.forward(e.state)[e.action];
      y = (1.0 - hyper.q_blend) * q_cur + hyper.q_blend * y;
    }
    loss_sum += net.accumulate_gradient(e.state, e.action, y, grad);
  }
  double loss = loss_sum / static_cast<double>(batch);
  if (!std::isfinite(loss)) {
    throw DivergenceError("train_step: non-finite loss");
  }
  net.apply_gradient(grad, hyper.lr, batch);
  if (!net.finite()) {
    throw DivergenceError("train_step: non-finite parameters after update");
  }
  return loss;
}

}  // namespace nfsim
