#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nfsim/rng.hpp"

namespace nfsim {

// One-hidden-layer fully connected network: input -> hidden (rectifier)
// -> linear Q-values, one per action. Parameters live in a single flat
// vector so checkpoints and finite-difference checks can address them
// uniformly. Layout: W1 (hidden x in), b1, W2 (out x hidden), b2.
class Mlp {
 public:
  Mlp(int input_dim, int hidden_dim, int output_dim);

  // Uniform init in [-s, s] with s = 1/sqrt(fan_in), biases zero.
  void init_random(Rng& rng);

  std::vector<double> forward(std::span<const double> x) const;

  // Accumulates the gradient of (Q(x)[action] - target)^2 into grad
  // (same layout as params) and returns the squared error.
  double accumulate_gradient(std::span<const double> x, int action, double target,
                             std::vector<double>& grad) const;

  // One gradient-descent step: params -= lr/batch * grad.
  void apply_gradient(const std::vector<double>& grad, double lr, int batch);

  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

  int input_dim() const { return in_; }
  int hidden_dim() const { return hidden_; }
  int output_dim() const { return out_; }
  std::size_t param_count() const { return params_.size(); }

  bool finite() const;

 private:
  int in_, hidden_, out_;
  std::size_t w1_, b1_, w2_, b2_;  // offsets into params_
  std::vector<double> params_;
};

}  // namespace nfsim
