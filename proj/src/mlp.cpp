#include "nfsim/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace nfsim {

Mlp::Mlp(int input_dim, int hidden_dim, int output_dim)
    : in_(input_dim), hidden_(hidden_dim), out_(output_dim) {
  w1_ = 0;
  b1_ = w1_ + static_cast<std::size_t>(hidden_) * in_;
  w2_ = b1_ + hidden_;
  b2_ = w2_ + static_cast<std::size_t>(out_) * hidden_;
  params_.assign(b2_ + out_, 0.0);
}

void Mlp::init_random(Rng& rng) {
  double s1 = 1.0 / std::sqrt(static_cast<double>(in_));
  double s2 = 1.0 / std::sqrt(static_cast<double>(hidden_));
  for (std::size_t i = w1_; i < b1_; ++i) params_[i] = rng.uniform_range(-s1, s1);
  for (std::size_t i = b1_; i < w2_; ++i) params_[i] = 0.0;
  for (std::size_t i = w2_; i < b2_; ++i) params_[i] = rng.uniform_range(-s2, s2);
  for (std::size_t i = b2_; i < params_.size(); ++i) params_[i] = 0.0;
}

std::vector<double> Mlp::forward(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != in_) throw std::invalid_argument("mlp: input dim mismatch");
  std::vector<double> h(hidden_);
  for (int j = 0; j < hidden_; ++j) {
    double a = params_[b1_ + j];
    const double* w = &params_[w1_ + static_cast<std::size_t>(j) * in_];
    for (int i = 0; i < in_; ++i) a += w[i] * x[i];
    h[j] = a > 0.0 ? a : 0.0;
  }
  std::vector<double> q(out_);
  for (int k = 0; k < out_; ++k) {
    double a = params_[b2_ + k];
    const double* w = &params_[w2_ + static_cast<std::size_t>(k) * hidden_];
    for (int j = 0; j < hidden_; ++j) a += w[j] * h[j];
    q[k] = a;
  }
  return q;
}

double Mlp::accumulate_gradient(std::span<const double> x, int action, double target,
                                std::vector<double>& grad) const {
  if (static_cast<int>(x.size()) != in_) throw std::invalid_argument("mlp: input dim mismatch");
  if (grad.size() != params_.size()) grad.assign(params_.size(), 0.0);

  std::vector<double> pre(hidden_), h(hidden_);
  for (int j = 0; j < hidden_; ++j) {
    double a = params_[b1_ + j];
    const double* w = &params_[w1_ + static_cast<std::size_t>(j) * in_];
    for (int i = 0; i < in_; ++i) a += w[i] * x[i];
    pre[j] = a;
    h[j] = a > 0.0 ? a : 0.0;
  }
  double qa = params_[b2_ + action];
  const double* w2a = &params_[w2_ + static_cast<std::size_t>(action) * hidden_];
  for (int j = 0; j < hidden_; ++j) qa += w2a[j] * h[j];

  double err = qa - target;
  double dq = 2.0 * err;  // d(err^2)/dq

  grad[b2_ + action] += dq;
  double* gw2a = &grad[w2_ + static_cast<std::size_t>(action) * hidden_];
  for (int j = 0; j < hidden_; ++j) gw2a[j] += dq * h[j];

  for (int j = 0; j < hidden_; ++j) {
    if (pre[j] <= 0.0) continue;
    double dh = dq * w2a[j];
    grad[b1_ + j] += dh;
    double* gw1 = &grad[w1_ + static_cast<std::size_t>(j) * in_];
    for (int i = 0; i < in_; ++i) gw1[i] += dh * x[i];
  }
  return err * err;
}

void Mlp::apply_gradient(const std::vector<double>& grad, double lr, int batch) {
  double scale = lr / static_cast<double>(batch);
  for (std::size_t i = 0; i < params_.size(); ++i) params_[i] -= scale * grad[i];
}

bool Mlp::finite() const {
  for (double p : params_)
    if (!std::isfinite(p)) return false;
  return true;
}

}  // namespace nfsim
