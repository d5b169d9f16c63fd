/*
Copyright 2026 The slac Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SLAC_AC_TRAINER_HPP
#define SLAC_AC_TRAINER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "slac/nn/network.hpp"
#include "slac/nn/optimizer.hpp"
#include "slac/ocp/problem.hpp"
#include "slac/sl/bellman.hpp"

namespace slac::ac {

/// Hidden-layer description of an actor or critic; the output layer is implied.
struct NetworkSpec {
  std::vector<Index> hidden{128, 128, 128, 128};
  nn::Activation activation = nn::Activation::Tanh;
  // One flag per hidden layer, or empty for no residual blocks.
  std::vector<bool> residual;

  bool operator==(const NetworkSpec&) const = default;
};

struct TrainConfig {
  sl::SlConfig sl;
  // Moving-average coefficient for the target weights; 0 disables averaging.
  double alpha = 0.0;
  Index n_domain = 500;
  Index n_target = 1;
  Index actor_steps = 5;
  Index critic_steps = 20;
  // Extra critic steps (factor - 1) * critic_steps when the fitted loss stays above threshold.
  double critic_boost_threshold = 1e-3;
  Index critic_boost_factor = 4;
  nn::OptimizerParams actor_optimizer = nn::OptimizerParams::adam();
  nn::OptimizerParams critic_optimizer = nn::OptimizerParams::adam();
  Index iterations = 1000;
  std::uint64_t seed = 0;
  double target_loss_weight = 1.0;
  bool early_stop = false;
  Index early_stop_window = 50;
  double early_stop_mean_tol = 1e-4;
  double early_stop_var_tol = 1e-6;
  // Iterations between checkpoints; 0 disables periodic checkpoints.
  Index checkpoint_interval = 0;

  void validate() const {
    sl.validate();
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("train.alpha must lie in [0, 1]");
    if (n_domain < 1) throw ConfigError("train.n_domain must be >= 1");
    if (n_target < 1) throw ConfigError("train.n_target must be >= 1");
    if (actor_steps < 1) throw ConfigError("train.actor_steps must be >= 1");
    if (critic_steps < 1) throw ConfigError("train.critic_steps must be >= 1");
    if (critic_boost_factor < 1) throw ConfigError("train.critic_boost_factor must be >= 1");
    if (!(critic_boost_threshold >= 0.0)) {
      throw ConfigError("train.critic_boost_threshold must be >= 0");
    }
    if (iterations < 1) throw ConfigError("train.iterations must be >= 1");
    if (!(target_loss_weight > 0.0)) throw ConfigError("train.target_loss_weight must be positive");
    if (early_stop_window < 2) throw ConfigError("train.early_stop_window must be >= 2");
    if (checkpoint_interval < 0) throw ConfigError("train.checkpoint_interval must be >= 0");
    actor_optimizer.validate();
    critic_optimizer.validate();
  }

  bool operator==(const TrainConfig&) const = default;
};

/// One outer iteration's diagnostics.
struct IterationRecord {
  Index iteration = 0;
  double actor_loss_initial = 0.0;
  double actor_loss = 0.0;
  double critic_loss = 0.0;  // mean squared fit error on X_Omega after fitting
  double target_loss = 0.0;  // mean V~^2 on X_T after fitting
  Index critic_steps = 0;
  sl::ResidualStats residual;  // V~_avg - H~ on X_Omega before fitting
  double update_norm = 0.0;    // relative change of the averaged weights
  double wall_time = 0.0;      // seconds since training started
};

struct TrainState {
  Index iteration = 0;
  nn::Network actor;
  nn::Network actor_avg;
  nn::Network critic;
  nn::Network critic_avg;
  nn::Optimizer actor_opt;
  nn::Optimizer critic_opt;
  Rng rng;
  std::vector<IterationRecord> history;
};

inline std::vector<nn::LayerSpec> actor_layers(const ocp::Problem& p, const NetworkSpec& spec) {
  return nn::mlp_layers(p.feature_dim(), spec.hidden, p.control_dim(), spec.activation,
                        spec.residual);
}

inline std::vector<nn::LayerSpec> critic_layers(const ocp::Problem& p, const NetworkSpec& spec) {
  return nn::mlp_layers(p.feature_dim(), spec.hidden, 1, spec.activation, spec.residual);
}

inline nn::OutputBounds control_bounds(const ocp::Problem& p) {
  return {p.control_lower(), p.control_upper()};
}

/// Fresh weights (W^0) with the averaged copies equal to them.
inline TrainState initial_state(const ocp::Problem& p, const NetworkSpec& actor_spec,
                                const NetworkSpec& critic_spec, const TrainConfig& cfg) {
  cfg.validate();
  TrainState s;
  // Independent streams for the two initializations and for sampling.
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32)};
  std::vector<std::uint64_t> seeds(3);
  {
    std::vector<std::uint32_t> raw(6);
    seq.generate(raw.begin(), raw.end());
    for (std::size_t i = 0; i < 3; ++i) {
      seeds[i] = (static_cast<std::uint64_t>(raw[2 * i]) << 32) | raw[2 * i + 1];
    }
  }
  s.actor = nn::Network::initialized(actor_layers(p, actor_spec), seeds[0], control_bounds(p));
  s.critic = nn::Network::initialized(critic_layers(p, critic_spec), seeds[1]);
  s.actor_avg = s.actor;
  s.critic_avg = s.critic;
  s.actor_opt = nn::Optimizer(cfg.actor_optimizer, s.actor.size());
  s.critic_opt = nn::Optimizer(cfg.critic_optimizer, s.critic.size());
  s.rng.seed(seeds[2]);
  return s;
}

inline void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw NumericalError(what + " is not finite");
}

struct ActorStageResult {
  std::vector<double> losses;  // mean H~ before each step
};

/// Gradient steps on J(W_U) = mean_x H~(x, V~(., W_V_avg), U(x, W_U)); the
/// averaged critic is held fixed.
inline ActorStageResult actor_stage(TrainState& s, const ocp::Problem& p, const TrainConfig& cfg,
                                    const Matrix& states) {
  const sl::NetworkCritic critic(s.critic_avg, p);
  const Matrix feats = p.features_batch(states);
  const double inv_n = 1.0 / static_cast<double>(states.cols());
  ActorStageResult result;
  Vector w = s.actor.weights();
  Vector grad;
  for (Index step = 0; step < cfg.actor_steps; ++step) {
    nn::ForwardCache cache;
    const Matrix controls = s.actor.forward_batch(feats, &cache);
    const sl::SlEvaluation ev = sl::sl_operator_batch(p, critic, states, controls, cfg.sl, true);
    const double loss = ev.values.mean();
    require_finite(loss, "actor loss");
    result.losses.push_back(loss);
    s.actor.backward(cache, ev.control_gradients * inv_n, &grad, nullptr);
    s.actor_opt.step(w, grad);
    s.actor.set_weights(w);
  }
  return result;
}

/// Regression targets y = H~(x, V~(., W_V_avg), U(x, W_U_avg)); no gradient
/// flows through them.
inline Vector critic_targets(const TrainState& s, const ocp::Problem& p, const TrainConfig& cfg,
                             const Matrix& states) {
  const sl::NetworkCritic critic(s.critic_avg, p);
  const Matrix controls = s.actor_avg.forward_batch(p.features_batch(states));
  return sl::sl_operator_batch(p, critic, states, controls, cfg.sl).values;
}

struct CriticLoss {
  double domain = 0.0;
  double target = 0.0;
  double total() const { return domain + target; }
};

struct CriticStageResult {
  std::vector<double> losses;  // total loss before each step
  CriticLoss final_loss;
  Index steps = 0;
  sl::ResidualStats residual;
};

namespace detail {

/// Loss and (optionally) weight gradient of
///   mean_i (V~(x_i) - y_i)^2 + w_T mean_j V~(z_j)^2.
inline CriticLoss critic_loss(const nn::Network& critic, const Matrix& feats, Index n_domain,
                              const Vector& targets, double target_weight, Vector* grad) {
  const Index n = feats.cols();
  const Index n_target = n - n_domain;
  nn::ForwardCache cache;
  const Matrix raw = critic.forward_batch(feats, grad ? &cache : nullptr);
  Matrix upstream(1, n);
  CriticLoss loss;
  for (Index j = 0; j < n; ++j) {
    const double v = sl::critic_transformed_value(raw(0, j));
    const double slope = sl::critic_transformed_slope(raw(0, j));
    if (j < n_domain) {
      const double e = v - targets[j];
      loss.domain += e * e / static_cast<double>(n_domain);
      upstream(0, j) = 2.0 * e / static_cast<double>(n_domain) * slope;
    } else {
      loss.target += target_weight * v * v / static_cast<double>(n_target);
      upstream(0, j) = 2.0 * target_weight * v / static_cast<double>(n_target) * slope;
    }
  }
  require_finite(loss.total(), "critic loss");
  if (grad) critic.backward(cache, upstream, grad, nullptr);
  return loss;
}

}  // namespace detail

/// Fits the online critic to frozen targets on X_Omega plus V~ = 0 on X_T.
inline CriticStageResult critic_stage(TrainState& s, const ocp::Problem& p, const TrainConfig& cfg,
                                      const Matrix& states, const Matrix& target_states) {
  const Vector targets = critic_targets(s, p, cfg, states);
  CriticStageResult result;
  {
    const sl::NetworkCritic avg(s.critic_avg, p);
    result.residual = sl::summarize_residuals(avg.values(states) - targets);
  }
  Matrix feats(p.feature_dim(), states.cols() + target_states.cols());
  feats << p.features_batch(states), p.features_batch(target_states);
  Vector w = s.critic.weights();
  Vector grad;
  auto run_steps = [&](Index count) {
    for (Index step = 0; step < count; ++step) {
      const CriticLoss loss = detail::critic_loss(s.critic, feats, states.cols(), targets,
                                                  cfg.target_loss_weight, &grad);
      result.losses.push_back(loss.total());
      s.critic_opt.step(w, grad);
      s.critic.set_weights(w);
      ++result.steps;
    }
  };
  auto evaluate = [&] {
    return detail::critic_loss(s.critic, feats, states.cols(), targets, cfg.target_loss_weight,
                               nullptr);
  };
  run_steps(cfg.critic_steps);
  result.final_loss = evaluate();
  if (cfg.critic_boost_factor > 1 && result.final_loss.total() > cfg.critic_boost_threshold) {
    run_steps((cfg.critic_boost_factor - 1) * cfg.critic_steps);
    result.final_loss = evaluate();
  }
  return result;
}

struct TrainCallbacks {
  // Called after every outer iteration, once the record is appended.
  std::function<void(const TrainState&, const IterationRecord&)> on_iteration;
  // Called every cfg.checkpoint_interval iterations.
  std::function<void(const TrainState&)> on_checkpoint;
  // Called with the last consistent state before a failure propagates.
  std::function<void(const TrainState&, const std::exception&)> on_failure;
};

enum class StopReason { IterationLimit, Converged };

struct TrainResult {
  StopReason reason = StopReason::IterationLimit;
  Index iterations_run = 0;
};

/// Outer loop: sample, actor stage, average actor, critic stage, average critic.
inline TrainResult train(const ocp::Problem& p, const TrainConfig& cfg, TrainState& s,
                         const TrainCallbacks& callbacks = {}) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  TrainResult result;
  std::deque<double> window;
  while (s.iteration < cfg.iterations) {
    // Stages mutate a scratch copy so a failure leaves `s` at the last good iteration.
    std::vector<IterationRecord> history = std::move(s.history);
    s.history.clear();
    TrainState next = s;
    s.history = std::move(history);
    IterationRecord rec;
    try {
      const Matrix states = p.sample_domain(next.rng, cfg.n_domain);
      const Matrix target_states = p.sample_target(next.rng, cfg.n_target);

      const ActorStageResult actor = actor_stage(next, p, cfg, states);
      const Vector actor_prev = next.actor_avg.weights();
      next.actor_avg.set_weights(nn::polyak_average(actor_prev, next.actor.weights(), cfg.alpha));

      const CriticStageResult critic = critic_stage(next, p, cfg, states, target_states);
      const Vector critic_prev = next.critic_avg.weights();
      next.critic_avg.set_weights(
          nn::polyak_average(critic_prev, next.critic.weights(), cfg.alpha));

      const double change = (next.actor_avg.weights() - actor_prev).squaredNorm() +
                            (next.critic_avg.weights() - critic_prev).squaredNorm();
      const double scale = actor_prev.squaredNorm() + critic_prev.squaredNorm();
      rec.iteration = next.iteration;
      rec.actor_loss_initial = actor.losses.front();
      rec.actor_loss = actor.losses.back();
      rec.critic_loss = critic.final_loss.domain;
      rec.target_loss = critic.final_loss.target;
      rec.critic_steps = critic.steps;
      rec.residual = critic.residual;
      rec.update_norm = std::sqrt(change / std::max(scale, 1e-300));
    } catch (const std::exception& e) {
      if (callbacks.on_failure) callbacks.on_failure(s, e);
      throw;
    }
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++next.iteration;
    next.history = std::move(s.history);
    next.history.push_back(rec);
    s = std::move(next);
    ++result.iterations_run;
    if (callbacks.on_iteration) callbacks.on_iteration(s, rec);
    if (callbacks.on_checkpoint && cfg.checkpoint_interval > 0 &&
        s.iteration % cfg.checkpoint_interval == 0) {
      callbacks.on_checkpoint(s);
    }
    if (cfg.early_stop) {
      window.push_back(rec.update_norm);
      if (static_cast<Index>(window.size()) > cfg.early_stop_window) window.pop_front();
      if (static_cast<Index>(window.size()) == cfg.early_stop_window) {
        const double n = static_cast<double>(window.size());
        const double mean = std::accumulate(window.begin(), window.end(), 0.0) / n;
        double var = 0.0;
        for (double v : window) var += (v - mean) * (v - mean);
        var /= n;
        if (mean < cfg.early_stop_mean_tol && var < cfg.early_stop_var_tol) {
          result.reason = StopReason::Converged;
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace slac::ac

#endif  // SLAC_AC_TRAINER_HPP
