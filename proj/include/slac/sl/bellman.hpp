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

#ifndef SLAC_SL_BELLMAN_HPP
#define SLAC_SL_BELLMAN_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "slac/ocp/problem.hpp"
#include "slac/sl/critic.hpp"

namespace slac::sl {

/// Time step and running-cost rescale of the semi-discrete operator.
struct SlConfig {
  double dt = 0.05;
  // l -> mu * l inside the discount; reported costs are divided by mu.
  double mu = 1.0;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (!(mu > 0.0 && mu <= 1.0)) throw ConfigError("mu must lie in (0, 1]");
  }

  /// Largest possible discount, attained where l = 1.
  double max_discount() const { return std::exp(-dt * mu); }

  bool operator==(const SlConfig&) const = default;
};

/// x + dt f(x, u), projected back onto the state manifold.
inline Vector euler_step(const ocp::Problem& p, const Vector& x, const Vector& u, double dt) {
  Vector next = x + dt * p.dynamics(x, u);
  p.project_state(next);
  if (!next.allFinite()) {
    throw NumericalError(p.name() + ": non-finite Euler successor from state " + format_vector(x) +
                         " under control " + format_vector(u));
  }
  return next;
}

/// gamma(x, u) = exp(-dt mu l(x, u)).
inline double discount(const ocp::Problem& p, const Vector& x, const Vector& u,
                       const SlConfig& cfg) {
  return std::exp(-cfg.dt * cfg.mu * p.running_cost(x, u));
}

/// Batched evaluation of H~(x, V~, u) = 1 + gamma (V~(x') - 1).
struct SlEvaluation {
  Matrix successors;         // x' per column
  Vector discounts;          // gamma per sample
  Vector successor_values;   // V~(x')
  Vector values;             // H~
  Matrix control_gradients;  // dH~/du per column (only when requested)
};

inline SlEvaluation sl_operator_batch(const ocp::Problem& p, const Critic& critic,
                                      const Matrix& states, const Matrix& controls,
                                      const SlConfig& cfg, bool with_gradient = false) {
  require_size(states.rows(), p.state_dim(), "state batch rows");
  require_size(controls.rows(), p.control_dim(), "control batch rows");
  require_size(controls.cols(), states.cols(), "control batch columns");
  const Index n = states.cols();
  SlEvaluation ev;
  ev.successors.resize(p.state_dim(), n);
  ev.discounts.resize(n);
  for (Index j = 0; j < n; ++j) {
    const Vector x = states.col(j);
    const Vector u = controls.col(j);
    ev.successors.col(j) = euler_step(p, x, u, cfg.dt);
    ev.discounts[j] = discount(p, x, u, cfg);
  }
  Matrix grad_next;
  critic.evaluate(ev.successors, &ev.successor_values, with_gradient ? &grad_next : nullptr);
  ev.values = (ev.discounts.array() * (ev.successor_values.array() - 1.0) + 1.0).matrix();
  if (with_gradient) {
    ev.control_gradients.resize(p.control_dim(), n);
    for (Index j = 0; j < n; ++j) {
      const Vector x = states.col(j);
      const Vector u = controls.col(j);
      const double g = ev.discounts[j];
      const double gap = ev.successor_values[j] - 1.0;
      ev.control_gradients.col(j) =
          -cfg.dt * cfg.mu * g * gap * p.running_cost_control_gradient(x, u) +
          g * cfg.dt * p.dynamics_control_jacobian(x, u).transpose() * grad_next.col(j);
    }
  }
  return ev;
}

inline double sl_operator(const ocp::Problem& p, const Critic& critic, const Vector& x,
                          const Vector& u, const SlConfig& cfg) {
  return sl_operator_batch(p, critic, x, u, cfg).values[0];
}

/// dH~/du = -dt mu gamma (V~(x') - 1) grad_u l + gamma dt (df/du)^T grad V~(x').
inline Vector sl_operator_control_gradient(const ocp::Problem& p, const Critic& critic,
                                           const Vector& x, const Vector& u, const SlConfig& cfg) {
  return sl_operator_batch(p, critic, x, u, cfg, true).control_gradients.col(0);
}

/// r_i = V~(x_i) - H~(x_i, V~, policy(x_i)).
inline Vector bellman_residual(const ocp::Problem& p, const Critic& critic,
                               const BatchPolicy& policy, const Matrix& states,
                               const SlConfig& cfg) {
  if (states.cols() == 0) throw DimensionError("bellman_residual: empty batch");
  const Matrix controls = policy(states);
  const SlEvaluation ev = sl_operator_batch(p, critic, states, controls, cfg);
  return critic.values(states) - ev.values;
}

struct ResidualStats {
  double mean_abs = 0.0;
  double max_abs = 0.0;
  double rms = 0.0;
};

inline ResidualStats summarize_residuals(const Vector& r) {
  if (r.size() == 0) return {};
  return {r.cwiseAbs().mean(), r.cwiseAbs().maxCoeff(),
          std::sqrt(r.squaredNorm() / static_cast<double>(r.size()))};
}

}  // namespace slac::sl

#endif  // SLAC_SL_BELLMAN_HPP
