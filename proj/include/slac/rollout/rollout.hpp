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

#ifndef SLAC_ROLLOUT_ROLLOUT_HPP
#define SLAC_ROLLOUT_ROLLOUT_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "slac/core/parallel.hpp"
#include "slac/core/raster.hpp"
#include "slac/ocp/problem.hpp"
#include "slac/sl/bellman.hpp"
#include "slac/sl/critic.hpp"

namespace slac::rollout {

enum class ExitReason { TargetReached, MaxTimeExceeded, DomainExited, NumericalFailure };

inline std::string_view to_string(ExitReason r) {
  switch (r) {
    case ExitReason::TargetReached:
      return "target_reached";
    case ExitReason::MaxTimeExceeded:
      return "max_time_exceeded";
    case ExitReason::DomainExited:
      return "domain_exited";
    case ExitReason::NumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

/// Closed-loop trajectory. controls[k] is held on [times[k], times[k+1]).
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<Vector> controls;
  std::vector<double> cumulative_cost;  // one entry per state, starting at 0
  double accumulated_cost = 0.0;
  bool reached_target = false;
  ExitReason exit_reason = ExitReason::MaxTimeExceeded;
  std::string diagnostic;
};

struct SimulateOptions {
  double dt = 0.05;
  double t_max = 20.0;
  // DomainExited once exit_measure exceeds exit_margin * domain_radius.
  double exit_margin = 2.0;
  // When false the run continues through the target (steady-state studies);
  // reached_target still records whether the target was ever entered.
  bool stop_at_target = true;

  void validate() const {
    if (!(dt > 0.0)) throw ConfigError("rollout.dt must be positive");
    if (!(t_max >= 10.0 * dt)) throw ConfigError("rollout.t_max must cover at least 10 steps");
    if (!(exit_margin > 0.0)) throw ConfigError("rollout.exit_margin must be positive");
  }
};

/// Euler integration with zero-order-hold feedback; cost is sum dt * l(x_k, u_k)
/// in original (unscaled) units. Dynamical outcomes are reported through
/// exit_reason, never thrown.
inline Trajectory simulate(const ocp::Problem& p, const sl::BatchPolicy& policy, const Vector& x0,
                           const SimulateOptions& opt) {
  opt.validate();
  p.check_state(x0);
  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);
  traj.cumulative_cost.push_back(0.0);
  if (p.in_target(x0)) {
    traj.reached_target = true;
    traj.exit_reason = ExitReason::TargetReached;
    if (opt.stop_at_target) return traj;
  }
  const auto max_steps = static_cast<Index>(std::llround(opt.t_max / opt.dt));
  Vector x = x0;
  for (Index k = 0; k < max_steps; ++k) {
    Vector u;
    try {
      u = policy(x).col(0);
    } catch (const NumericalError& e) {
      traj.exit_reason = ExitReason::NumericalFailure;
      traj.diagnostic = e.what();
      return traj;
    }
    if (!u.allFinite() || !p.control_in_box(u, 1e-9)) {
      traj.exit_reason = ExitReason::NumericalFailure;
      traj.diagnostic = "policy returned control " + format_vector(u) + " outside the control box";
      return traj;
    }
    const double step_cost = opt.dt * p.running_cost(x, u);
    Vector next = x + opt.dt * p.dynamics(x, u);
    p.project_state(next);
    traj.controls.push_back(u);
    if (!next.allFinite()) {
      traj.exit_reason = ExitReason::NumericalFailure;
      traj.diagnostic = "non-finite state after " + format_vector(x);
      return traj;
    }
    x = std::move(next);
    traj.accumulated_cost += step_cost;
    traj.times.push_back(static_cast<double>(k + 1) * opt.dt);
    traj.states.push_back(x);
    traj.cumulative_cost.push_back(traj.accumulated_cost);
    if (p.in_target(x)) {
      if (!traj.reached_target) traj.exit_reason = ExitReason::TargetReached;
      traj.reached_target = true;
      if (opt.stop_at_target) return traj;
    }
    if (p.exit_measure(x) > opt.exit_margin * p.domain_radius()) {
      traj.exit_reason = ExitReason::DomainExited;
      return traj;
    }
  }
  if (!traj.reached_target) traj.exit_reason = ExitReason::MaxTimeExceeded;
  return traj;
}

/// Sup-norm of a state group over the trailing fraction of a trajectory.
inline double trailing_sup_norm(const Trajectory& t, const ocp::StateGroup& g, double fraction) {
  const auto n = static_cast<Index>(t.states.size());
  const Index window = std::max<Index>(1, static_cast<Index>(std::ceil(fraction * static_cast<double>(n))));
  double sup = 0.0;
  for (Index k = n - window; k < n; ++k) {
    sup = std::max(sup, t.states[static_cast<std::size_t>(k)].segment(g.begin, g.size).cwiseAbs().maxCoeff());
  }
  return sup;
}

struct GroupSummary {
  std::string name;
  double tolerance = 0.0;
  std::vector<double> trailing_sup;  // per trajectory
  double settled_fraction = 0.0;     // trailing_sup <= tolerance
  double max_trailing_sup = 0.0;
};

struct EnsembleSummary {
  Index count = 0;
  Index successes = 0;
  double success_fraction = 0.0;
  double cost_mean = 0.0;  // over successful trajectories
  double cost_max = 0.0;
  std::vector<GroupSummary> groups;
  double settled_fraction = 0.0;  // all groups settled simultaneously
  bool controls_in_bounds = true;
};

struct EnsembleResult {
  std::vector<Trajectory> trajectories;
  EnsembleSummary summary;
};

inline constexpr double kTrailingFraction = 0.1;

/// Independent simulations from each column of `initial_states`.
inline EnsembleResult ensemble(const ocp::Problem& p, const sl::BatchPolicy& policy,
                               const Matrix& initial_states, const SimulateOptions& opt,
                               int workers = 1) {
  opt.validate();
  EnsembleResult result;
  const Index n = initial_states.cols();
  result.trajectories.resize(static_cast<std::size_t>(n));
  parallel_for(n, workers, [&](Index begin, Index end) {
    for (Index i = begin; i < end; ++i) {
      result.trajectories[static_cast<std::size_t>(i)] =
          simulate(p, policy, initial_states.col(i), opt);
    }
  });
  EnsembleSummary& s = result.summary;
  s.count = n;
  for (const auto& t : result.trajectories) {
    for (const auto& u : t.controls) s.controls_in_bounds &= p.control_in_box(u, 1e-9);
    if (!t.reached_target) continue;
    ++s.successes;
    s.cost_mean += t.accumulated_cost;
    s.cost_max = std::max(s.cost_max, t.accumulated_cost);
  }
  if (s.successes > 0) s.cost_mean /= static_cast<double>(s.successes);
  s.success_fraction = n > 0 ? static_cast<double>(s.successes) / static_cast<double>(n) : 0.0;
  std::vector<bool> all_settled(static_cast<std::size_t>(n), true);
  for (const auto& g : p.state_groups()) {
    GroupSummary gs;
    gs.name = g.name;
    gs.tolerance = g.settle_tolerance;
    Index settled = 0;
    for (Index i = 0; i < n; ++i) {
      const double sup = trailing_sup_norm(result.trajectories[static_cast<std::size_t>(i)], g,
                                           kTrailingFraction);
      gs.trailing_sup.push_back(sup);
      gs.max_trailing_sup = std::max(gs.max_trailing_sup, sup);
      if (sup <= g.settle_tolerance) {
        ++settled;
      } else {
        all_settled[static_cast<std::size_t>(i)] = false;
      }
    }
    gs.settled_fraction = n > 0 ? static_cast<double>(settled) / static_cast<double>(n) : 0.0;
    s.groups.push_back(std::move(gs));
  }
  if (!s.groups.empty() && n > 0) {
    s.settled_fraction =
        static_cast<double>(std::count(all_settled.begin(), all_settled.end(), true)) /
        static_cast<double>(n);
  }
  return result;
}

/// Control field of a policy over a 2D slice; one channel per control dimension.
inline Raster switching_surface_raster(const sl::BatchPolicy& policy, Index control_dim,
                                       const Vector& base, Index dim_x, Index dim_y, double x_lower,
                                       double x_upper, double y_lower, double y_upper, Index nx,
                                       Index ny, const std::vector<std::string>& axis_names = {}) {
  if (dim_x == dim_y || dim_x < 0 || dim_y < 0 || dim_x >= base.size() || dim_y >= base.size()) {
    throw DomainError("raster needs two distinct free dimensions within the state");
  }
  if (nx < 1 || ny < 1) throw DomainError("raster resolution must be positive");
  Raster r;
  auto name = [&](Index d) {
    return static_cast<std::size_t>(d) < axis_names.size() ? axis_names[static_cast<std::size_t>(d)]
                                                           : "x" + std::to_string(d);
  };
  r.x_axis = {name(dim_x), dim_x, x_lower, x_upper, nx};
  r.y_axis = {name(dim_y), dim_y, y_lower, y_upper, ny};
  r.base_state = base;
  Matrix states(base.size(), nx * ny);
  for (Index i = 0; i < nx; ++i) {
    for (Index j = 0; j < ny; ++j) states.col(i * ny + j) = r.state_at(i, j);
  }
  const Matrix controls = policy(states);
  for (Index c = 0; c < control_dim; ++c) {
    r.channels.push_back(control_dim == 1 ? "u" : "u" + std::to_string(c));
    Matrix m(nx, ny);
    for (Index i = 0; i < nx; ++i) {
      for (Index j = 0; j < ny; ++j) m(i, j) = controls(c, i * ny + j);
    }
    r.data.push_back(std::move(m));
  }
  return r;
}

}  // namespace slac::rollout

#endif  // SLAC_ROLLOUT_ROLLOUT_HPP
