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

#ifndef SLAC_OCP_PROBLEM_HPP
#define SLAC_OCP_PROBLEM_HPP

#include <string>
#include <vector>

#include "slac/core/types.hpp"

namespace slac::ocp {

/// Named contiguous block of state components, used for per-block
/// steady-state reporting in rollouts.
struct StateGroup {
  std::string name;
  Index begin = 0;
  Index size = 0;
  double settle_tolerance = 0.0;
};

/// Free-terminal-time, fixed-target optimal control problem
///
///     V(x0) = min_{u, tf} int_0^tf l(x, u) dt,   x' = f(x, u),   x(tf) in T
///
/// with a box control set and a bounded computational domain Omega outside T.
/// Implementations are immutable after construction and safe to share across
/// threads; every sampler takes its random stream explicitly.
class Problem {
 public:
  Problem(Vector control_lower, Vector control_upper)
      : control_lower_(std::move(control_lower)), control_upper_(std::move(control_upper)) {
    if (control_lower_.size() != control_upper_.size() || control_lower_.size() == 0) {
      throw DimensionError("control bounds must be nonempty and of equal size");
    }
    if ((control_upper_.array() < control_lower_.array()).any()) {
      throw DomainError("control bounds need lower <= upper");
    }
  }
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual Index state_dim() const = 0;
  Index control_dim() const { return control_lower_.size(); }
  const Vector& control_lower() const { return control_lower_; }
  const Vector& control_upper() const { return control_upper_; }

  /// Upper bound M of the running cost on Omega (metadata).
  virtual double cost_upper_bound() const = 0;

  virtual Vector dynamics(const Vector& x, const Vector& u) const = 0;
  virtual double running_cost(const Vector& x, const Vector& u) const = 0;
  /// d f / d u, state_dim x control_dim.
  virtual Matrix dynamics_control_jacobian(const Vector& x, const Vector& u) const = 0;
  virtual Vector running_cost_control_gradient(const Vector& x, const Vector& u) const = 0;

  virtual bool in_target(const Vector& x) const = 0;

  /// Whether the axis-aligned box [lower, upper] meets the target set.
  virtual bool target_intersects_box(const Vector& lower, const Vector& upper) const {
    return in_target(0.5 * (lower + upper));
  }

  virtual Matrix sample_domain(Rng& rng, Index n) const = 0;
  virtual Matrix sample_target(Rng& rng, Index n) const = 0;

  /// Maps a state back onto its manifold (angle wrapping, unit quaternion).
  virtual void project_state(Vector& /*x*/) const {}

  /// Network input embedding of a state and its pullback.
  virtual Index feature_dim() const { return state_dim(); }
  virtual Vector features(const Vector& x) const { return x; }
  virtual Vector feature_pullback(const Vector& /*x*/, const Vector& d_features) const {
    return d_features;
  }

  /// Size of the computational domain, compared against exit_measure for
  /// rollout domain-exit detection.
  virtual double domain_radius() const = 0;
  virtual double exit_measure(const Vector& x) const = 0;

  /// Samples initial states with exit_measure in [inner, outer] (rollouts).
  virtual Matrix sample_annulus(Rng& /*rng*/, Index /*n*/, double /*inner*/,
                                double /*outer*/) const {
    throw ConfigError(name() + ": annulus sampling is not supported");
  }

  virtual std::vector<StateGroup> state_groups() const { return {}; }

  void check_state(const Vector& x) const { require_size(x.size(), state_dim(), "state"); }
  void check_control(const Vector& u) const { require_size(u.size(), control_dim(), "control"); }

  void check_inputs(const Vector& x, const Vector& u) const {
    check_state(x);
    check_control(u);
    if (!x.allFinite() || !u.allFinite()) {
      throw NumericalError(name() + ": non-finite state " + format_vector(x) + " or control " +
                           format_vector(u));
    }
  }

  Matrix features_batch(const Matrix& x) const {
    Matrix out(feature_dim(), x.cols());
    for (Index j = 0; j < x.cols(); ++j) out.col(j) = features(x.col(j));
    return out;
  }

  Vector clamp_control(const Vector& u) const {
    return u.cwiseMax(control_lower_).cwiseMin(control_upper_);
  }

  bool control_in_box(const Vector& u, double tol = 1e-12) const {
    return ((u.array() >= control_lower_.array() - tol) &&
            (u.array() <= control_upper_.array() + tol))
        .all();
  }

 private:
  Vector control_lower_;
  Vector control_upper_;
};

}  // namespace slac::ocp

#endif  // SLAC_OCP_PROBLEM_HPP
