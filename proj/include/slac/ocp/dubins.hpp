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

#ifndef SLAC_OCP_DUBINS_HPP
#define SLAC_OCP_DUBINS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slac/ocp/problem.hpp"

namespace slac::ocp {

/// Wraps an angle to [-pi, pi).
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = a - two_pi * std::floor((a + std::numbers::pi) / two_pi);
  if (w >= std::numbers::pi) w -= two_pi;
  return w;
}

/// Control-regularized Dubins vehicle.
///
///   x' = cos(theta), y' = sin(theta), theta' = u,  |u| <= 6,
///   l = 1 + u^2 / 2,  target x^2 + y^2 <= 0.1^2.
///
/// Omega is the annulus target_radius < r <= domain_radius in (x, y) times
/// the full heading circle. Network features are (x, y, cos theta, sin theta)
/// unless periodic_embedding is off, in which case theta is fed raw.
class Dubins final : public Problem {
 public:
  struct Params {
    double target_radius = 0.1;
    double domain_radius = 4.0;
    double control_bound = 6.0;
    bool periodic_embedding = true;
  };

  Dubins() : Dubins(Params{}) {}
  explicit Dubins(Params params)
      : Problem(Vector::Constant(1, -params.control_bound), Vector::Constant(1, params.control_bound)),
        params_(params) {
    if (!(params_.target_radius > 0.0)) throw ConfigError("problem.target_radius must be positive");
    if (!(params_.domain_radius > params_.target_radius)) {
      throw ConfigError("problem.domain_radius must exceed problem.target_radius");
    }
  }

  const Params& params() const { return params_; }

  std::string name() const override { return "dubins"; }
  Index state_dim() const override { return 3; }
  double cost_upper_bound() const override {
    return 1.0 + 0.5 * params_.control_bound * params_.control_bound;
  }

  Vector dynamics(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Vector{{std::cos(x[2]), std::sin(x[2]), u[0]}};
  }

  double running_cost(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return 1.0 + 0.5 * u[0] * u[0];
  }

  Matrix dynamics_control_jacobian(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Matrix{{0.0}, {0.0}, {1.0}};
  }

  Vector running_cost_control_gradient(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Vector::Constant(1, u[0]);
  }

  bool in_target(const Vector& x) const override {
    check_state(x);
    return x[0] * x[0] + x[1] * x[1] <= params_.target_radius * params_.target_radius;
  }

  bool target_intersects_box(const Vector& lower, const Vector& upper) const override {
    const double cx = std::clamp(0.0, lower[0], upper[0]);
    const double cy = std::clamp(0.0, lower[1], upper[1]);
    return cx * cx + cy * cy <= params_.target_radius * params_.target_radius;
  }

  Matrix sample_domain(Rng& rng, Index n) const override {
    Matrix out(3, n);
    std::uniform_real_distribution<double> r2(params_.target_radius * params_.target_radius,
                                               params_.domain_radius * params_.domain_radius);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (Index j = 0; j < n;) {
      const double r = std::sqrt(r2(rng));
      const double a = angle(rng);
      const Vector x{{r * std::cos(a), r * std::sin(a), angle(rng)}};
      if (in_target(x)) continue;
      out.col(j++) = x;
    }
    return out;
  }

  Matrix sample_target(Rng& rng, Index n) const override {
    Matrix out(3, n);
    std::uniform_real_distribution<double> r2(0.0, params_.target_radius * params_.target_radius);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (Index j = 0; j < n; ++j) {
      const double r = std::sqrt(r2(rng));
      const double a = angle(rng);
      out.col(j) = Vector{{r * std::cos(a), r * std::sin(a), angle(rng)}};
    }
    return out;
  }

  Matrix sample_annulus(Rng& rng, Index n, double inner, double outer) const override {
    Matrix out(3, n);
    std::uniform_real_distribution<double> r2(inner * inner, outer * outer);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (Index j = 0; j < n; ++j) {
      const double r = std::sqrt(r2(rng));
      const double a = angle(rng);
      out.col(j) = Vector{{r * std::cos(a), r * std::sin(a), angle(rng)}};
    }
    return out;
  }

  void project_state(Vector& x) const override { x[2] = wrap_angle(x[2]); }

  Index feature_dim() const override { return params_.periodic_embedding ? 4 : 3; }

  Vector features(const Vector& x) const override {
    check_state(x);
    if (!params_.periodic_embedding) return x;
    return Vector{{x[0], x[1], std::cos(x[2]), std::sin(x[2])}};
  }

  Vector feature_pullback(const Vector& x, const Vector& d) const override {
    if (!params_.periodic_embedding) return d;
    return Vector{{d[0], d[1], -std::sin(x[2]) * d[2] + std::cos(x[2]) * d[3]}};
  }

  double domain_radius() const override { return params_.domain_radius; }
  double exit_measure(const Vector& x) const override { return std::hypot(x[0], x[1]); }

 private:
  Params params_;
};

}  // namespace slac::ocp

#endif  // SLAC_OCP_DUBINS_HPP
