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

#ifndef SLAC_OCP_DOUBLE_INTEGRATOR_HPP
#define SLAC_OCP_DOUBLE_INTEGRATOR_HPP

#include <cmath>
#include <numbers>

#include "slac/ocp/problem.hpp"

namespace slac::ocp {

/// Minimum-time double integrator: x' = y, y' = u, |u| <= 1, target the origin.
class DoubleIntegrator final : public Problem {
 public:
  struct Params {
    double domain_radius = 5.0;
    // Rollouts stop once ||x|| <= target_tolerance; the exact target is a point.
    double target_tolerance = 0.01;
    double control_bound = 1.0;
  };

  DoubleIntegrator() : DoubleIntegrator(Params{}) {}
  explicit DoubleIntegrator(Params params)
      : Problem(Vector::Constant(1, -params.control_bound), Vector::Constant(1, params.control_bound)),
        params_(params) {
    if (!(params_.domain_radius > params_.target_tolerance)) {
      throw ConfigError("problem.domain_radius must exceed problem.target_tolerance");
    }
    if (!(params_.target_tolerance >= 0.0)) throw ConfigError("problem.target_tolerance must be >= 0");
  }

  const Params& params() const { return params_; }

  std::string name() const override { return "double_integrator"; }
  Index state_dim() const override { return 2; }
  double cost_upper_bound() const override { return 1.0; }

  Vector dynamics(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Vector{{x[1], u[0]}};
  }

  double running_cost(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return 1.0;
  }

  Matrix dynamics_control_jacobian(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Matrix{{0.0}, {1.0}};
  }

  Vector running_cost_control_gradient(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Vector::Zero(1);
  }

  bool in_target(const Vector& x) const override {
    check_state(x);
    return x.norm() <= params_.target_tolerance;
  }

  bool target_intersects_box(const Vector& lower, const Vector& upper) const override {
    return (lower.array() <= 0.0).all() && (upper.array() >= 0.0).all();
  }

  Matrix sample_domain(Rng& rng, Index n) const override {
    std::uniform_real_distribution<double> coord(-params_.domain_radius, params_.domain_radius);
    Matrix out(2, n);
    for (Index j = 0; j < n;) {
      const Vector x{{coord(rng), coord(rng)}};
      const double r = x.norm();
      if (r > params_.domain_radius || in_target(x)) continue;
      out.col(j++) = x;
    }
    return out;
  }

  Matrix sample_target(Rng& /*rng*/, Index n) const override { return Matrix::Zero(2, n); }

  double domain_radius() const override { return params_.domain_radius; }
  double exit_measure(const Vector& x) const override { return x.norm(); }

  Matrix sample_annulus(Rng& rng, Index n, double inner, double outer) const override {
    return sample_planar_annulus(rng, n, std::max(inner, params_.target_tolerance), outer);
  }

 private:
  Matrix sample_planar_annulus(Rng& rng, Index n, double inner, double outer) const {
    std::uniform_real_distribution<double> r2(inner * inner, outer * outer);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    Matrix out(2, n);
    for (Index j = 0; j < n; ++j) {
      const double r = std::sqrt(r2(rng));
      const double a = angle(rng);
      out.col(j) = Vector{{r * std::cos(a), r * std::sin(a)}};
    }
    return out;
  }

  Params params_;
};

}  // namespace slac::ocp

#endif  // SLAC_OCP_DOUBLE_INTEGRATOR_HPP
