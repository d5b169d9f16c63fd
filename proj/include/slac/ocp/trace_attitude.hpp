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

#ifndef SLAC_OCP_TRACE_ATTITUDE_HPP
#define SLAC_OCP_TRACE_ATTITUDE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slac/ocp/problem.hpp"

namespace slac::ocp {

/// ZYX (roll, pitch, yaw) Euler angles to a unit quaternion (q0, q1, q2, q3).
inline Eigen::Vector4d euler_to_quaternion(double roll, double pitch, double yaw) {
  const double cr = std::cos(0.5 * roll), sr = std::sin(0.5 * roll);
  const double cp = std::cos(0.5 * pitch), sp = std::sin(0.5 * pitch);
  const double cy = std::cos(0.5 * yaw), sy = std::sin(0.5 * yaw);
  return {cr * cp * cy + sr * sp * sy, sr * cp * cy - cr * sp * sy, cr * sp * cy + sr * cp * sy,
          cr * cp * sy - sr * sp * cy};
}

/// Inverse of euler_to_quaternion; pitch is returned in [-pi/2, pi/2].
inline Eigen::Vector3d quaternion_to_euler(const Eigen::Vector4d& q) {
  const double roll = std::atan2(2.0 * (q[0] * q[1] + q[2] * q[3]),
                                 1.0 - 2.0 * (q[1] * q[1] + q[2] * q[2]));
  const double pitch = std::asin(std::clamp(2.0 * (q[0] * q[2] - q[3] * q[1]), -1.0, 1.0));
  const double yaw = std::atan2(2.0 * (q[0] * q[3] + q[1] * q[2]),
                                1.0 - 2.0 * (q[2] * q[2] + q[3] * q[3]));
  return {roll, pitch, yaw};
}

inline Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w[2], w[1], w[2], 0.0, -w[0], -w[1], w[0], 0.0;
  return m;
}

/// Minimum-time rest-to-rest attitude control of the TRACE spacecraft.
///
/// State (q0, q1, q2, q3, w1, w2, w3), control torque u in [-0.3, 0.3]^3:
///
///   q0' = -1/2 w.q,   q' = 1/2 (-w x q + q0 w),   J w' = -w x (J w) - u.
///
/// The thrust sign follows the published model. Target membership is relaxed
/// to ||q||_inf <= q_tolerance, ||w||_inf <= omega_tolerance, q0 > 0.
class TraceAttitude final : public Problem {
 public:
  struct Params {
    double control_bound = 0.3;
    double omega_sq_min = 1e-4;
    double omega_sq_max = 0.3;
    double euler_max = std::numbers::pi / 2.0;
    double q_tolerance = 0.05;
    double omega_tolerance = 0.05;
    // Half-width of the quaternion-vector perturbation used by sample_target.
    double target_perturbation = 0.02;
  };

  static Eigen::Matrix3d inertia() {
    Eigen::Matrix3d j;
    j << 59.22, -1.14, -0.8, -1.14, 40.56, 0.1, -0.8, 0.1, 57.60;
    return j;
  }

  TraceAttitude() : TraceAttitude(Params{}) {}
  explicit TraceAttitude(Params params)
      : Problem(Vector::Constant(3, -params.control_bound), Vector::Constant(3, params.control_bound)),
        params_(params),
        inertia_(inertia()),
        inertia_inv_(inertia_.inverse()) {
    if (!(params_.omega_sq_min >= 0.0 && params_.omega_sq_max > params_.omega_sq_min)) {
      throw ConfigError("problem.omega_sq_min/omega_sq_max must satisfy 0 <= min < max");
    }
    if (!(params_.q_tolerance > 0.0 && params_.omega_tolerance > 0.0)) {
      throw ConfigError("problem.q_tolerance and problem.omega_tolerance must be positive");
    }
    if (!(params_.target_perturbation >= 0.0 && params_.target_perturbation < params_.q_tolerance)) {
      throw ConfigError("problem.target_perturbation must lie in [0, q_tolerance)");
    }
  }

  const Params& params() const { return params_; }

  std::string name() const override { return "trace"; }
  Index state_dim() const override { return 7; }
  double cost_upper_bound() const override { return 1.0; }

  Vector dynamics(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    const double q0 = x[0];
    const Eigen::Vector3d q = x.segment<3>(1);
    const Eigen::Vector3d w = x.segment<3>(4);
    Vector dx(7);
    dx[0] = -0.5 * w.dot(q);
    dx.segment<3>(1) = 0.5 * (-w.cross(q) + q0 * w);
    dx.segment<3>(4) = inertia_inv_ * (-w.cross(inertia_ * w) - Eigen::Vector3d(u.head<3>()));
    return dx;
  }

  double running_cost(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return 1.0;
  }

  Matrix dynamics_control_jacobian(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    Matrix jac = Matrix::Zero(7, 3);
    jac.bottomRows<3>() = -inertia_inv_;
    return jac;
  }

  Vector running_cost_control_gradient(const Vector& x, const Vector& u) const override {
    check_inputs(x, u);
    return Vector::Zero(3);
  }

  bool in_target(const Vector& x) const override {
    check_state(x);
    return x[0] > 0.0 && x.segment<3>(1).cwiseAbs().maxCoeff() <= params_.q_tolerance &&
           x.segment<3>(4).cwiseAbs().maxCoeff() <= params_.omega_tolerance;
  }

  Matrix sample_domain(Rng& rng, Index n) const override {
    std::uniform_real_distribution<double> euler(-params_.euler_max, params_.euler_max);
    Matrix out(7, n);
    for (Index j = 0; j < n;) {
      const double roll = euler(rng);
      const double pitch = euler(rng);
      const double yaw = euler(rng);
      Vector x(7);
      x.head<4>() = euler_to_quaternion(roll, pitch, yaw);
      x.segment<3>(4) = sample_omega(rng);
      if (in_target(x)) continue;
      out.col(j++) = x;
    }
    return out;
  }

  Matrix sample_target(Rng& rng, Index n) const override {
    std::uniform_real_distribution<double> perturb(-params_.target_perturbation,
                                                   params_.target_perturbation);
    Matrix out = Matrix::Zero(7, n);
    for (Index j = 0; j < n; ++j) {
      Eigen::Vector4d q(1.0, perturb(rng), perturb(rng), perturb(rng));
      out.col(j).head<4>() = q.normalized();
    }
    return out;
  }

  void project_state(Vector& x) const override {
    const double norm = x.head<4>().norm();
    if (norm > 0.0) x.head<4>() /= norm;
  }

  double domain_radius() const override { return std::sqrt(params_.omega_sq_max); }
  double exit_measure(const Vector& x) const override { return x.segment<3>(4).norm(); }

  std::vector<StateGroup> state_groups() const override {
    return {{"q", 1, 3, params_.q_tolerance}, {"omega", 4, 3, params_.omega_tolerance}};
  }

  /// Angular velocity uniform in volume on the shell omega_sq_min <= |w|^2 <= omega_sq_max.
  Eigen::Vector3d sample_omega(Rng& rng) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Vector3d dir;
    do {
      dir = {normal(rng), normal(rng), normal(rng)};
    } while (dir.norm() < 1e-12);
    dir.normalize();
    const double r_min = std::sqrt(params_.omega_sq_min);
    const double r_max = std::sqrt(params_.omega_sq_max);
    std::uniform_real_distribution<double> cube(r_min * r_min * r_min, r_max * r_max * r_max);
    return std::cbrt(cube(rng)) * dir;
  }

 private:
  Params params_;
  Eigen::Matrix3d inertia_;
  Eigen::Matrix3d inertia_inv_;
};

}  // namespace slac::ocp

#endif  // SLAC_OCP_TRACE_ATTITUDE_HPP
