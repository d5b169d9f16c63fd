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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slac/ocp/registry.hpp"
#include "support/property.hpp"

namespace slac::ocp {
namespace {

using testing::for_all;
using testing::Gen;

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

/// Central-difference Jacobian of f with respect to u.
Matrix fd_jacobian(const Problem& p, const Vector& x, const Vector& u) {
  Matrix j(p.state_dim(), p.control_dim());
  for (Index k = 0; k < p.control_dim(); ++k) {
    const Vector e = Vector::Unit(p.control_dim(), k) * 1e-6;
    j.col(k) = (p.dynamics(x, u + e) - p.dynamics(x, u - e)) / 2e-6;
  }
  return j;
}

TEST(DoubleIntegrator, DynamicsAndCost) {
  const auto p = make_problem("double_integrator");
  EXPECT_EQ(p->dynamics(vec({1, 2}), vec({-1})), vec({2, -1}));
  EXPECT_EQ(p->running_cost(vec({3, 4}), vec({0.5})), 1.0);
  EXPECT_TRUE(p->running_cost_control_gradient(vec({3, 4}), vec({0.5})).isZero());
  EXPECT_EQ(p->control_lower()[0], -1.0);
  EXPECT_EQ(p->control_upper()[0], 1.0);
}

TEST(DoubleIntegrator, TargetIsSmallBall) {
  const auto p = make_problem("double_integrator");
  EXPECT_TRUE(p->in_target(vec({0, 0})));
  EXPECT_TRUE(p->in_target(vec({0.006, 0.006})));
  EXPECT_FALSE(p->in_target(vec({0.01, 0.001})));
  Rng rng(1);
  const Matrix t = p->sample_target(rng, 3);
  EXPECT_TRUE(t.isZero());
}

TEST(DoubleIntegrator, DomainSamplesInsideBallOutsideTarget) {
  const auto p = make_problem("double_integrator");
  Rng rng(4);
  const Matrix s = p->sample_domain(rng, 2000);
  double max_r = 0.0;
  for (Index j = 0; j < s.cols(); ++j) {
    EXPECT_LE(s.col(j).norm(), 5.0);
    EXPECT_FALSE(p->in_target(s.col(j)));
    max_r = std::max(max_r, s.col(j).norm());
  }
  EXPECT_GT(max_r, 4.9);
  // Area-uniform: a quarter of the samples within radius 2.5, up to noise.
  Index inner = 0;
  for (Index j = 0; j < s.cols(); ++j) inner += s.col(j).norm() <= 2.5;
  EXPECT_NEAR(static_cast<double>(inner) / 2000.0, 0.25, 0.03);
}

TEST(Dubins, DynamicsMatchHeadingModel) {
  const auto p = make_problem("dubins");
  const Vector dx = p->dynamics(vec({1, 2, std::numbers::pi / 2}), vec({3}));
  EXPECT_NEAR(dx[0], 0.0, 1e-15);
  EXPECT_NEAR(dx[1], 1.0, 1e-15);
  EXPECT_EQ(dx[2], 3.0);
  EXPECT_DOUBLE_EQ(p->running_cost(vec({1, 0, 0}), vec({2})), 3.0);
  EXPECT_DOUBLE_EQ(p->cost_upper_bound(), 19.0);
  EXPECT_EQ(p->running_cost_control_gradient(vec({1, 0, 0}), vec({2}))[0], 2.0);
}

TEST(Dubins, WrapAngleRange) {
  for_all(500, 5, [](Gen& g, int) {
    const double a = g.uniform(-50, 50);
    const double w = wrap_angle(a);
    EXPECT_GE(w, -std::numbers::pi);
    EXPECT_LT(w, std::numbers::pi);
    EXPECT_NEAR(std::remainder(w - a, 2 * std::numbers::pi), 0.0, 1e-9);
  });
  EXPECT_EQ(wrap_angle(std::numbers::pi), -std::numbers::pi);
}

TEST(Dubins, FeaturesEmbedHeading) {
  const auto p = make_problem("dubins");
  ASSERT_EQ(p->feature_dim(), 4);
  const Vector f = p->features(vec({0.5, -1, std::numbers::pi / 3}));
  EXPECT_NEAR(f[2], 0.5, 1e-15);
  EXPECT_NEAR(f[3], std::sqrt(3.0) / 2, 1e-15);
  // Periodic: theta and theta + 2 pi share features.
  EXPECT_TRUE(p->features(vec({0.5, -1, 0.3})).isApprox(p->features(vec({0.5, -1, 0.3 + 2 * std::numbers::pi}))));
}

TEST(Dubins, FeaturePullbackIsChainRule) {
  const auto p = make_problem("dubins");
  for_all(50, 6, [&](Gen& g, int) {
    const Vector x = g.uniform_vector(vec({-3, -3, -3}), vec({3, 3, 3}));
    const Vector d = g.normal_vector(4);
    const Vector pulled = p->feature_pullback(x, d);
    for (Index k = 0; k < 3; ++k) {
      const Vector e = Vector::Unit(3, k) * 1e-6;
      const double fd = (p->features(x + e) - p->features(x - e)).dot(d) / 2e-6;
      EXPECT_NEAR(pulled[k], fd, 1e-8);
    }
  });
}

TEST(Dubins, SamplesRespectAnnulus) {
  const auto p = make_problem("dubins");
  Rng rng(9);
  const Matrix s = p->sample_domain(rng, 1000);
  for (Index j = 0; j < s.cols(); ++j) {
    const double r = std::hypot(s(0, j), s(1, j));
    EXPECT_GT(r, 0.1);
    EXPECT_LE(r, 4.0);
    EXPECT_GE(s(2, j), -std::numbers::pi);
    EXPECT_LT(s(2, j), std::numbers::pi);
  }
  const Matrix a = p->sample_annulus(rng, 500, 0.5, 2.0);
  for (Index j = 0; j < a.cols(); ++j) {
    const double r = std::hypot(a(0, j), a(1, j));
    EXPECT_GE(r, 0.5);
    EXPECT_LE(r, 2.0);
  }
  const Matrix t = p->sample_target(rng, 200);
  for (Index j = 0; j < t.cols(); ++j) EXPECT_TRUE(p->in_target(t.col(j)));
}

TEST(Trace, InertiaAsPublished) {
  const Eigen::Matrix3d j = TraceAttitude::inertia();
  EXPECT_EQ(j(0, 0), 59.22);
  EXPECT_EQ(j(0, 1), -1.14);
  EXPECT_EQ(j(0, 2), -0.8);
  EXPECT_EQ(j(1, 1), 40.56);
  EXPECT_EQ(j(1, 2), 0.1);
  EXPECT_EQ(j(2, 2), 57.60);
  EXPECT_TRUE(j.isApprox(j.transpose()));
}

TEST(Trace, RestIsEquilibriumWithoutTorque) {
  const auto p = make_problem("trace");
  Vector x = Vector::Zero(7);
  x.head<4>() = euler_to_quaternion(0.3, -0.2, 0.1);
  EXPECT_TRUE(p->dynamics(x, Vector::Zero(3)).isZero(1e-15));
}

TEST(Trace, TorqueDrivesAngularAcceleration) {
  const auto p = make_problem("trace");
  Vector x = Vector::Zero(7);
  x[0] = 1.0;
  const Vector u = vec({0.3, 0, 0});
  const Vector dx = p->dynamics(x, u);
  // J w' = -u at rest.
  const Eigen::Vector3d jw = TraceAttitude::inertia() * Eigen::Vector3d(dx.segment<3>(4));
  EXPECT_NEAR(jw[0], -0.3, 1e-14);
  EXPECT_NEAR(jw[1], 0.0, 1e-14);
  EXPECT_NEAR(jw[2], 0.0, 1e-14);
}

TEST(Trace, QuaternionKinematicsPreserveNormRate) {
  const auto p = make_problem("trace");
  for_all(100, 12, [&](Gen& g, int) {
    Vector x(7);
    x.head<4>() = g.unit_vector(4);
    x.segment<3>(4) = g.uniform_vector(3, -0.5, 0.5);
    const Vector dx = p->dynamics(x, g.uniform_vector(3, -0.3, 0.3));
    // d/dt |q|^2 = 2 q . q' vanishes for the exact kinematics.
    EXPECT_NEAR(x.head<4>().dot(dx.head<4>()), 0.0, 1e-14);
  });
}

TEST(Trace, EulerQuaternionRoundTrip) {
  for_all(200, 13, [](Gen& g, int) {
    const double r = g.uniform(-1.5, 1.5), pi = g.uniform(-1.5, 1.5), y = g.uniform(-1.5, 1.5);
    const Eigen::Vector4d q = euler_to_quaternion(r, pi, y);
    EXPECT_NEAR(q.norm(), 1.0, 1e-14);
    const Eigen::Vector3d e = quaternion_to_euler(q);
    EXPECT_NEAR(e[0], r, 1e-9);
    EXPECT_NEAR(e[1], pi, 1e-9);
    EXPECT_NEAR(e[2], y, 1e-9);
  });
}

TEST(Trace, DomainSamplesOmegaShell) {
  const auto p = make_problem("trace");
  Rng rng(21);
  const Matrix s = p->sample_domain(rng, 3000);
  Index inner = 0;
  for (Index j = 0; j < s.cols(); ++j) {
    EXPECT_NEAR(s.col(j).head<4>().norm(), 1.0, 1e-12);
    const double w2 = s.col(j).segment<3>(4).squaredNorm();
    EXPECT_GE(w2, 1e-4 * (1 - 1e-12));
    EXPECT_LE(w2, 0.3 * (1 + 1e-12));
    inner += w2 <= 0.3 / 4.0;
  }
  // Uniform in volume: P(|w| <= r_max/2) = ((r/2)^3 - r_min^3) / (r^3 - r_min^3) ~ 1/8.
  EXPECT_NEAR(static_cast<double>(inner) / 3000.0, 0.125, 0.02);
}

TEST(Trace, TargetRequiresPositiveScalarPart) {
  const auto p = make_problem("trace");
  Vector x = Vector::Zero(7);
  x[0] = 1.0;
  EXPECT_TRUE(p->in_target(x));
  x[0] = -1.0;
  EXPECT_FALSE(p->in_target(x));
  x[0] = 1.0;
  x[5] = 0.06;
  EXPECT_FALSE(p->in_target(x));
}

TEST(Trace, ProjectionNormalizesQuaternion) {
  const auto p = make_problem("trace");
  Vector x = Vector::Zero(7);
  x.head<4>() << 2.0, 0.0, 0.0, 0.0;
  x[4] = 0.1;
  p->project_state(x);
  EXPECT_DOUBLE_EQ(x[0], 1.0);
  EXPECT_DOUBLE_EQ(x[4], 0.1);
}

TEST(Problems, JacobiansMatchDifferences) {
  for (const std::string name : {"double_integrator", "dubins", "trace"}) {
    const auto p = make_problem(name);
    Rng rng(31);
    const Matrix xs = p->sample_domain(rng, 20);
    for_all(20, 32, [&](Gen& g, int i) {
      const Vector x = xs.col(i);
      const Vector u = g.uniform_vector(p->control_lower(), p->control_upper());
      EXPECT_LT((p->dynamics_control_jacobian(x, u) - fd_jacobian(*p, x, u)).cwiseAbs().maxCoeff(),
                1e-8)
          << name;
      for (Index k = 0; k < p->control_dim(); ++k) {
        const Vector e = Vector::Unit(p->control_dim(), k) * 1e-6;
        const double fd = (p->running_cost(x, u + e) - p->running_cost(x, u - e)) / 2e-6;
        EXPECT_NEAR(p->running_cost_control_gradient(x, u)[k], fd, 1e-8) << name;
      }
    });
  }
}

TEST(Problems, RunningCostAtLeastOne) {
  for (const std::string name : {"double_integrator", "dubins", "trace"}) {
    const auto p = make_problem(name);
    for_all(100, 33, [&](Gen& g, int) {
      Rng rng(static_cast<std::uint64_t>(g.integer(0, 1000000)));
      const Vector x = p->sample_domain(rng, 1).col(0);
      const Vector u = g.uniform_vector(p->control_lower(), p->control_upper());
      const double l = p->running_cost(x, u);
      EXPECT_GE(l, 1.0);
      EXPECT_LE(l, p->cost_upper_bound());
    });
  }
}

TEST(Problems, RejectNonFiniteInputs) {
  const auto p = make_problem("dubins");
  EXPECT_THROW(p->dynamics(vec({std::nan(""), 0, 0}), vec({0})), NumericalError);
  EXPECT_THROW(p->dynamics(vec({0, 0}), vec({0})), DimensionError);
}

TEST(Registry, NamesAndParameterErrors) {
  EXPECT_EQ(make_problem("trace")->state_dim(), 7);
  try {
    make_problem("");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("problem.name"), std::string::npos);
  }
  EXPECT_THROW(make_problem("pendulum"), ConfigError);
  try {
    make_problem("dubins", {{"target_radus", "0.2"}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("problem.target_radus"), std::string::npos);
  }
  EXPECT_THROW(make_problem("dubins", {{"target_radius", "abc"}}), ConfigError);
  EXPECT_EQ(make_problem("double_integrator", {{"domain_radius", "3"}})->domain_radius(), 3.0);
}

TEST(Registry, CustomProblemsTakePrecedence) {
  register_problem("custom_di", [](const ParamMap&) {
    return std::make_shared<DoubleIntegrator>(DoubleIntegrator::Params{});
  });
  EXPECT_EQ(make_problem("custom_di")->name(), "double_integrator");
}

}  // namespace
}  // namespace slac::ocp
