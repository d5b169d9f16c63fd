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

#ifndef SLAC_SL_CRITIC_HPP
#define SLAC_SL_CRITIC_HPP

#include <functional>
#include <utility>

#include "slac/nn/network.hpp"
#include "slac/ocp/problem.hpp"
#include "slac/sl/kruzkov.hpp"

namespace slac::sl {

/// Transformed value function x -> V~(x) in [0, 1] with its state gradient.
class Critic {
 public:
  virtual ~Critic() = default;

  /// Values and (optionally) state gradients for a batch of states.
  virtual void evaluate(const Matrix& states, Vector* values, Matrix* gradients) const = 0;

  Vector values(const Matrix& states) const {
    Vector v;
    evaluate(states, &v, nullptr);
    return v;
  }
  Matrix gradients(const Matrix& states) const {
    Matrix g;
    evaluate(states, nullptr, &g);
    return g;
  }
  double value(const Vector& x) const { return values(x)[0]; }
  Vector gradient(const Vector& x) const { return gradients(x).col(0); }
};

/// Critic backed by a network: V~ = sigmoid(raw output) on embedded features.
class NetworkCritic final : public Critic {
 public:
  NetworkCritic(const nn::Network& net, const ocp::Problem& problem) : net_(net), problem_(problem) {
    require_size(net.input_dim(), problem.feature_dim(), "critic input width");
    require_size(net.output_dim(), 1, "critic output width");
  }

  void evaluate(const Matrix& states, Vector* values, Matrix* gradients) const override {
    const Matrix feats = problem_.features_batch(states);
    nn::ForwardCache cache;
    const Matrix raw = net_.forward_batch(feats, gradients ? &cache : nullptr);
    if (values) {
      values->resize(raw.cols());
      for (Index j = 0; j < raw.cols(); ++j) (*values)[j] = critic_transformed_value(raw(0, j));
    }
    if (gradients) {
      Matrix upstream(1, raw.cols());
      for (Index j = 0; j < raw.cols(); ++j) upstream(0, j) = critic_transformed_slope(raw(0, j));
      Matrix d_feat;
      net_.backward(cache, upstream, nullptr, &d_feat);
      gradients->resize(states.rows(), states.cols());
      for (Index j = 0; j < states.cols(); ++j) {
        gradients->col(j) = problem_.feature_pullback(states.col(j), d_feat.col(j));
      }
    }
  }

  /// Raw network scores (before the output transform).
  Vector raw(const Matrix& states) const {
    return net_.forward_batch(problem_.features_batch(states)).row(0).transpose();
  }

 private:
  const nn::Network& net_;
  const ocp::Problem& problem_;
};

/// Critic from plain callables (analytic references, test fixtures).
class FunctionCritic final : public Critic {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;

  explicit FunctionCritic(ValueFn value, GradientFn gradient = {})
      : value_(std::move(value)), gradient_(std::move(gradient)) {}

  static FunctionCritic constant(double c, Index state_dim) {
    return FunctionCritic([c](const Vector&) { return c; },
                          [state_dim](const Vector&) { return Vector::Zero(state_dim); });
  }

  void evaluate(const Matrix& states, Vector* values, Matrix* gradients) const override {
    if (values) {
      values->resize(states.cols());
      for (Index j = 0; j < states.cols(); ++j) (*values)[j] = value_(states.col(j));
    }
    if (gradients) {
      if (!gradient_) throw Error("FunctionCritic: no gradient callable supplied");
      gradients->resize(states.rows(), states.cols());
      for (Index j = 0; j < states.cols(); ++j) gradients->col(j) = gradient_(states.col(j));
    }
  }

 private:
  ValueFn value_;
  GradientFn gradient_;
};

/// Batched feedback law: states (columns) -> controls (columns).
using BatchPolicy = std::function<Matrix(const Matrix&)>;

/// Actor network on embedded features. Holds references: keep both alive.
inline BatchPolicy network_policy(const nn::Network& actor, const ocp::Problem& problem) {
  return [&actor, &problem](const Matrix& states) {
    return actor.forward_batch(problem.features_batch(states));
  };
}

inline BatchPolicy pointwise_policy(std::function<Vector(const Vector&)> law, Index control_dim) {
  return [law = std::move(law), control_dim](const Matrix& states) {
    Matrix out(control_dim, states.cols());
    for (Index j = 0; j < states.cols(); ++j) out.col(j) = law(states.col(j));
    return out;
  };
}

}  // namespace slac::sl

#endif  // SLAC_SL_CRITIC_HPP
