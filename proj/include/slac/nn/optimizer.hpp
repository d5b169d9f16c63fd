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

#ifndef SLAC_NN_OPTIMIZER_HPP
#define SLAC_NN_OPTIMIZER_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "slac/core/types.hpp"

namespace slac::nn {

enum class OptimizerKind : std::uint8_t { Adam = 0, Adagrad = 1, SGD = 2 };

inline std::string_view to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::Adam:
      return "adam";
    case OptimizerKind::Adagrad:
      return "adagrad";
    case OptimizerKind::SGD:
      return "sgd";
  }
  return "unknown";
}

inline OptimizerKind optimizer_from_string(std::string_view name) {
  if (name == "adam") return OptimizerKind::Adam;
  if (name == "adagrad") return OptimizerKind::Adagrad;
  if (name == "sgd") return OptimizerKind::SGD;
  throw ConfigError("unknown optimizer '" + std::string(name) + "'");
}

struct OptimizerParams {
  OptimizerKind kind = OptimizerKind::Adam;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static OptimizerParams adam(double lr = 1e-3) { return {OptimizerKind::Adam, lr, 0.9, 0.999, 1e-8}; }
  static OptimizerParams adagrad(double lr = 1e-2) {
    return {OptimizerKind::Adagrad, lr, 0.9, 0.999, 1e-10};
  }
  static OptimizerParams sgd(double lr) { return {OptimizerKind::SGD, lr, 0.9, 0.999, 1e-8}; }

  void validate() const {
    if (!(learning_rate > 0.0)) throw ConfigError("optimizer learning_rate must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("optimizer epsilon must be positive");
    if (kind == OptimizerKind::Adam) {
      if (!(beta1 > 0.0 && beta1 < 1.0)) throw ConfigError("optimizer beta1 must lie in (0, 1)");
      if (!(beta2 > 0.0 && beta2 < 1.0)) throw ConfigError("optimizer beta2 must lie in (0, 1)");
    }
  }

  bool operator==(const OptimizerParams&) const = default;
};

/// First-order optimizer with per-weight state.
///
/// Adam keeps first/second moments with bias correction, Adagrad keeps the
/// running sum of squared gradients, SGD keeps nothing.
class Optimizer {
 public:
  Optimizer() = default;
  Optimizer(OptimizerParams params, Index n) : params_(params) {
    params_.validate();
    first_ = Vector::Zero(n);
    second_ = Vector::Zero(n);
  }

  const OptimizerParams& params() const { return params_; }
  std::int64_t step_count() const { return step_count_; }
  const Vector& first_moment() const { return first_; }
  const Vector& second_moment() const { return second_; }

  /// Restores a saved state (checkpoint resume).
  void restore(std::int64_t step_count, Vector first, Vector second) {
    require_size(first.size(), first_.size(), "optimizer first moment");
    require_size(second.size(), second_.size(), "optimizer second moment");
    step_count_ = step_count;
    first_ = std::move(first);
    second_ = std::move(second);
  }

  /// Applies one update to `w`. A gradient with non-finite entries is
  /// rejected and leaves both `w` and the optimizer state untouched.
  void step(Vector& w, const Vector& g) {
    require_size(w.size(), first_.size(), "optimizer weights");
    require_size(g.size(), first_.size(), "optimizer gradient");
    if (!g.allFinite()) {
      Index bad = 0;
      for (Index i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i])) ++bad;
      }
      throw NumericalError("optimizer step rejected: gradient has " + std::to_string(bad) +
                           " non-finite entries");
    }
    ++step_count_;
    const double lr = params_.learning_rate;
    switch (params_.kind) {
      case OptimizerKind::SGD:
        w -= lr * g;
        break;
      case OptimizerKind::Adagrad:
        second_.array() += g.array().square();
        w.array() -= lr * g.array() / (second_.array().sqrt() + params_.epsilon);
        break;
      case OptimizerKind::Adam: {
        const double b1 = params_.beta1;
        const double b2 = params_.beta2;
        first_ = b1 * first_ + (1.0 - b1) * g;
        second_ = b2 * second_ + (1.0 - b2) * g.cwiseProduct(g);
        const double t = static_cast<double>(step_count_);
        const double c1 = 1.0 - std::pow(b1, t);
        const double c2 = 1.0 - std::pow(b2, t);
        w.array() -=
            lr * (first_.array() / c1) / ((second_.array() / c2).sqrt() + params_.epsilon);
        break;
      }
    }
  }

 private:
  OptimizerParams params_;
  std::int64_t step_count_ = 0;
  Vector first_;
  Vector second_;
};

/// Moving average alpha * fresh + (1 - alpha) * avg.
///
/// alpha = 0 means averaging is disabled: the result is `fresh`.
inline Vector polyak_average(const Vector& avg, const Vector& fresh, double alpha) {
  require_size(fresh.size(), avg.size(), "polyak average operands");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("moving-average alpha must lie in [0, 1]");
  if (alpha == 0.0 || alpha == 1.0) return fresh;
  return alpha * fresh + (1.0 - alpha) * avg;
}

}  // namespace slac::nn

#endif  // SLAC_NN_OPTIMIZER_HPP
