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

#ifndef SLAC_NN_ACTIVATION_HPP
#define SLAC_NN_ACTIVATION_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "slac/core/types.hpp"

namespace slac::nn {

enum class Activation : std::uint8_t { Tanh = 0, ReLU = 1, Identity = 2 };

inline std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::Tanh:
      return "tanh";
    case Activation::ReLU:
      return "relu";
    case Activation::Identity:
      return "identity";
  }
  return "unknown";
}

inline Activation activation_from_string(std::string_view name) {
  if (name == "tanh") return Activation::Tanh;
  if (name == "relu") return Activation::ReLU;
  if (name == "identity" || name == "linear") return Activation::Identity;
  throw TopologyError("unknown activation '" + std::string(name) + "'");
}

/// Applies the activation elementwise in place.
inline void activate(Activation a, Matrix& z) {
  switch (a) {
    case Activation::Tanh:
      z = z.array().tanh();
      break;
    case Activation::ReLU:
      z = z.cwiseMax(0.0);
      break;
    case Activation::Identity:
      break;
  }
}

/// Multiplies `grad` in place by the activation derivative, expressed through
/// the activated output (tanh' = 1 - out^2, relu' = [out > 0]).
inline void scale_by_derivative(Activation a, const Matrix& activated, Matrix& grad) {
  switch (a) {
    case Activation::Tanh:
      grad.array() *= 1.0 - activated.array().square();
      break;
    case Activation::ReLU:
      grad.array() *= (activated.array() > 0.0).cast<double>();
      break;
    case Activation::Identity:
      break;
  }
}

}  // namespace slac::nn

#endif  // SLAC_NN_ACTIVATION_HPP
