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

#ifndef SLAC_SL_KRUZKOV_HPP
#define SLAC_SL_KRUZKOV_HPP

#include <cmath>
#include <limits>

#include "slac/core/types.hpp"

namespace slac::sl {

/// 1 - exp(-v), with +inf mapped to 1. Strictly increasing on [0, inf).
inline double kruzkov(double v) {
  if (std::isnan(v) || v < 0.0) throw DomainError("kruzkov: value must be nonnegative");
  if (std::isinf(v)) return 1.0;
  return -std::expm1(-v);
}

/// -ln(1 - w) on [0, 1); w >= 1 yields +inf (the saturated "never reaches" value).
inline double kruzkov_inverse(double w) {
  if (std::isnan(w) || w < 0.0) throw DomainError("kruzkov_inverse: argument must be >= 0");
  if (w >= 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-w);
}

// The critic network emits a raw score s. Its untransformed (rescaled) value
// is the softplus p(s) = ln(1 + e^s) >= 0, so the transformed value is
// 1 - e^{-p(s)} = sigmoid(s) in (0, 1).

inline double softplus(double s) { return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s)); }

inline double sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

inline double critic_transformed_value(double raw) { return sigmoid(raw); }

/// d/ds sigmoid(s).
inline double critic_transformed_slope(double raw) {
  const double v = sigmoid(raw);
  return v * (1.0 - v);
}

/// Cost in original units: softplus(s) undoes the transform, 1/mu undoes the rescale.
inline double critic_untransformed_value(double raw, double mu) { return softplus(raw) / mu; }

}  // namespace slac::sl

#endif  // SLAC_SL_KRUZKOV_HPP
