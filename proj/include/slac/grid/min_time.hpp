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

#ifndef SLAC_GRID_MIN_TIME_HPP
#define SLAC_GRID_MIN_TIME_HPP

#include <cmath>

#include "slac/core/types.hpp"

namespace slac::grid {

/// s(x, y) = x + y|y|/2; the switching curve of x'' = u, |u| <= 1 is s = 0.
inline double double_integrator_switching(double x, double y) { return x + 0.5 * y * std::abs(y); }

/// Minimum time to steer (x, y) to the origin under x'' = u, |u| <= 1.
inline double double_integrator_min_time(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("min_time: non-finite state");
  const double s = double_integrator_switching(x, y);
  if (s > 0.0) return y + 2.0 * std::sqrt(0.5 * y * y + x);
  if (s < 0.0) return -y + 2.0 * std::sqrt(0.5 * y * y - x);
  return std::abs(y);
}

/// Time-optimal bang-bang feedback -sign(s), with -sign(y) on the curve.
inline double double_integrator_bang_bang(double x, double y) {
  const double s = double_integrator_switching(x, y);
  if (s > 0.0) return -1.0;
  if (s < 0.0) return 1.0;
  if (y > 0.0) return -1.0;
  if (y < 0.0) return 1.0;
  return 0.0;
}

/// Euclidean distance from (x, y) to the switching curve x = -y|y|/2.
inline double double_integrator_curve_distance(double x, double y) {
  // Minimize over the curve parameter t: (x + t|t|/2)^2 + (y - t)^2. The
  // objective is unimodal on each branch near the minimizer; scan then refine.
  auto dist2 = [&](double t) {
    const double cx = -0.5 * t * std::abs(t);
    return (x - cx) * (x - cx) + (y - t) * (y - t);
  };
  const double span = std::abs(y) + std::sqrt(2.0 * std::abs(x)) + 1.0;
  double best_t = 0.0;
  double best = dist2(0.0);
  const int n = 2000;
  for (int i = 0; i <= n; ++i) {
    const double t = -span + 2.0 * span * i / n;
    const double d = dist2(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  double lo = best_t - 2.0 * span / n;
  double hi = best_t + 2.0 * span / n;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist2(m1) < dist2(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::sqrt(std::min(best, dist2(0.5 * (lo + hi))));
}

}  // namespace slac::grid

#endif  // SLAC_GRID_MIN_TIME_HPP
