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

#ifndef SLAC_EVAL_METRICS_HPP
#define SLAC_EVAL_METRICS_HPP

#include <cmath>
#include <functional>

#include "slac/grid/grid_value.hpp"
#include "slac/grid/min_time.hpp"
#include "slac/sl/bellman.hpp"
#include "slac/sl/critic.hpp"

namespace slac::eval {

/// Transformed analytic value 1 - exp(-mu T*) of the double integrator.
inline double double_integrator_reference(const Vector& x, double mu = 1.0) {
  return -std::expm1(-mu * grid::double_integrator_min_time(x[0], x[1]));
}

inline sl::FunctionCritic double_integrator_reference_critic(double mu = 1.0) {
  return sl::FunctionCritic(
      [mu](const Vector& x) { return double_integrator_reference(x, mu); },
      [](const Vector& x) -> Vector { return Vector::Zero(x.size()); });
}

/// Mean squared difference of two critics over the columns of `states`.
inline double value_mse(const sl::Critic& a, const sl::Critic& b, const Matrix& states) {
  if (states.cols() == 0) throw DimensionError("value_mse: empty batch");
  return (a.values(states) - b.values(states)).squaredNorm() / static_cast<double>(states.cols());
}

struct SignAgreement {
  Index agree = 0;
  Index total = 0;
  double fraction() const { return total > 0 ? static_cast<double>(agree) / static_cast<double>(total) : 0.0; }
};

/// Compares the sign of a double-integrator policy with the bang-bang law on a
/// square lattice over [-radius, radius]^2, restricted to the ball of that
/// radius and to points farther than `margin` from the switching curve.
inline SignAgreement double_integrator_sign_agreement(const sl::BatchPolicy& policy, double radius,
                                                      Index lattice, double margin) {
  std::vector<Vector> pts;
  for (Index i = 0; i < lattice; ++i) {
    for (Index j = 0; j < lattice; ++j) {
      const double x = -radius + 2.0 * radius * static_cast<double>(i) / static_cast<double>(lattice - 1);
      const double y = -radius + 2.0 * radius * static_cast<double>(j) / static_cast<double>(lattice - 1);
      if (std::hypot(x, y) > radius) continue;
      if (grid::double_integrator_curve_distance(x, y) <= margin) continue;
      pts.push_back((Vector(2) << x, y).finished());
    }
  }
  SignAgreement s;
  if (pts.empty()) return s;
  Matrix states(2, static_cast<Index>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k) states.col(static_cast<Index>(k)) = pts[k];
  const Matrix u = policy(states);
  for (Index k = 0; k < states.cols(); ++k) {
    const double law = grid::double_integrator_bang_bang(states(0, k), states(1, k));
    if (law * u(0, k) > 0.0) ++s.agree;
    ++s.total;
  }
  return s;
}

/// Columns of `states` that lie inside the grid region.
inline Matrix inside_grid(const grid::GridValueFunction& gvf, const Matrix& states) {
  std::vector<Index> keep;
  for (Index k = 0; k < states.cols(); ++k) {
    if (gvf.contains(states.col(k))) keep.push_back(k);
  }
  Matrix out(states.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Index>(k)) = states.col(keep[k]);
  return out;
}

}  // namespace slac::eval

#endif  // SLAC_EVAL_METRICS_HPP
