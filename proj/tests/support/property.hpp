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

#ifndef SLAC_TESTS_SUPPORT_PROPERTY_HPP
#define SLAC_TESTS_SUPPORT_PROPERTY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "slac/core/types.hpp"
#include "slac/nn/network.hpp"

namespace slac::testing {

/// Seeded generator handle passed to property bodies.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

  Vector uniform_vector(Index n, double lo, double hi) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  Vector uniform_vector(const Vector& lo, const Vector& hi) {
    Vector v(lo.size());
    for (Index i = 0; i < lo.size(); ++i) v[i] = uniform(lo[i], hi[i]);
    return v;
  }

  Vector normal_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  Vector unit_vector(Index n) {
    Vector v = normal_vector(n);
    return v / v.norm();
  }

  Rng& rng() { return rng_; }

 private:
  Rng rng_;
};

/// Runs `body(gen, case_index)` for `cases` independent seeds derived from
/// `seed`; the body reports failures through gtest assertions.
inline void for_all(int cases, std::uint64_t seed, const std::function<void(Gen&, int)>& body) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::vector<std::uint32_t> seeds(static_cast<std::size_t>(cases));
  seq.generate(seeds.begin(), seeds.end());
  for (int i = 0; i < cases; ++i) {
    Gen g(seeds[static_cast<std::size_t>(i)]);
    body(g, i);
  }
}

/// |a - b| / max(|a|, |b|), with 0 when both vanish.
inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Central difference of `f` along `dir` with step h.
inline double directional_fd(const std::function<double(const Vector&)>& f, const Vector& x,
                             const Vector& dir, double h) {
  return (f(x + h * dir) - f(x - h * dir)) / (2.0 * h);
}

/// Random network with weights scaled so activations are not saturated.
inline nn::Network random_network(const std::vector<nn::LayerSpec>& layers, std::uint64_t seed,
                                  std::optional<nn::OutputBounds> bounds = std::nullopt) {
  nn::Network net = nn::Network::initialized(layers, seed, std::move(bounds));
  Gen g(seed ^ 0x9E3779B97F4A7C15ull);
  Vector w = net.weights();
  // Nonzero biases exercise the bias gradient.
  Index off = 0;
  for (const auto& l : layers) {
    off += l.in_width * l.out_width;
    for (Index i = 0; i < l.out_width; ++i) w[off + i] = 0.1 * g.normal();
    off += l.out_width;
  }
  net.set_weights(w);
  return net;
}

}  // namespace slac::testing

#endif  // SLAC_TESTS_SUPPORT_PROPERTY_HPP
