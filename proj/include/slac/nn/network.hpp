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

#ifndef SLAC_NN_NETWORK_HPP
#define SLAC_NN_NETWORK_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slac/core/types.hpp"
#include "slac/nn/activation.hpp"

namespace slac::nn {

/// One dense layer: out = act(W in + b), plus `in` when residual.
struct LayerSpec {
  Index in_width = 0;
  Index out_width = 0;
  Activation activation = Activation::Identity;
  bool residual = false;

  bool operator==(const LayerSpec&) const = default;
};

/// Per-output box enforced on the final layer by an affine-scaled tanh.
struct OutputBounds {
  Vector lower;
  Vector upper;

  bool operator==(const OutputBounds& other) const {
    return lower.size() == other.lower.size() && upper.size() == other.upper.size() &&
           lower == other.lower && upper == other.upper;
  }
};

inline void validate_topology(std::span<const LayerSpec> layers) {
  if (layers.empty()) throw TopologyError("network needs at least one layer");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    const std::string where = "layer " + std::to_string(i);
    if (l.in_width <= 0 || l.out_width <= 0) throw TopologyError(where + ": widths must be positive");
    if (l.residual && l.in_width != l.out_width) {
      throw TopologyError(where + ": residual block needs in_width == out_width");
    }
    if (i > 0 && layers[i - 1].out_width != l.in_width) {
      throw TopologyError(where + ": in_width " + std::to_string(l.in_width) +
                          " does not match previous out_width " +
                          std::to_string(layers[i - 1].out_width));
    }
  }
}

/// Sum of in*out + out over all layers.
inline Index weight_count(std::span<const LayerSpec> layers) {
  validate_topology(layers);
  Index n = 0;
  for (const auto& l : layers) n += l.in_width * l.out_width + l.out_width;
  return n;
}

struct InitOptions {
  // Multiplies every weight standard deviation; 0 gives an all-zero network.
  double scale = 1.0;
  // Extra factor for residual blocks so they start close to the identity.
  double residual_scale = 0.1;
};

/// Fan-in scaled normal weights (gain sqrt(2) for ReLU, 1 otherwise), zero biases.
inline Vector init_weights(std::span<const LayerSpec> layers, std::uint64_t seed,
                           const InitOptions& options = {}) {
  Vector w = Vector::Zero(weight_count(layers));
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Index offset = 0;
  for (const auto& l : layers) {
    const double gain = l.activation == Activation::ReLU ? std::sqrt(2.0) : 1.0;
    double stddev = options.scale * gain / std::sqrt(static_cast<double>(l.in_width));
    if (l.residual) stddev *= options.residual_scale;
    const Index n_w = l.in_width * l.out_width;
    for (Index i = 0; i < n_w; ++i) w[offset + i] = stddev * normal(rng);
    offset += n_w + l.out_width;
  }
  return w;
}

/// Intermediate values kept by forward_batch for reverse-mode passes.
struct ForwardCache {
  std::vector<Matrix> inputs;     // input to each layer
  std::vector<Matrix> activated;  // act(W in + b), before the residual add
  Matrix final_output;            // last layer output before the bound map
};

/// Dense feedforward network with a flat weight vector.
///
/// Weights are laid out layer by layer: the row-major out x in matrix
/// followed by the out-length bias. Batches are column-major (one sample per
/// column). Evaluation is const and may be shared across threads.
class Network {
 public:
  Network() = default;

  Network(std::vector<LayerSpec> layers, Vector weights,
          std::optional<OutputBounds> bounds = std::nullopt)
      : layers_(std::move(layers)), bounds_(std::move(bounds)) {
    const Index n = weight_count(layers_);
    require_size(weights.size(), n, "network weights");
    if (!weights.allFinite()) throw NumericalError("network weights contain non-finite values");
    weights_ = std::move(weights);
    if (bounds_) {
      require_size(bounds_->lower.size(), output_dim(), "output bounds (lower)");
      require_size(bounds_->upper.size(), output_dim(), "output bounds (upper)");
      if ((bounds_->upper.array() <= bounds_->lower.array()).any()) {
        throw TopologyError("output bounds need lower < upper in every dimension");
      }
    }
    offsets_.reserve(layers_.size());
    Index offset = 0;
    for (const auto& l : layers_) {
      offsets_.push_back(offset);
      offset += l.in_width * l.out_width + l.out_width;
    }
  }

  static Network initialized(std::vector<LayerSpec> layers, std::uint64_t seed,
                             std::optional<OutputBounds> bounds = std::nullopt,
                             const InitOptions& options = {}) {
    Vector w = init_weights(layers, seed, options);
    return Network(std::move(layers), std::move(w), std::move(bounds));
  }

  const std::vector<LayerSpec>& layers() const { return layers_; }
  const Vector& weights() const { return weights_; }
  const std::optional<OutputBounds>& output_bounds() const { return bounds_; }
  Index input_dim() const { return layers_.front().in_width; }
  Index output_dim() const { return layers_.back().out_width; }
  Index size() const { return weights_.size(); }

  void set_weights(const Vector& w) {
    require_size(w.size(), weights_.size(), "network weights");
    weights_ = w;
  }

  Matrix forward_batch(const Matrix& x, ForwardCache* cache = nullptr) const {
    require_size(x.rows(), input_dim(), "network input");
    if (!x.allFinite()) throw NumericalError("network input contains non-finite values");
    if (cache) {
      cache->inputs.resize(layers_.size());
      cache->activated.resize(layers_.size());
    }
    Matrix a = x;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      const auto& l = layers_[i];
      Matrix z = weight_block(i) * a;
      z.colwise() += bias_block(i);
      activate(l.activation, z);
      if (cache) cache->activated[i] = z;
      if (l.residual) z += a;
      if (cache) {
        cache->inputs[i] = std::move(a);
      }
      a = std::move(z);
    }
    if (bounds_) {
      if (cache) cache->final_output = a;
      const Vector mid = 0.5 * (bounds_->upper + bounds_->lower);
      const Vector half = 0.5 * (bounds_->upper - bounds_->lower);
      a = (a.array().tanh().colwise() * half.array()).colwise() + mid.array();
    }
    return a;
  }

  Vector forward(const Vector& x) const { return forward_batch(x); }

  /// Reverse pass through a cached forward evaluation.
  ///
  /// `upstream` holds one output cotangent per column. `weight_grad`
  /// receives the gradient of sum_j <upstream_j, out_j> and `input_grad` the
  /// per-sample input cotangents; either may be null.
  void backward(const ForwardCache& cache, const Matrix& upstream, Vector* weight_grad,
                Matrix* input_grad) const {
    require_size(upstream.rows(), output_dim(), "upstream cotangent rows");
    require_size(upstream.cols(), cache.inputs.front().cols(), "upstream cotangent columns");
    Matrix d = upstream;
    if (bounds_) {
      const Vector half = 0.5 * (bounds_->upper - bounds_->lower);
      const Matrix t = cache.final_output.array().tanh();
      d.array() *= (1.0 - t.array().square()).colwise() * half.array();
    }
    if (weight_grad) weight_grad->setZero(weights_.size());
    for (std::size_t k = layers_.size(); k-- > 0;) {
      const auto& l = layers_[k];
      Matrix dz = d;
      scale_by_derivative(l.activation, cache.activated[k], dz);
      if (weight_grad) {
        const Index off = offsets_[k];
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> g_w(
            weight_grad->data() + off, l.out_width, l.in_width);
        g_w.noalias() = dz * cache.inputs[k].transpose();
        weight_grad->segment(off + l.in_width * l.out_width, l.out_width) = dz.rowwise().sum();
      }
      if (k == 0 && !input_grad) break;
      Matrix prev = weight_block(k).transpose() * dz;
      if (l.residual) prev += d;
      d = std::move(prev);
    }
    if (input_grad) *input_grad = std::move(d);
  }

  /// Gradient of <upstream, forward(x)> with respect to the weights.
  Vector weight_gradient(const Vector& x, const Vector& upstream) const {
    return weight_gradient_batch(x, upstream);
  }

  /// Gradient of <upstream, forward(x)> with respect to x.
  Vector input_gradient(const Vector& x, const Vector& upstream) const {
    return input_gradient_batch(x, upstream);
  }

  /// Sum over columns of the per-sample weight gradients.
  Vector weight_gradient_batch(const Matrix& x, const Matrix& upstream) const {
    ForwardCache cache;
    forward_batch(x, &cache);
    Vector g;
    backward(cache, upstream, &g, nullptr);
    return g;
  }

  Matrix input_gradient_batch(const Matrix& x, const Matrix& upstream) const {
    ForwardCache cache;
    forward_batch(x, &cache);
    Matrix g;
    backward(cache, upstream, nullptr, &g);
    return g;
  }

 private:
  using RowMajorMap =
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

  RowMajorMap weight_block(std::size_t k) const {
    const auto& l = layers_[k];
    return RowMajorMap(weights_.data() + offsets_[k], l.out_width, l.in_width);
  }

  Eigen::Map<const Vector> bias_block(std::size_t k) const {
    const auto& l = layers_[k];
    return Eigen::Map<const Vector>(weights_.data() + offsets_[k] + l.in_width * l.out_width,
                                    l.out_width);
  }

  std::vector<LayerSpec> layers_;
  Vector weights_;
  std::optional<OutputBounds> bounds_;
  std::vector<Index> offsets_;
};

/// Hidden widths with one activation, then an identity output layer.
///
/// `residual` flags hidden layers (same index as `hidden`) that become
/// residual blocks; an empty list means none.
inline std::vector<LayerSpec> mlp_layers(Index input_dim, const std::vector<Index>& hidden,
                                         Index output_dim, Activation activation,
                                         const std::vector<bool>& residual = {}) {
  if (!residual.empty() && residual.size() != hidden.size()) {
    throw TopologyError("residual flags must match the number of hidden layers");
  }
  std::vector<LayerSpec> layers;
  Index width = input_dim;
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    layers.push_back({width, hidden[i], activation, !residual.empty() && residual[i]});
    width = hidden[i];
  }
  layers.push_back({width, output_dim, Activation::Identity, false});
  validate_topology(layers);
  return layers;
}

}  // namespace slac::nn

#endif  // SLAC_NN_NETWORK_HPP
