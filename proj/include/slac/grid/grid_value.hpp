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

#ifndef SLAC_GRID_GRID_VALUE_HPP
#define SLAC_GRID_GRID_VALUE_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "slac/core/binary_io.hpp"
#include "slac/core/parallel.hpp"
#include "slac/core/raster.hpp"
#include "slac/ocp/problem.hpp"
#include "slac/sl/bellman.hpp"
#include "slac/sl/critic.hpp"
#include "slac/sl/kruzkov.hpp"

namespace slac::grid {

/// Uniform tensor grid. Non-periodic axes place nodes on both endpoints;
/// periodic axes cover [lower, upper) and wrap.
struct GridSpec {
  Vector lower;
  Vector upper;
  std::vector<Index> nodes;
  std::vector<bool> periodic;

  Index dim() const { return lower.size(); }

  Index node_count() const {
    Index n = 1;
    for (Index k : nodes) n *= k;
    return n;
  }

  double spacing(Index d) const {
    const auto k = static_cast<std::size_t>(d);
    const double span = upper[d] - lower[d];
    return periodic[k] ? span / static_cast<double>(nodes[k])
                       : span / static_cast<double>(nodes[k] - 1);
  }

  void validate() const {
    if (dim() == 0) throw ConfigError("grid: needs at least one dimension");
    if (upper.size() != dim() || static_cast<Index>(nodes.size()) != dim() ||
        static_cast<Index>(periodic.size()) != dim()) {
      throw ConfigError("grid: lower, upper, nodes and periodic must have equal lengths");
    }
    if (dim() > 3) throw ConfigError("grid: at most 3 dimensions are supported");
    for (Index d = 0; d < dim(); ++d) {
      if (!(upper[d] > lower[d])) throw ConfigError("grid: upper must exceed lower");
      if (nodes[static_cast<std::size_t>(d)] < 2) throw ConfigError("grid: nodes must be >= 2");
    }
  }

  bool operator==(const GridSpec& o) const {
    return lower.size() == o.lower.size() && lower == o.lower && upper == o.upper &&
           nodes == o.nodes && periodic == o.periodic;
  }
};

/// Uniform control lattice over the box with `samples` points per dimension.
inline Matrix control_lattice(const Vector& lower, const Vector& upper, Index samples) {
  if (samples < 2) throw ConfigError("grid.control_samples must be >= 2");
  const Index m = lower.size();
  Index total = 1;
  for (Index d = 0; d < m; ++d) total *= samples;
  Matrix out(m, total);
  for (Index c = 0; c < total; ++c) {
    Index rem = c;
    for (Index d = m; d-- > 0;) {
      const Index i = rem % samples;
      rem /= samples;
      out(d, c) = lower[d] + (upper[d] - lower[d]) * static_cast<double>(i) /
                                 static_cast<double>(samples - 1);
    }
  }
  return out;
}

/// Interpolation stencil: 2^dim corner indices with multilinear weights.
struct Stencil {
  std::array<std::int32_t, 8> corner{};
  std::array<double, 8> weight{};
  std::array<double, 3> fraction{};  // per-axis position inside the cell
  int count = 0;
  bool inside = false;
};

/// Transformed value table on a grid, a Critic via multilinear interpolation.
/// Points outside a non-periodic axis evaluate to 1 (never reaches the target).
class GridValueFunction final : public sl::Critic {
 public:
  GridValueFunction() = default;
  GridValueFunction(GridSpec spec, Vector values, sl::SlConfig sl_cfg, Matrix controls)
      : spec_(std::move(spec)), values_(std::move(values)), sl_(sl_cfg), controls_(std::move(controls)) {
    spec_.validate();
    require_size(values_.size(), spec_.node_count(), "grid value table");
    if (spec_.node_count() > std::numeric_limits<std::int32_t>::max()) {
      throw ConfigError("grid: too many nodes");
    }
    strides_.assign(static_cast<std::size_t>(spec_.dim()), 1);
    for (Index d = spec_.dim() - 1; d-- > 0;) {
      strides_[static_cast<std::size_t>(d)] =
          strides_[static_cast<std::size_t>(d + 1)] * spec_.nodes[static_cast<std::size_t>(d + 1)];
    }
  }

  const GridSpec& spec() const { return spec_; }
  const Vector& values() const { return values_; }
  const sl::SlConfig& sl_config() const { return sl_; }
  const Matrix& control_set() const { return controls_; }

  Vector node(Index flat) const {
    Vector x(spec_.dim());
    for (Index d = 0; d < spec_.dim(); ++d) {
      const auto k = static_cast<std::size_t>(d);
      const Index i = (flat / strides_[k]) % spec_.nodes[k];
      x[d] = spec_.lower[d] + spec_.spacing(d) * static_cast<double>(i);
    }
    return x;
  }

  Stencil stencil(const Vector& x) const {
    Stencil st;
    const Index dim = spec_.dim();
    std::array<std::int64_t, 3> i0{}, i1{};
    std::array<double, 3> t{};
    for (Index d = 0; d < dim; ++d) {
      const auto k = static_cast<std::size_t>(d);
      const Index n = spec_.nodes[k];
      double s = (x[d] - spec_.lower[d]) / spec_.spacing(d);
      if (spec_.periodic[k]) {
        s -= static_cast<double>(n) * std::floor(s / static_cast<double>(n));
        auto base = static_cast<Index>(std::floor(s));
        t[k] = s - static_cast<double>(base);
        base %= n;
        i0[k] = base;
        i1[k] = (base + 1) % n;
      } else {
        constexpr double eps = 1e-9;
        if (!(s >= -eps && s <= static_cast<double>(n - 1) + eps)) return st;
        s = std::clamp(s, 0.0, static_cast<double>(n - 1));
        const Index base = std::min<Index>(static_cast<Index>(std::floor(s)), n - 2);
        t[k] = s - static_cast<double>(base);
        i0[k] = base;
        i1[k] = base + 1;
      }
      st.fraction[k] = t[k];
    }
    st.inside = true;
    st.count = 1 << dim;
    for (int c = 0; c < st.count; ++c) {
      std::int64_t flat = 0;
      double w = 1.0;
      for (Index d = 0; d < dim; ++d) {
        const auto k = static_cast<std::size_t>(d);
        const bool hi = (c >> d) & 1;
        flat += (hi ? i1[k] : i0[k]) * strides_[k];
        w *= hi ? t[k] : 1.0 - t[k];
      }
      st.corner[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(flat);
      st.weight[static_cast<std::size_t>(c)] = w;
    }
    return st;
  }

  static double apply(const Stencil& st, const Vector& table) {
    if (!st.inside) return 1.0;
    double v = 0.0;
    for (int c = 0; c < st.count; ++c) {
      v += st.weight[static_cast<std::size_t>(c)] * table[st.corner[static_cast<std::size_t>(c)]];
    }
    return v;
  }

  double interpolate(const Vector& x) const {
    require_size(x.size(), spec_.dim(), "grid query point");
    return apply(stencil(x), values_);
  }

  /// Gradient of the multilinear interpolant (zero outside the grid).
  Vector interpolate_gradient(const Vector& x) const {
    require_size(x.size(), spec_.dim(), "grid query point");
    const Index dim = spec_.dim();
    Vector g = Vector::Zero(dim);
    const Stencil st = stencil(x);
    if (!st.inside) return g;
    for (Index d = 0; d < dim; ++d) {
      double acc = 0.0;
      for (int c = 0; c < st.count; ++c) {
        double w = ((c >> d) & 1) ? 1.0 : -1.0;
        for (Index e = 0; e < dim; ++e) {
          if (e == d) continue;
          const double t = st.fraction[static_cast<std::size_t>(e)];
          w *= ((c >> e) & 1) ? t : 1.0 - t;
        }
        acc += w * values_[st.corner[static_cast<std::size_t>(c)]];
      }
      g[d] = acc / spec_.spacing(d);
    }
    return g;
  }

  void evaluate(const Matrix& states, Vector* values, Matrix* gradients) const override {
    if (values) {
      values->resize(states.cols());
      for (Index j = 0; j < states.cols(); ++j) (*values)[j] = interpolate(states.col(j));
    }
    if (gradients) {
      gradients->resize(states.rows(), states.cols());
      for (Index j = 0; j < states.cols(); ++j) gradients->col(j) = interpolate_gradient(states.col(j));
    }
  }

  bool contains(const Vector& x) const {
    for (Index d = 0; d < spec_.dim(); ++d) {
      if (spec_.periodic[static_cast<std::size_t>(d)]) continue;
      if (x[d] < spec_.lower[d] - 1e-9 || x[d] > spec_.upper[d] + 1e-9) return false;
    }
    return true;
  }

 private:
  GridSpec spec_;
  Vector values_;
  sl::SlConfig sl_;
  Matrix controls_;
  std::vector<Index> strides_;
};

struct GridSolveOptions {
  double tol = 1e-6;
  Index max_sweeps = 10000;
  int workers = 1;
  // Precomputed successor stencils are used when they fit in this many bytes.
  std::size_t stencil_memory_limit = std::size_t{1} << 30;
};

struct GridSolveReport {
  Index sweeps = 0;
  double final_change = 0.0;
  bool converged = false;
  bool monotone = true;  // every sweep was pointwise nonincreasing
  bool in_range = true;  // every table stayed in [0, 1]
  std::vector<double> changes;
  Index pinned_nodes = 0;
  double seconds = 0.0;
};

struct GridSolveResult {
  GridValueFunction value;
  GridSolveReport report;
};

/// Jacobi value iteration for V~(x) = min_u [1 + gamma(x,u) (V~(x + dt f(x,u)) - 1)]
/// from V~_0 = 1, with nodes whose cell meets the target pinned to 0.
inline GridSolveResult grid_value_iteration(const ocp::Problem& p, const GridSpec& spec,
                                            const Matrix& controls, const sl::SlConfig& cfg,
                                            const GridSolveOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  cfg.validate();
  require_size(spec.dim(), p.state_dim(), "grid dimension");
  require_size(controls.rows(), p.control_dim(), "control set rows");
  if (controls.cols() < 2) throw ConfigError("grid: control set needs at least 2 controls");
  if (options.max_sweeps < 1) throw ConfigError("grid.max_sweeps must be >= 1");
  if (!(options.tol >= 0.0)) throw ConfigError("grid.tol must be >= 0");

  const Index n_nodes = spec.node_count();
  const Index n_ctrl = controls.cols();
  GridValueFunction shape(spec, Vector::Ones(n_nodes), cfg, controls);

  std::vector<char> pinned(static_cast<std::size_t>(n_nodes), 0);
  Index n_pinned = 0;
  for (Index i = 0; i < n_nodes; ++i) {
    const Vector x = shape.node(i);
    Vector half(spec.dim());
    for (Index d = 0; d < spec.dim(); ++d) half[d] = 0.5 * spec.spacing(d);
    if (p.target_intersects_box(x - half, x + half)) {
      pinned[static_cast<std::size_t>(i)] = 1;
      ++n_pinned;
    }
  }
  if (n_pinned == 0) throw ConfigError("grid: no grid node lies in the target set");

  // Successor stencils and discounts, per (node, control).
  const std::size_t entries = static_cast<std::size_t>(n_nodes) * static_cast<std::size_t>(n_ctrl);
  const bool precompute = entries * (sizeof(Stencil) + sizeof(double)) <= options.stencil_memory_limit;
  std::vector<Stencil> stencils;
  std::vector<double> gammas;
  auto successor = [&](Index node, Index c, Stencil& st, double& gamma) {
    const Vector x = shape.node(node);
    const Vector u = controls.col(c);
    st = shape.stencil(sl::euler_step(p, x, u, cfg.dt));
    gamma = sl::discount(p, x, u, cfg);
  };
  if (precompute) {
    stencils.resize(entries);
    gammas.resize(entries);
    parallel_for(n_nodes, options.workers, [&](Index begin, Index end) {
      for (Index i = begin; i < end; ++i) {
        if (pinned[static_cast<std::size_t>(i)]) continue;
        for (Index c = 0; c < n_ctrl; ++c) {
          const auto k = static_cast<std::size_t>(i * n_ctrl + c);
          successor(i, c, stencils[k], gammas[k]);
        }
      }
    });
  }

  Vector current = Vector::Ones(n_nodes);
  for (Index i = 0; i < n_nodes; ++i) {
    if (pinned[static_cast<std::size_t>(i)]) current[i] = 0.0;
  }
  Vector next(n_nodes);
  GridSolveReport report;
  report.pinned_nodes = n_pinned;
  std::vector<double> chunk_change;
  for (Index sweep = 0; sweep < options.max_sweeps; ++sweep) {
    parallel_for(n_nodes, options.workers, [&](Index begin, Index end) {
      Stencil st;
      double gamma = 0.0;
      for (Index i = begin; i < end; ++i) {
        if (pinned[static_cast<std::size_t>(i)]) {
          next[i] = 0.0;
          continue;
        }
        double best = std::numeric_limits<double>::infinity();
        for (Index c = 0; c < n_ctrl; ++c) {
          const auto k = static_cast<std::size_t>(i * n_ctrl + c);
          if (precompute) {
            best = std::min(best, 1.0 + gammas[k] * (GridValueFunction::apply(stencils[k], current) - 1.0));
          } else {
            successor(i, c, st, gamma);
            best = std::min(best, 1.0 + gamma * (GridValueFunction::apply(st, current) - 1.0));
          }
        }
        next[i] = best;
      }
    });
    const double change = (next - current).cwiseAbs().maxCoeff();
    if ((next.array() > current.array() + 1e-14).any()) report.monotone = false;
    if (next.minCoeff() < 0.0 || next.maxCoeff() > 1.0) report.in_range = false;
    std::swap(current, next);
    report.changes.push_back(change);
    report.sweeps = sweep + 1;
    report.final_change = change;
    if (change <= options.tol) {
      report.converged = true;
      break;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {GridValueFunction(spec, std::move(current), cfg, controls), report};
}

/// Minimizer over the value function's control set of the bracketed
/// expression; ties go to the smallest control norm, then lexicographic order.
inline Vector grid_policy(const ocp::Problem& p, const GridValueFunction& gvf, const Vector& x) {
  if (!gvf.contains(x)) {
    throw DomainError("grid_policy: state " + format_vector(x) + " lies outside the grid");
  }
  const Matrix& controls = gvf.control_set();
  Index best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (Index c = 0; c < controls.cols(); ++c) {
    const Vector u = controls.col(c);
    const double h = 1.0 + sl::discount(p, x, u, gvf.sl_config()) *
                               (gvf.interpolate(sl::euler_step(p, x, u, gvf.sl_config().dt)) - 1.0);
    bool take = best < 0 || h < best_value - 1e-12;
    if (!take && std::abs(h - best_value) <= 1e-12) {
      const Vector b = controls.col(best);
      const double nu = u.norm();
      const double nb = b.norm();
      if (nu < nb - 1e-15) {
        take = true;
      } else if (std::abs(nu - nb) <= 1e-15) {
        take = std::lexicographical_compare(u.data(), u.data() + u.size(), b.data(),
                                            b.data() + b.size());
      }
    }
    if (take) {
      best = c;
      best_value = std::min(best_value, h);
    }
  }
  return controls.col(best);
}

enum class SliceValue { Transformed, Cost };

/// Raster of the interpolated value over two free dimensions of `base`.
/// Channels: "value" (transformed) and "cost" (-ln(1 - V~) / mu).
inline Raster sample_grid_slice(const sl::Critic& critic, const Vector& base, Index dim_x,
                                Index dim_y, double x_lower, double x_upper, double y_lower,
                                double y_upper, Index nx, Index ny, double mu,
                                const std::vector<std::string>& axis_names = {}) {
  if (dim_x == dim_y || dim_x < 0 || dim_y < 0 || dim_x >= base.size() || dim_y >= base.size()) {
    throw DomainError("slice needs two distinct free dimensions within the state");
  }
  if (nx < 1 || ny < 1) throw DomainError("slice resolution must be positive");
  Raster r;
  auto name = [&](Index d) {
    return static_cast<std::size_t>(d) < axis_names.size() ? axis_names[static_cast<std::size_t>(d)]
                                                           : "x" + std::to_string(d);
  };
  r.x_axis = {name(dim_x), dim_x, x_lower, x_upper, nx};
  r.y_axis = {name(dim_y), dim_y, y_lower, y_upper, ny};
  r.base_state = base;
  r.channels = {"value", "cost"};
  Matrix states(base.size(), nx * ny);
  for (Index i = 0; i < nx; ++i) {
    for (Index j = 0; j < ny; ++j) states.col(i * ny + j) = r.state_at(i, j);
  }
  const Vector v = critic.values(states);
  Matrix value(nx, ny), cost(nx, ny);
  for (Index i = 0; i < nx; ++i) {
    for (Index j = 0; j < ny; ++j) {
      const double w = v[i * ny + j];
      value(i, j) = w;
      cost(i, j) = sl::kruzkov_inverse(std::clamp(w, 0.0, 1.0)) / mu;
    }
  }
  r.data = {value, cost};
  return r;
}

/// Slice over the grid's own bounds for the two free dimensions.
inline Raster sample_grid_slice(const GridValueFunction& gvf, const Vector& base, Index dim_x,
                                Index dim_y, Index nx, Index ny,
                                const std::vector<std::string>& axis_names = {}) {
  const auto& s = gvf.spec();
  auto hi = [&](Index d) {
    return s.periodic[static_cast<std::size_t>(d)] ? s.upper[d] - s.spacing(d) : s.upper[d];
  };
  return sample_grid_slice(gvf, base, dim_x, dim_y, s.lower[dim_x], hi(dim_x), s.lower[dim_y],
                           hi(dim_y), nx, ny, gvf.sl_config().mu, axis_names);
}

// File layout (little-endian), see docs/formats.md:
//   "SLACGRID" | u32 version | u32 dim
//   per dim: f64 lower | f64 upper | u64 nodes | u8 periodic
//   f64 dt | f64 mu | u32 control_dim | u64 control count | f64 controls[...] (column-major)
//   u64 n | f64 values[n]
inline constexpr std::string_view kGridMagic{"SLACGRID", 8};
inline constexpr std::uint32_t kGridFormatVersion = 1;

inline void save_grid(const std::filesystem::path& path, const GridValueFunction& gvf) {
  io::BinaryWriter w;
  w.put_bytes(kGridMagic);
  w.put<std::uint32_t>(kGridFormatVersion);
  const auto& s = gvf.spec();
  w.put<std::uint32_t>(static_cast<std::uint32_t>(s.dim()));
  for (Index d = 0; d < s.dim(); ++d) {
    w.put<double>(s.lower[d]);
    w.put<double>(s.upper[d]);
    w.put<std::uint64_t>(static_cast<std::uint64_t>(s.nodes[static_cast<std::size_t>(d)]));
    w.put<std::uint8_t>(s.periodic[static_cast<std::size_t>(d)] ? 1 : 0);
  }
  w.put<double>(gvf.sl_config().dt);
  w.put<double>(gvf.sl_config().mu);
  const Matrix& c = gvf.control_set();
  w.put<std::uint32_t>(static_cast<std::uint32_t>(c.rows()));
  w.put<std::uint64_t>(static_cast<std::uint64_t>(c.cols()));
  for (Index j = 0; j < c.cols(); ++j) {
    for (Index i = 0; i < c.rows(); ++i) w.put<double>(c(i, j));
  }
  w.put_vector(gvf.values());
  io::write_file_atomic(path, w.bytes());
}

inline GridValueFunction load_grid(const std::filesystem::path& path) {
  io::BinaryReader r(io::read_file(path), path.string());
  r.expect_magic(kGridMagic);
  const auto version = r.get<std::uint32_t>();
  if (version != kGridFormatVersion) {
    throw FormatError(path.string() + ": unsupported grid format version " + std::to_string(version));
  }
  const auto dim = r.get<std::uint32_t>();
  if (dim == 0 || dim > 3) throw FormatError(path.string() + ": bad grid dimension");
  GridSpec s;
  s.lower.resize(dim);
  s.upper.resize(dim);
  for (std::uint32_t d = 0; d < dim; ++d) {
    s.lower[d] = r.get<double>();
    s.upper[d] = r.get<double>();
    s.nodes.push_back(static_cast<Index>(r.get<std::uint64_t>()));
    s.periodic.push_back(r.get<std::uint8_t>() != 0);
  }
  sl::SlConfig cfg;
  cfg.dt = r.get<double>();
  cfg.mu = r.get<double>();
  const auto rows = r.get<std::uint32_t>();
  const auto cols = r.get<std::uint64_t>();
  Matrix c(rows, static_cast<Index>(cols));
  for (Index j = 0; j < c.cols(); ++j) {
    for (Index i = 0; i < c.rows(); ++i) c(i, j) = r.get<double>();
  }
  Vector values = r.get_vector();
  if (!r.at_end()) throw FormatError(path.string() + ": trailing bytes after grid");
  return GridValueFunction(std::move(s), std::move(values), cfg, std::move(c));
}

}  // namespace slac::grid

#endif  // SLAC_GRID_GRID_VALUE_HPP
