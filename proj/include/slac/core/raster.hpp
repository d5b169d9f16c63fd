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

#ifndef SLAC_CORE_RASTER_HPP
#define SLAC_CORE_RASTER_HPP

#include <string>
#include <vector>

#include "slac/core/types.hpp"

namespace slac {

/// Uniform axis over [lower, upper] with both endpoints included.
struct RasterAxis {
  std::string name;
  Index state_dim = 0;
  double lower = 0.0;
  double upper = 1.0;
  Index count = 2;

  double at(Index i) const {
    if (count == 1) return lower;
    return lower + (upper - lower) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

/// Dense 2D sample of one or more scalar fields over a state-space slice.
struct Raster {
  RasterAxis x_axis;
  RasterAxis y_axis;
  // Full state used for the fixed coordinates; the two axis dims are overwritten.
  Vector base_state;
  std::vector<std::string> channels;
  std::vector<Matrix> data;  // one x_axis.count x y_axis.count matrix per channel

  Vector state_at(Index i, Index j) const {
    Vector x = base_state;
    x[x_axis.state_dim] = x_axis.at(i);
    x[y_axis.state_dim] = y_axis.at(j);
    return x;
  }
};

}  // namespace slac

#endif  // SLAC_CORE_RASTER_HPP
