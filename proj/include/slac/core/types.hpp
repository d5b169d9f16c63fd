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

#ifndef SLAC_CORE_TYPES_HPP
#define SLAC_CORE_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace slac {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
// Batches are stored column-wise: one sample per column.
using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible layer widths or malformed network description.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Vector or batch of the wrong size for the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinity produced or consumed where finite values are required.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent configuration value; the message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable file.
class FormatError : public Error {
 public:
  using Error::Error;
};

inline void require_size(Index actual, Index expected, const char* what) {
  if (actual != expected) {
    throw DimensionError(std::string(what) + ": expected size " + std::to_string(expected) +
                         ", got " + std::to_string(actual));
  }
}

inline bool all_finite(const Eigen::Ref<const Matrix>& m) { return m.allFinite(); }

inline std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace slac

#endif  // SLAC_CORE_TYPES_HPP
