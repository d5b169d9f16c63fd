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

#ifndef SLAC_NN_CHECKPOINT_HPP
#define SLAC_NN_CHECKPOINT_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "slac/core/binary_io.hpp"
#include "slac/nn/network.hpp"

namespace slac::nn {

// Layout (little-endian), see docs/formats.md:
//   "SLACNET\0" | u32 version | u32 layer count
//   per layer: u32 in | u32 out | u8 activation | u8 residual
//   u8 has_bounds [| u64 n | f64 lower[n] | u64 n | f64 upper[n]]
//   u64 weight count | f64 weights[count]
inline constexpr std::string_view kNetworkMagic{"SLACNET\0", 8};
inline constexpr std::uint32_t kNetworkFormatVersion = 1;

inline void write_network(io::BinaryWriter& w, const Network& net) {
  w.put_bytes(kNetworkMagic);
  w.put<std::uint32_t>(kNetworkFormatVersion);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(net.layers().size()));
  for (const auto& l : net.layers()) {
    w.put<std::uint32_t>(static_cast<std::uint32_t>(l.in_width));
    w.put<std::uint32_t>(static_cast<std::uint32_t>(l.out_width));
    w.put<std::uint8_t>(static_cast<std::uint8_t>(l.activation));
    w.put<std::uint8_t>(l.residual ? 1 : 0);
  }
  const auto& bounds = net.output_bounds();
  w.put<std::uint8_t>(bounds ? 1 : 0);
  if (bounds) {
    w.put_vector(bounds->lower);
    w.put_vector(bounds->upper);
  }
  w.put_vector(net.weights());
}

inline Network read_network(io::BinaryReader& r) {
  r.expect_magic(kNetworkMagic);
  const auto version = r.get<std::uint32_t>();
  if (version != kNetworkFormatVersion) {
    throw FormatError(r.source() + ": unsupported network format version " +
                      std::to_string(version));
  }
  const auto n_layers = r.get<std::uint32_t>();
  std::vector<LayerSpec> layers;
  for (std::uint32_t i = 0; i < n_layers; ++i) {
    LayerSpec l;
    l.in_width = r.get<std::uint32_t>();
    l.out_width = r.get<std::uint32_t>();
    const auto act = r.get<std::uint8_t>();
    if (act > static_cast<std::uint8_t>(Activation::Identity)) {
      throw FormatError(r.source() + ": bad activation code");
    }
    l.activation = static_cast<Activation>(act);
    l.residual = r.get<std::uint8_t>() != 0;
    layers.push_back(l);
  }
  std::optional<OutputBounds> bounds;
  if (r.get<std::uint8_t>() != 0) {
    OutputBounds b;
    b.lower = r.get_vector();
    b.upper = r.get_vector();
    bounds = std::move(b);
  }
  Vector weights = r.get_vector();
  return Network(std::move(layers), std::move(weights), std::move(bounds));
}

inline void save_network(const std::filesystem::path& path, const Network& net) {
  io::BinaryWriter w;
  write_network(w, net);
  io::write_file_atomic(path, w.bytes());
}

inline Network load_network(const std::filesystem::path& path) {
  io::BinaryReader r(io::read_file(path), path.string());
  Network net = read_network(r);
  if (!r.at_end()) throw FormatError(path.string() + ": trailing bytes after network");
  return net;
}

}  // namespace slac::nn

#endif  // SLAC_NN_CHECKPOINT_HPP
