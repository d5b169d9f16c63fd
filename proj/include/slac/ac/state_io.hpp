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

#ifndef SLAC_AC_STATE_IO_HPP
#define SLAC_AC_STATE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <string_view>

#include "slac/ac/trainer.hpp"
#include "slac/core/binary_io.hpp"
#include "slac/nn/checkpoint.hpp"

namespace slac::ac {

inline constexpr std::string_view kStateMagic{"SLACSTAT", 8};
inline constexpr std::uint32_t kStateFormatVersion = 1;

namespace detail {

inline void write_optimizer(io::BinaryWriter& w, const nn::Optimizer& opt) {
  const auto& p = opt.params();
  w.put<std::uint8_t>(static_cast<std::uint8_t>(p.kind));
  w.put<double>(p.learning_rate);
  w.put<double>(p.beta1);
  w.put<double>(p.beta2);
  w.put<double>(p.epsilon);
  w.put<std::int64_t>(opt.step_count());
  w.put_vector(opt.first_moment());
  w.put_vector(opt.second_moment());
}

inline nn::Optimizer read_optimizer(io::BinaryReader& r) {
  nn::OptimizerParams p;
  const auto kind = r.get<std::uint8_t>();
  if (kind > static_cast<std::uint8_t>(nn::OptimizerKind::SGD)) {
    throw FormatError(r.source() + ": bad optimizer code");
  }
  p.kind = static_cast<nn::OptimizerKind>(kind);
  p.learning_rate = r.get<double>();
  p.beta1 = r.get<double>();
  p.beta2 = r.get<double>();
  p.epsilon = r.get<double>();
  const auto steps = r.get<std::int64_t>();
  Vector first = r.get_vector();
  Vector second = r.get_vector();
  nn::Optimizer opt(p, first.size());
  opt.restore(steps, std::move(first), std::move(second));
  return opt;
}

inline void write_record(io::BinaryWriter& w, const IterationRecord& rec) {
  w.put<std::int64_t>(rec.iteration);
  w.put<double>(rec.actor_loss_initial);
  w.put<double>(rec.actor_loss);
  w.put<double>(rec.critic_loss);
  w.put<double>(rec.target_loss);
  w.put<std::int64_t>(rec.critic_steps);
  w.put<double>(rec.residual.mean_abs);
  w.put<double>(rec.residual.max_abs);
  w.put<double>(rec.residual.rms);
  w.put<double>(rec.update_norm);
  w.put<double>(rec.wall_time);
}

inline IterationRecord read_record(io::BinaryReader& r) {
  IterationRecord rec;
  rec.iteration = r.get<std::int64_t>();
  rec.actor_loss_initial = r.get<double>();
  rec.actor_loss = r.get<double>();
  rec.critic_loss = r.get<double>();
  rec.target_loss = r.get<double>();
  rec.critic_steps = r.get<std::int64_t>();
  rec.residual.mean_abs = r.get<double>();
  rec.residual.max_abs = r.get<double>();
  rec.residual.rms = r.get<double>();
  rec.update_norm = r.get<double>();
  rec.wall_time = r.get<double>();
  return rec;
}

}  // namespace detail

inline std::string serialize_state(const TrainState& s) {
  io::BinaryWriter w;
  w.put_bytes(kStateMagic);
  w.put<std::uint32_t>(kStateFormatVersion);
  w.put<std::int64_t>(s.iteration);
  nn::write_network(w, s.actor);
  nn::write_network(w, s.actor_avg);
  nn::write_network(w, s.critic);
  nn::write_network(w, s.critic_avg);
  detail::write_optimizer(w, s.actor_opt);
  detail::write_optimizer(w, s.critic_opt);
  std::ostringstream rng;
  rng << s.rng;
  w.put_string(rng.str());
  w.put<std::uint64_t>(s.history.size());
  for (const auto& rec : s.history) detail::write_record(w, rec);
  return w.bytes();
}

inline TrainState deserialize_state(std::string bytes, const std::string& source = "state") {
  io::BinaryReader r(std::move(bytes), source);
  r.expect_magic(kStateMagic);
  const auto version = r.get<std::uint32_t>();
  if (version != kStateFormatVersion) {
    throw FormatError(source + ": unsupported state format version " + std::to_string(version));
  }
  TrainState s;
  s.iteration = r.get<std::int64_t>();
  s.actor = nn::read_network(r);
  s.actor_avg = nn::read_network(r);
  s.critic = nn::read_network(r);
  s.critic_avg = nn::read_network(r);
  s.actor_opt = detail::read_optimizer(r);
  s.critic_opt = detail::read_optimizer(r);
  std::istringstream rng(r.get_string());
  rng >> s.rng;
  if (rng.fail()) throw FormatError(source + ": corrupt rng state");
  const auto n = r.get<std::uint64_t>();
  for (std::uint64_t i = 0; i < n; ++i) s.history.push_back(detail::read_record(r));
  if (!r.at_end()) throw FormatError(source + ": trailing bytes after state");
  if (s.actor.size() != s.actor_opt.first_moment().size() ||
      s.critic.size() != s.critic_opt.first_moment().size() ||
      s.actor.layers() != s.actor_avg.layers() || s.critic.layers() != s.critic_avg.layers()) {
    throw FormatError(source + ": inconsistent network and optimizer sizes");
  }
  return s;
}

inline void save_state(const std::filesystem::path& path, const TrainState& s) {
  io::write_file_atomic(path, serialize_state(s));
}

inline TrainState load_state(const std::filesystem::path& path) {
  return deserialize_state(io::read_file(path), path.string());
}

}  // namespace slac::ac

#endif  // SLAC_AC_STATE_IO_HPP
