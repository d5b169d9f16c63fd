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

#ifndef SLAC_IO_EXPORT_HPP
#define SLAC_IO_EXPORT_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slac/ac/trainer.hpp"
#include "slac/core/binary_io.hpp"
#include "slac/core/raster.hpp"
#include "slac/io/run_config.hpp"
#include "slac/rollout/rollout.hpp"

namespace slac::io {

using nlohmann::json;

/// Axis names and physical units of a problem's state and control.
struct StateLabels {
  std::vector<std::string> state_names;
  std::vector<std::string> state_units;
  std::vector<std::string> control_names;
  std::vector<std::string> control_units;
  std::string time_unit = "s";
};

inline StateLabels labels_for(const ocp::Problem& p) {
  StateLabels l;
  const std::string name = p.name();
  if (name == "double_integrator") {
    l.state_names = {"x", "y"};
    l.state_units = {"m", "m/s"};
    l.control_names = {"u"};
    l.control_units = {"m/s^2"};
  } else if (name == "dubins") {
    l.state_names = {"x", "y", "theta"};
    l.state_units = {"m", "m", "rad"};
    l.control_names = {"u"};
    l.control_units = {"rad/s"};
  } else if (name == "trace") {
    l.state_names = {"q0", "q1", "q2", "q3", "w1", "w2", "w3"};
    l.state_units = {"1", "1", "1", "1", "rad/s", "rad/s", "rad/s"};
    l.control_names = {"u1", "u2", "u3"};
    l.control_units = {"N*m", "N*m", "N*m"};
  } else {
    for (Index i = 0; i < p.state_dim(); ++i) {
      l.state_names.push_back("x" + std::to_string(i));
      l.state_units.push_back("1");
    }
    for (Index i = 0; i < p.control_dim(); ++i) {
      l.control_names.push_back("u" + std::to_string(i));
      l.control_units.push_back("1");
    }
  }
  return l;
}

/// Dense raster as CSV: '#' metadata lines, a header row, then one row per
/// lattice point with the x index slowest.
inline std::string raster_csv(const Raster& r, const std::map<std::string, std::string>& units,
                              const std::string& title) {
  std::ostringstream out;
  auto unit = [&](const std::string& col) {
    auto it = units.find(col);
    return it == units.end() ? std::string("1") : it->second;
  };
  auto axis = [&](const char* tag, const RasterAxis& a) {
    out << "# " << tag << ": name=" << a.name << " state_dim=" << a.state_dim
        << " lower=" << format_double(a.lower) << " upper=" << format_double(a.upper)
        << " count=" << a.count << " unit=" << unit(a.name) << "\n";
  };
  out << "# slac raster v1: " << title << "\n";
  axis("x_axis", r.x_axis);
  axis("y_axis", r.y_axis);
  out << "# base_state:";
  for (Index i = 0; i < r.base_state.size(); ++i) out << (i ? "," : " ") << format_double(r.base_state[i]);
  out << "\n";
  for (const auto& c : r.channels) out << "# channel: name=" << c << " unit=" << unit(c) << "\n";
  out << r.x_axis.name << "," << r.y_axis.name;
  for (const auto& c : r.channels) out << "," << c;
  out << "\n";
  for (Index i = 0; i < r.x_axis.count; ++i) {
    for (Index j = 0; j < r.y_axis.count; ++j) {
      out << format_double(r.x_axis.at(i)) << "," << format_double(r.y_axis.at(j));
      for (const auto& m : r.data) out << "," << format_double(m(i, j));
      out << "\n";
    }
  }
  return out.str();
}

/// Trajectory as CSV: t, states, controls, cumulative running cost. The final
/// row has empty control fields since no control is applied after it.
inline std::string trajectory_csv(const rollout::Trajectory& t, const StateLabels& l) {
  std::ostringstream out;
  out << "# slac trajectory v1\n";
  out << "# exit_reason: " << rollout::to_string(t.exit_reason) << "\n";
  out << "# reached_target: " << (t.reached_target ? "true" : "false") << "\n";
  out << "# accumulated_cost: " << format_double(t.accumulated_cost) << "\n";
  out << "# unit: t=" << l.time_unit;
  for (std::size_t i = 0; i < l.state_names.size(); ++i) {
    out << " " << l.state_names[i] << "=" << l.state_units[i];
  }
  for (std::size_t i = 0; i < l.control_names.size(); ++i) {
    out << " " << l.control_names[i] << "=" << l.control_units[i];
  }
  out << " cost=1\n";
  out << "t";
  for (const auto& n : l.state_names) out << "," << n;
  for (const auto& n : l.control_names) out << "," << n;
  out << ",cost\n";
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    out << format_double(t.times[k]);
    for (Index i = 0; i < t.states[k].size(); ++i) out << "," << format_double(t.states[k][i]);
    for (std::size_t i = 0; i < l.control_names.size(); ++i) {
      out << ",";
      if (k < t.controls.size()) out << format_double(t.controls[k][static_cast<Index>(i)]);
    }
    out << "," << format_double(t.cumulative_cost[k]) << "\n";
  }
  return out.str();
}

/// Deterministic fields of one iteration; wall time is logged separately.
inline json metrics_record(const ac::IterationRecord& r) {
  return json{{"iteration", r.iteration},
              {"actor_loss_initial", r.actor_loss_initial},
              {"actor_loss", r.actor_loss},
              {"critic_loss", r.critic_loss},
              {"target_loss", r.target_loss},
              {"critic_steps", r.critic_steps},
              {"residual_mean_abs", r.residual.mean_abs},
              {"residual_max_abs", r.residual.max_abs},
              {"residual_rms", r.residual.rms},
              {"update_norm", r.update_norm}};
}

inline json timing_record(const ac::IterationRecord& r) {
  return json{{"iteration", r.iteration}, {"wall_time", r.wall_time}};
}

inline std::string jsonl(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

/// Append-only line log; each line is flushed as it is written.
class JsonlWriter {
 public:
  JsonlWriter() = default;
  JsonlWriter(const std::filesystem::path& path, bool append) {
    out_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
  }

  void write(const json& record) {
    out_ << record.dump() << "\n";
    out_.flush();
    if (!out_) throw Error("write to metrics log failed");
  }

 private:
  std::ofstream out_;
};

inline json summary_json(const rollout::EnsembleSummary& s) {
  json groups = json::array();
  for (const auto& g : s.groups) {
    groups.push_back({{"name", g.name},
                      {"tolerance", g.tolerance},
                      {"settled_fraction", g.settled_fraction},
                      {"max_trailing_sup", g.max_trailing_sup}});
  }
  return json{{"count", s.count},
              {"successes", s.successes},
              {"success_fraction", s.success_fraction},
              {"cost_mean", s.cost_mean},
              {"cost_max", s.cost_max},
              {"settled_fraction", s.settled_fraction},
              {"controls_in_bounds", s.controls_in_bounds},
              {"groups", groups}};
}

inline void write_json(const std::filesystem::path& path, const json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace slac::io

#endif  // SLAC_IO_EXPORT_HPP
