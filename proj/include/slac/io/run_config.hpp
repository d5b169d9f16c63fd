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

#ifndef SLAC_IO_RUN_CONFIG_HPP
#define SLAC_IO_RUN_CONFIG_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "slac/ac/trainer.hpp"
#include "slac/core/binary_io.hpp"
#include "slac/ocp/registry.hpp"
#include "slac/rollout/rollout.hpp"

namespace slac::io {

using boost::property_tree::ptree;

/// Grid reference solve; an empty `nodes` means no grid section was given.
struct GridParams {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Index> nodes;
  std::vector<bool> periodic;
  Index control_samples = 3;
  std::optional<double> dt;  // defaults to train.dt
  double tol = 1e-6;
  Index max_sweeps = 10000;

  bool enabled() const { return !nodes.empty(); }
  bool operator==(const GridParams&) const = default;
};

struct RolloutParams {
  std::optional<double> dt;  // defaults to train.dt
  double t_max = 20.0;
  double exit_margin = 2.0;
  bool stop_at_target = true;
  Index n = 100;
  // "domain" draws initial states from the training sampler; "annulus" uses
  // radii [annulus_inner, annulus_outer].
  std::string initial = "domain";
  double annulus_inner = 0.5;
  double annulus_outer = 2.0;

  bool operator==(const RolloutParams&) const = default;
};

struct EvaluateParams {
  Index n_test = 3200;
  // Lattice for the actor sign check; points within sign_margin of the
  // switching curve are skipped.
  Index sign_lattice = 81;
  double sign_margin = 0.2;
  bool operator==(const EvaluateParams&) const = default;
};

struct ExportParams {
  std::vector<Index> dims{0, 1};
  std::vector<double> lower{-1.0, -1.0};
  std::vector<double> upper{1.0, 1.0};
  std::vector<Index> resolution{100, 100};
  std::vector<double> base;  // empty means all zeros
  bool operator==(const ExportParams&) const = default;
};

struct RunConfig {
  std::string problem;
  ocp::ParamMap problem_params;
  ac::NetworkSpec actor;
  ac::NetworkSpec critic;
  ac::TrainConfig train;
  GridParams grid;
  RolloutParams rollout;
  EvaluateParams evaluate;
  ExportParams export_slice;
  std::string output_dir;  // relative paths resolve against the output root

  bool operator==(const RunConfig&) const = default;

  double grid_dt() const { return grid.dt.value_or(train.sl.dt); }
  double rollout_dt() const { return rollout.dt.value_or(train.sl.dt); }
  rollout::SimulateOptions simulate_options() const {
    return {rollout_dt(), rollout.t_max, rollout.exit_margin, rollout.stop_at_target};
  }
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace detail {

/// Typed, key-tracking reader over one INI section.
class SectionReader {
 public:
  SectionReader(const ptree* section, std::string name) : section_(section), name_(std::move(name)) {
    if (section_ && !section_->data().empty()) {
      throw ConfigError(name_ + ": section must not carry a value");
    }
  }

  bool has(const std::string& key) const { return raw(key).has_value(); }

  std::optional<std::string> raw(const std::string& key) const {
    if (!section_) return std::nullopt;
    auto it = section_->find(key);
    if (it == section_->not_found()) return std::nullopt;
    return it->second.data();
  }

  template <typename T>
  void read(const std::string& key, T& out) {
    seen_.insert(key);
    if (auto v = raw(key)) out = parse<T>(key, *v);
  }

  template <typename T>
  void read(const std::string& key, std::optional<T>& out) {
    seen_.insert(key);
    if (auto v = raw(key)) out = parse<T>(key, *v);
  }

  template <typename T>
  void read_list(const std::string& key, std::vector<T>& out) {
    seen_.insert(key);
    auto v = raw(key);
    if (!v) return;
    out.clear();
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse<T>(key, trim(item)));
  }

  void reject_unknown() const {
    if (!section_) return;
    for (const auto& [key, child] : *section_) {
      if (!seen_.contains(key)) throw ConfigError(name_ + "." + key + ": unknown key");
    }
  }

  std::string field(const std::string& key) const { return name_ + "." + key; }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  }

  template <typename T>
  T parse(const std::string& key, const std::string& text) const {
    const std::string s = trim(text);
    if constexpr (std::is_same_v<T, std::string>) {
      return s;
    } else if constexpr (std::is_same_v<T, bool>) {
      if (s == "true" || s == "1") return true;
      if (s == "false" || s == "0") return false;
      throw ConfigError(field(key) + ": expected true/false, got '" + s + "'");
    } else {
      T value{};
      const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConfigError(field(key) + ": expected " +
                          (std::is_floating_point_v<T> ? "a number" : "an integer") + ", got '" +
                          s + "'");
      }
      return value;
    }
  }

  const ptree* section_;
  std::string name_;
  std::set<std::string> seen_;
};

inline void read_network(SectionReader& r, ac::NetworkSpec& spec) {
  r.read_list("hidden", spec.hidden);
  std::string act(nn::to_string(spec.activation));
  r.read("activation", act);
  try {
    spec.activation = nn::activation_from_string(act);
  } catch (const Error&) {
    throw ConfigError(r.field("activation") + ": unknown activation '" + act + "'");
  }
  r.read_list("residual", spec.residual);
  if (spec.hidden.empty()) throw ConfigError(r.field("hidden") + ": needs at least one layer");
  for (Index h : spec.hidden) {
    if (h < 1) throw ConfigError(r.field("hidden") + ": widths must be positive");
  }
  if (!spec.residual.empty() && spec.residual.size() != spec.hidden.size()) {
    throw ConfigError(r.field("residual") + ": needs one flag per hidden layer");
  }
  r.reject_unknown();
}

inline void read_optimizer(SectionReader& r, const std::string& prefix, nn::OptimizerParams& p) {
  std::optional<std::string> kind;
  r.read(prefix + "_optimizer", kind);
  if (kind) {
    try {
      const auto k = nn::optimizer_from_string(*kind);
      if (k != p.kind) {
        p = k == nn::OptimizerKind::Adam      ? nn::OptimizerParams::adam()
            : k == nn::OptimizerKind::Adagrad ? nn::OptimizerParams::adagrad()
                                              : nn::OptimizerParams::sgd(p.learning_rate);
      }
    } catch (const Error&) {
      throw ConfigError(r.field(prefix + "_optimizer") + ": unknown optimizer '" + *kind + "'");
    }
  }
  r.read(prefix + "_lr", p.learning_rate);
  r.read(prefix + "_beta1", p.beta1);
  r.read(prefix + "_beta2", p.beta2);
  r.read(prefix + "_epsilon", p.epsilon);
  try {
    p.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(r.field(prefix + "_optimizer") + ": " + e.what());
  }
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(v[i]);
    } else if constexpr (std::is_same_v<T, bool>) {
      out += v[i] ? "true" : "false";
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

}  // namespace detail

inline const std::set<std::string>& known_sections() {
  static const std::set<std::string> s{"problem", "actor",    "critic", "train",
                                       "grid",    "rollout",  "evaluate", "export",
                                       "output"};
  return s;
}

/// Validates cross-field constraints; every message names the offending field.
inline void validate(const RunConfig& c) {
  if (c.problem.empty()) throw ConfigError("problem.name: missing problem name");
  c.train.validate();
  if (c.grid.enabled()) {
    const auto& g = c.grid;
    const std::size_t d = g.nodes.size();
    if (g.lower.size() != d || g.upper.size() != d) {
      throw ConfigError("grid.lower/grid.upper: need one entry per grid dimension");
    }
    if (!g.periodic.empty() && g.periodic.size() != d) {
      throw ConfigError("grid.periodic: needs one flag per grid dimension");
    }
    if (g.control_samples < 2) throw ConfigError("grid.control_samples must be >= 2");
    if (g.max_sweeps < 1) throw ConfigError("grid.max_sweeps must be >= 1");
    if (!(g.tol > 0.0)) throw ConfigError("grid.tol must be positive");
    if (g.dt && !(*g.dt > 0.0)) throw ConfigError("grid.dt must be positive");
  }
  const auto& r = c.rollout;
  if (r.dt && !(*r.dt > 0.0)) throw ConfigError("rollout.dt must be positive");
  if (r.n < 0) throw ConfigError("rollout.n must be >= 0");
  if (r.initial != "domain" && r.initial != "annulus") {
    throw ConfigError("rollout.initial: expected 'domain' or 'annulus', got '" + r.initial + "'");
  }
  if (!(r.annulus_inner >= 0.0 && r.annulus_outer > r.annulus_inner)) {
    throw ConfigError("rollout.annulus_outer must exceed rollout.annulus_inner >= 0");
  }
  c.simulate_options().validate();
  if (c.evaluate.n_test < 1) throw ConfigError("evaluate.n_test must be >= 1");
  if (c.evaluate.sign_lattice < 2) throw ConfigError("evaluate.sign_lattice must be >= 2");
  const auto& e = c.export_slice;
  if (e.dims.size() != 2 || e.lower.size() != 2 || e.upper.size() != 2 ||
      e.resolution.size() != 2) {
    throw ConfigError("export.dims/lower/upper/resolution: need exactly two entries each");
  }
  if (e.dims[0] == e.dims[1] || e.dims[0] < 0 || e.dims[1] < 0) {
    throw ConfigError("export.dims: need two distinct nonnegative state indices");
  }
  if (e.resolution[0] < 1 || e.resolution[1] < 1) {
    throw ConfigError("export.resolution: must be positive");
  }
}

inline RunConfig parse_config(const ptree& tree) {
  for (const auto& [name, section] : tree) {
    if (!known_sections().contains(name)) throw ConfigError(name + ": unknown section");
  }
  auto section = [&](const std::string& name) -> const ptree* {
    auto it = tree.find(name);
    return it == tree.not_found() ? nullptr : &it->second;
  };
  RunConfig c;
  {
    const ptree* s = section("problem");
    if (s) {
      for (const auto& [key, child] : *s) {
        if (key == "name") {
          c.problem = child.data();
        } else {
          c.problem_params[key] = child.data();
        }
      }
    }
  }
  for (auto [name, spec] : {std::pair{"actor", &c.actor}, std::pair{"critic", &c.critic}}) {
    detail::SectionReader r(section(name), name);
    detail::read_network(r, *spec);
  }
  {
    detail::SectionReader r(section("train"), "train");
    auto& t = c.train;
    r.read("dt", t.sl.dt);
    r.read("mu", t.sl.mu);
    r.read("alpha", t.alpha);
    r.read("n_domain", t.n_domain);
    r.read("n_target", t.n_target);
    r.read("actor_steps", t.actor_steps);
    r.read("critic_steps", t.critic_steps);
    r.read("critic_boost_threshold", t.critic_boost_threshold);
    r.read("critic_boost_factor", t.critic_boost_factor);
    detail::read_optimizer(r, "actor", t.actor_optimizer);
    detail::read_optimizer(r, "critic", t.critic_optimizer);
    r.read("iterations", t.iterations);
    r.read("seed", t.seed);
    r.read("target_loss_weight", t.target_loss_weight);
    r.read("early_stop", t.early_stop);
    r.read("early_stop_window", t.early_stop_window);
    r.read("early_stop_mean_tol", t.early_stop_mean_tol);
    r.read("early_stop_var_tol", t.early_stop_var_tol);
    r.read("checkpoint_interval", t.checkpoint_interval);
    r.reject_unknown();
  }
  {
    detail::SectionReader r(section("grid"), "grid");
    auto& g = c.grid;
    r.read_list("lower", g.lower);
    r.read_list("upper", g.upper);
    r.read_list("nodes", g.nodes);
    r.read_list("periodic", g.periodic);
    r.read("control_samples", g.control_samples);
    r.read("dt", g.dt);
    r.read("tol", g.tol);
    r.read("max_sweeps", g.max_sweeps);
    r.reject_unknown();
  }
  {
    detail::SectionReader r(section("rollout"), "rollout");
    auto& ro = c.rollout;
    r.read("dt", ro.dt);
    r.read("t_max", ro.t_max);
    r.read("exit_margin", ro.exit_margin);
    r.read("stop_at_target", ro.stop_at_target);
    r.read("n", ro.n);
    r.read("initial", ro.initial);
    r.read("annulus_inner", ro.annulus_inner);
    r.read("annulus_outer", ro.annulus_outer);
    r.reject_unknown();
  }
  {
    detail::SectionReader r(section("evaluate"), "evaluate");
    r.read("n_test", c.evaluate.n_test);
    r.read("sign_lattice", c.evaluate.sign_lattice);
    r.read("sign_margin", c.evaluate.sign_margin);
    r.reject_unknown();
  }
  {
    detail::SectionReader r(section("export"), "export");
    auto& e = c.export_slice;
    r.read_list("dims", e.dims);
    r.read_list("lower", e.lower);
    r.read_list("upper", e.upper);
    r.read_list("resolution", e.resolution);
    r.read_list("base", e.base);
    r.reject_unknown();
  }
  {
    detail::SectionReader r(section("output"), "output");
    r.read("dir", c.output_dir);
    r.reject_unknown();
  }
  validate(c);
  return c;
}

inline RunConfig parse_config_string(const std::string& text, const std::string& source = "config") {
  ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  return parse_config(tree);
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return parse_config_string(text, path.string());
}

/// Fully resolved form: every field is written, so the snapshot does not
/// depend on defaults of the reading build.
inline ptree to_ptree(const RunConfig& c) {
  ptree t;
  t.put("problem.name", c.problem);
  for (const auto& [k, v] : c.problem_params) t.put(ptree::path_type("problem/" + k, '/'), v);
  for (auto [name, spec] : {std::pair{"actor", &c.actor}, std::pair{"critic", &c.critic}}) {
    const std::string n(name);
    t.put(n + ".hidden", detail::join(spec->hidden));
    t.put(n + ".activation", std::string(nn::to_string(spec->activation)));
    if (!spec->residual.empty()) t.put(n + ".residual", detail::join(spec->residual));
  }
  const auto& tr = c.train;
  auto num = [](double v) { return format_double(v); };
  t.put("train.dt", num(tr.sl.dt));
  t.put("train.mu", num(tr.sl.mu));
  t.put("train.alpha", num(tr.alpha));
  t.put("train.n_domain", tr.n_domain);
  t.put("train.n_target", tr.n_target);
  t.put("train.actor_steps", tr.actor_steps);
  t.put("train.critic_steps", tr.critic_steps);
  t.put("train.critic_boost_threshold", num(tr.critic_boost_threshold));
  t.put("train.critic_boost_factor", tr.critic_boost_factor);
  for (auto [prefix, p] : {std::pair{"actor", &tr.actor_optimizer},
                           std::pair{"critic", &tr.critic_optimizer}}) {
    const std::string s = std::string("train.") + prefix;
    t.put(s + "_optimizer", std::string(nn::to_string(p->kind)));
    t.put(s + "_lr", num(p->learning_rate));
    t.put(s + "_beta1", num(p->beta1));
    t.put(s + "_beta2", num(p->beta2));
    t.put(s + "_epsilon", num(p->epsilon));
  }
  t.put("train.iterations", tr.iterations);
  t.put("train.seed", tr.seed);
  t.put("train.target_loss_weight", num(tr.target_loss_weight));
  t.put("train.early_stop", tr.early_stop ? "true" : "false");
  t.put("train.early_stop_window", tr.early_stop_window);
  t.put("train.early_stop_mean_tol", num(tr.early_stop_mean_tol));
  t.put("train.early_stop_var_tol", num(tr.early_stop_var_tol));
  t.put("train.checkpoint_interval", tr.checkpoint_interval);
  if (c.grid.enabled()) {
    const auto& g = c.grid;
    t.put("grid.lower", detail::join(g.lower));
    t.put("grid.upper", detail::join(g.upper));
    t.put("grid.nodes", detail::join(g.nodes));
    if (!g.periodic.empty()) t.put("grid.periodic", detail::join(g.periodic));
    t.put("grid.control_samples", g.control_samples);
    if (g.dt) t.put("grid.dt", num(*g.dt));
    t.put("grid.tol", num(g.tol));
    t.put("grid.max_sweeps", g.max_sweeps);
  }
  const auto& r = c.rollout;
  if (r.dt) t.put("rollout.dt", num(*r.dt));
  t.put("rollout.t_max", num(r.t_max));
  t.put("rollout.exit_margin", num(r.exit_margin));
  t.put("rollout.stop_at_target", r.stop_at_target ? "true" : "false");
  t.put("rollout.n", r.n);
  t.put("rollout.initial", r.initial);
  t.put("rollout.annulus_inner", num(r.annulus_inner));
  t.put("rollout.annulus_outer", num(r.annulus_outer));
  t.put("evaluate.n_test", c.evaluate.n_test);
  t.put("evaluate.sign_lattice", c.evaluate.sign_lattice);
  t.put("evaluate.sign_margin", num(c.evaluate.sign_margin));
  const auto& e = c.export_slice;
  t.put("export.dims", detail::join(e.dims));
  t.put("export.lower", detail::join(e.lower));
  t.put("export.upper", detail::join(e.upper));
  t.put("export.resolution", detail::join(e.resolution));
  if (!e.base.empty()) t.put("export.base", detail::join(e.base));
  if (!c.output_dir.empty()) t.put("output.dir", c.output_dir);
  return t;
}

inline std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  boost::property_tree::ini_parser::write_ini(out, to_ptree(c));
  return out.str();
}

/// Resolved problem instance; parameter errors surface as ConfigError.
inline std::shared_ptr<const ocp::Problem> make_problem(const RunConfig& c) {
  return ocp::make_problem(c.problem, c.problem_params);
}

}  // namespace slac::io

#endif  // SLAC_IO_RUN_CONFIG_HPP
