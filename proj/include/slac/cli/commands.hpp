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

#ifndef SLAC_CLI_COMMANDS_HPP
#define SLAC_CLI_COMMANDS_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slac/ac/state_io.hpp"
#include "slac/ac/trainer.hpp"
#include "slac/eval/metrics.hpp"
#include "slac/grid/grid_value.hpp"
#include "slac/io/export.hpp"
#include "slac/io/run_config.hpp"
#include "slac/nn/checkpoint.hpp"
#include "slac/rollout/rollout.hpp"

namespace slac::cli {

namespace fs = std::filesystem;

enum ExitCode : int { kOk = 0, kConfigError = 2, kRuntimeError = 3 };

inline constexpr const char* kOutputRootEnv = "SLAC_OUTPUT_ROOT";

struct Options {
  std::string config;
  std::string out;
  std::string run;
  std::string grid;
  std::string artifact = "value_slice";
  std::string slice;
  std::string base;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::optional<double> dt_override;
  std::optional<Index> n;
  bool resume = false;
};

/// Fixed file names inside a run directory.
namespace files {
inline constexpr const char* kConfig = "config.ini";
inline constexpr const char* kState = "state.bin";
inline constexpr const char* kFailureState = "failure_state.bin";
inline constexpr const char* kActor = "actor.net";
inline constexpr const char* kCritic = "critic.net";
inline constexpr const char* kMetrics = "metrics.jsonl";
inline constexpr const char* kTiming = "timing.jsonl";
inline constexpr const char* kTrainSummary = "train_summary.json";
inline constexpr const char* kGrid = "grid.bin";
inline constexpr const char* kGridReport = "grid_report.json";
inline constexpr const char* kGridTiming = "grid_timing.json";
inline constexpr const char* kEvaluation = "evaluation.json";
inline constexpr const char* kRolloutSummary = "rollout_summary.json";
inline constexpr const char* kRolloutDir = "rollouts";
inline constexpr const char* kExportDir = "exports";
}  // namespace files

inline fs::path output_root() {
  const char* env = std::getenv(kOutputRootEnv);
  return env && *env ? fs::path(env) : fs::path("runs");
}

/// --out, else [output] dir (relative to the output root), else root/<problem>.
inline fs::path resolve_output_dir(const io::RunConfig& cfg, const Options& opt) {
  if (!opt.out.empty()) return opt.out;
  if (!cfg.output_dir.empty()) {
    const fs::path p(cfg.output_dir);
    return p.is_absolute() ? p : output_root() / p;
  }
  return output_root() / cfg.problem;
}

inline io::RunConfig load_config_with_overrides(const Options& opt) {
  if (opt.config.empty()) throw ConfigError("--config: a config file is required");
  io::RunConfig cfg = io::load_config(opt.config);
  if (opt.seed) cfg.train.seed = *opt.seed;
  if (opt.dt_override) {
    if (!(*opt.dt_override > 0.0)) throw ConfigError("--dt-override must be positive");
    cfg.rollout.dt = *opt.dt_override;
  }
  if (opt.n) cfg.rollout.n = *opt.n;
  io::validate(cfg);
  return cfg;
}

/// Run directory plus its config snapshot, with CLI overrides applied.
struct RunContext {
  fs::path dir;
  fs::path out;
  io::RunConfig cfg;
  std::shared_ptr<const ocp::Problem> problem;
};

inline RunContext open_run(const Options& opt) {
  if (opt.run.empty()) throw ConfigError("--run: a run directory is required");
  RunContext ctx;
  ctx.dir = opt.run;
  const fs::path cfg_path = ctx.dir / files::kConfig;
  if (!fs::exists(cfg_path)) throw Error(cfg_path.string() + ": missing run config snapshot");
  ctx.cfg = io::load_config(cfg_path);
  if (opt.seed) ctx.cfg.train.seed = *opt.seed;
  if (opt.dt_override) {
    if (!(*opt.dt_override > 0.0)) throw ConfigError("--dt-override must be positive");
    ctx.cfg.rollout.dt = *opt.dt_override;
  }
  if (opt.n) {
    if (*opt.n < 0) throw ConfigError("--n must be >= 0");
    ctx.cfg.rollout.n = *opt.n;
    ctx.cfg.evaluate.n_test = std::max<Index>(*opt.n, 1);
  }
  ctx.out = opt.out.empty() ? ctx.dir : fs::path(opt.out);
  fs::create_directories(ctx.out);
  ctx.problem = io::make_problem(ctx.cfg);
  return ctx;
}

inline nn::Network load_artifact_network(const fs::path& path) {
  if (!fs::exists(path)) throw Error(path.string() + ": missing trained weights");
  return nn::load_network(path);
}

/// Deterministic stream for a command; `salt` separates commands sharing a seed.
inline Rng command_rng(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  std::uint32_t raw[2];
  seq.generate(raw, raw + 2);
  return Rng((static_cast<std::uint64_t>(raw[0]) << 32) | raw[1]);
}

inline void write_text(const fs::path& path, const std::string& text) {
  io::write_file_atomic(path, text);
}

// ---------------------------------------------------------------------------

inline void cmd_train(const Options& opt, std::ostream& out) {
  io::RunConfig cfg;
  fs::path dir;
  if (opt.resume && opt.config.empty()) {
    if (opt.out.empty()) throw ConfigError("--out: resuming needs the run directory");
    dir = opt.out;
    Options o = opt;
    o.config = (dir / files::kConfig).string();
    cfg = load_config_with_overrides(o);
  } else {
    cfg = load_config_with_overrides(opt);
    dir = resolve_output_dir(cfg, opt);
  }
  const auto problem = io::make_problem(cfg);
  fs::create_directories(dir);
  write_text(dir / files::kConfig, io::serialize_config(cfg));

  ac::TrainState state;
  if (opt.resume) {
    const fs::path path = dir / files::kState;
    if (!fs::exists(path)) throw Error(path.string() + ": no checkpoint to resume from");
    state = ac::load_state(path);
    if (state.actor.layers() != ac::actor_layers(*problem, cfg.actor) ||
        state.critic.layers() != ac::critic_layers(*problem, cfg.critic)) {
      throw ConfigError("actor/critic: topology differs from the checkpoint");
    }
  } else {
    state = ac::initial_state(*problem, cfg.actor, cfg.critic, cfg.train);
  }

  // The logs are rebuilt from the checkpoint history so a resumed run matches
  // an uninterrupted one line for line.
  std::vector<io::json> metrics, timing;
  for (const auto& r : state.history) {
    metrics.push_back(io::metrics_record(r));
    timing.push_back(io::timing_record(r));
  }
  write_text(dir / files::kMetrics, io::jsonl(metrics));
  write_text(dir / files::kTiming, io::jsonl(timing));
  io::JsonlWriter metrics_log(dir / files::kMetrics, true);
  io::JsonlWriter timing_log(dir / files::kTiming, true);

  const Index report_every = std::max<Index>(1, cfg.train.iterations / 20);
  ac::TrainCallbacks cb;
  cb.on_iteration = [&](const ac::TrainState& s, const ac::IterationRecord& r) {
    metrics_log.write(io::metrics_record(r));
    timing_log.write(io::timing_record(r));
    if (s.iteration % report_every == 0 || s.iteration == cfg.train.iterations) {
      out << "iter " << s.iteration << "/" << cfg.train.iterations
          << " actor_loss=" << r.actor_loss << " critic_loss=" << r.critic_loss
          << " residual_mean=" << r.residual.mean_abs << " t=" << r.wall_time << "s" << std::endl;
    }
  };
  cb.on_checkpoint = [&](const ac::TrainState& s) { ac::save_state(dir / files::kState, s); };
  cb.on_failure = [&](const ac::TrainState& s, const std::exception&) {
    ac::save_state(dir / files::kFailureState, s);
  };
  const ac::TrainResult result = ac::train(*problem, cfg.train, state, cb);

  ac::save_state(dir / files::kState, state);
  nn::save_network(dir / files::kActor, state.actor_avg);
  nn::save_network(dir / files::kCritic, state.critic_avg);
  io::json summary{{"problem", cfg.problem},
                   {"iterations", state.iteration},
                   {"iterations_run", result.iterations_run},
                   {"stop_reason", result.reason == ac::StopReason::Converged ? "converged"
                                                                             : "iteration_limit"}};
  if (!state.history.empty()) summary["final"] = io::metrics_record(state.history.back());
  io::write_json(dir / files::kTrainSummary, summary);
  out << "run directory: " << dir.string() << "\n";
}

// ---------------------------------------------------------------------------

inline grid::GridSpec grid_spec(const io::RunConfig& cfg) {
  const auto& g = cfg.grid;
  grid::GridSpec s;
  s.lower = Eigen::Map<const Vector>(g.lower.data(), static_cast<Index>(g.lower.size()));
  s.upper = Eigen::Map<const Vector>(g.upper.data(), static_cast<Index>(g.upper.size()));
  s.nodes = g.nodes;
  s.periodic = g.periodic.empty() ? std::vector<bool>(g.nodes.size(), false) : g.periodic;
  return s;
}

inline void cmd_grid_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  const io::RunConfig cfg = load_config_with_overrides(opt);
  if (!cfg.grid.enabled()) throw ConfigError("grid.nodes: config has no grid section");
  const auto problem = io::make_problem(cfg);
  const fs::path dir = resolve_output_dir(cfg, opt);
  fs::create_directories(dir);
  const grid::GridSpec spec = grid_spec(cfg);
  const Matrix controls = grid::control_lattice(problem->control_lower(), problem->control_upper(),
                                                cfg.grid.control_samples);
  sl::SlConfig sl_cfg = cfg.train.sl;
  sl_cfg.dt = cfg.grid_dt();
  grid::GridSolveOptions gopt;
  gopt.tol = cfg.grid.tol;
  gopt.max_sweeps = cfg.grid.max_sweeps;
  gopt.workers = opt.workers;
  const grid::GridSolveResult res = grid::grid_value_iteration(*problem, spec, controls, sl_cfg, gopt);
  grid::save_grid(dir / files::kGrid, res.value);
  const auto& r = res.report;
  io::write_json(dir / files::kGridReport,
                 {{"problem", cfg.problem},
                  {"nodes", spec.node_count()},
                  {"controls", controls.cols()},
                  {"dt", sl_cfg.dt},
                  {"mu", sl_cfg.mu},
                  {"sweeps", r.sweeps},
                  {"final_change", r.final_change},
                  {"converged", r.converged},
                  {"monotone", r.monotone},
                  {"in_range", r.in_range},
                  {"pinned_nodes", r.pinned_nodes}});
  io::write_json(dir / files::kGridTiming, {{"seconds", r.seconds}});
  if (!r.converged) {
    err << "warning: grid iteration stopped after " << r.sweeps << " sweeps with change "
        << r.final_change << " > tol " << cfg.grid.tol << "\n";
  }
  out << "grid: " << spec.node_count() << " nodes, " << r.sweeps << " sweeps, final change "
      << r.final_change << ", " << r.seconds << " s -> " << (dir / files::kGrid).string() << "\n";
}

// ---------------------------------------------------------------------------

inline void cmd_evaluate(const Options& opt, std::ostream& out, std::ostream& err) {
  const RunContext ctx = open_run(opt);
  const auto& p = *ctx.problem;
  const nn::Network actor = load_artifact_network(ctx.dir / files::kActor);
  const nn::Network critic_net = load_artifact_network(ctx.dir / files::kCritic);
  const sl::NetworkCritic critic(critic_net, p);
  const sl::BatchPolicy policy = sl::network_policy(actor, p);
  sl::SlConfig sl_cfg = ctx.cfg.train.sl;
  if (opt.dt_override) sl_cfg.dt = *opt.dt_override;

  Rng rng = command_rng(ctx.cfg.train.seed, 0xE7A1u);
  const Matrix states = p.sample_domain(rng, ctx.cfg.evaluate.n_test);
  const sl::ResidualStats residual =
      sl::summarize_residuals(sl::bellman_residual(p, critic, policy, states, sl_cfg));

  io::json report{{"problem", ctx.cfg.problem},
                  {"n_test", states.cols()},
                  {"dt", sl_cfg.dt},
                  {"mu", sl_cfg.mu},
                  {"residual_mean_abs", residual.mean_abs},
                  {"residual_max_abs", residual.max_abs},
                  {"residual_rms", residual.rms}};
  fs::path grid_file = opt.grid;
  if (grid_file.empty() && p.name() != "double_integrator" && fs::exists(ctx.dir / files::kGrid)) {
    grid_file = ctx.dir / files::kGrid;
  }
  if (!grid_file.empty()) {
    if (!fs::exists(grid_file)) throw Error(grid_file.string() + ": missing grid file");
    const grid::GridValueFunction gvf = grid::load_grid(grid_file);
    require_size(gvf.spec().dim(), p.state_dim(), "grid dimension");
    const Matrix inside = eval::inside_grid(gvf, states);
    report["reference"] = "grid";
    report["reference_points"] = inside.cols();
    if (inside.cols() > 0) report["mse"] = eval::value_mse(critic, gvf, inside);
  } else if (p.name() == "double_integrator") {
    const auto ref = eval::double_integrator_reference_critic(sl_cfg.mu);
    report["reference"] = "analytic";
    report["reference_points"] = states.cols();
    report["mse"] = eval::value_mse(critic, ref, states);
  } else {
    report["reference"] = "none";
    err << "warning: no reference value available for " << p.name()
        << "; reporting Bellman residuals only\n";
  }
  if (p.name() == "double_integrator") {
    const auto s = eval::double_integrator_sign_agreement(policy, p.domain_radius(),
                                                          ctx.cfg.evaluate.sign_lattice,
                                                          ctx.cfg.evaluate.sign_margin);
    report["sign_agreement"] = s.fraction();
    report["sign_points"] = s.total;
  }
  io::write_json(ctx.out / files::kEvaluation, report);
  out << report.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

inline Matrix rollout_initial_states(const io::RunConfig& cfg, const ocp::Problem& p) {
  Rng rng = command_rng(cfg.train.seed, 0x5011u);
  const Index n = cfg.rollout.n;
  if (n == 0) return Matrix(p.state_dim(), 0);
  if (cfg.rollout.initial == "annulus") {
    return p.sample_annulus(rng, n, cfg.rollout.annulus_inner, cfg.rollout.annulus_outer);
  }
  return p.sample_domain(rng, n);
}

inline void cmd_rollout(const Options& opt, std::ostream& out) {
  const RunContext ctx = open_run(opt);
  const auto& p = *ctx.problem;
  const nn::Network actor = load_artifact_network(ctx.dir / files::kActor);
  const sl::BatchPolicy policy = sl::network_policy(actor, p);
  const Matrix x0 = rollout_initial_states(ctx.cfg, p);
  const rollout::EnsembleResult res =
      rollout::ensemble(p, policy, x0, ctx.cfg.simulate_options(), opt.workers);

  const fs::path tdir = ctx.out / files::kRolloutDir;
  if (fs::exists(tdir)) {
    for (const auto& e : fs::directory_iterator(tdir)) {
      if (e.path().extension() == ".csv") fs::remove(e.path());
    }
  }
  fs::create_directories(tdir);
  const io::StateLabels labels = io::labels_for(p);
  for (std::size_t i = 0; i < res.trajectories.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "traj_%04zu.csv", i);
    write_text(tdir / name, io::trajectory_csv(res.trajectories[i], labels));
  }
  io::json summary = io::summary_json(res.summary);
  summary["problem"] = ctx.cfg.problem;
  summary["dt"] = ctx.cfg.rollout_dt();
  summary["t_max"] = ctx.cfg.rollout.t_max;
  io::write_json(ctx.out / files::kRolloutSummary, summary);
  out << "rollouts: " << res.summary.count << ", success fraction " << res.summary.success_fraction;
  if (!res.summary.groups.empty()) out << ", settled fraction " << res.summary.settled_fraction;
  out << "\n";
}

// ---------------------------------------------------------------------------

/// "d:lower:upper:count,d:lower:upper:count" overrides the configured slice.
inline io::ExportParams parse_slice(io::ExportParams e, const std::string& slice,
                                    const std::string& base) {
  auto bad = [](const std::string& what) { return ConfigError("--slice: " + what); };
  if (!slice.empty()) {
    std::stringstream ss(slice);
    std::string axis;
    std::vector<std::vector<std::string>> axes;
    while (std::getline(ss, axis, ',')) {
      std::stringstream as(axis);
      std::string part;
      std::vector<std::string> parts;
      while (std::getline(as, part, ':')) parts.push_back(part);
      if (parts.size() != 4) throw bad("expected d:lower:upper:count per axis, got '" + axis + "'");
      axes.push_back(parts);
    }
    if (axes.size() != 2) throw bad("exactly two axes are required");
    for (std::size_t k = 0; k < 2; ++k) {
      try {
        e.dims[k] = std::stoll(axes[k][0]);
        e.lower[k] = std::stod(axes[k][1]);
        e.upper[k] = std::stod(axes[k][2]);
        e.resolution[k] = std::stoll(axes[k][3]);
      } catch (const std::exception&) {
        throw bad("malformed number in '" + slice + "'");
      }
    }
  }
  if (!base.empty()) {
    e.base.clear();
    std::stringstream ss(base);
    std::string v;
    while (std::getline(ss, v, ',')) {
      try {
        e.base.push_back(std::stod(v));
      } catch (const std::exception&) {
        throw ConfigError("--base: malformed number '" + v + "'");
      }
    }
  }
  if (e.dims[0] == e.dims[1] || e.dims[0] < 0 || e.dims[1] < 0) {
    throw bad("dims must be two distinct nonnegative indices");
  }
  if (e.resolution[0] < 1 || e.resolution[1] < 1) throw bad("resolution must be positive");
  return e;
}

inline void cmd_export(const Options& opt, std::ostream& out) {
  const RunContext ctx = open_run(opt);
  const auto& p = *ctx.problem;
  const io::ExportParams e = parse_slice(ctx.cfg.export_slice, opt.slice, opt.base);
  Vector base = Vector::Zero(p.state_dim());
  if (!e.base.empty()) {
    if (static_cast<Index>(e.base.size()) != p.state_dim()) {
      throw ConfigError("export.base: needs one entry per state dimension");
    }
    base = Eigen::Map<const Vector>(e.base.data(), p.state_dim());
  }
  if (e.dims[0] >= p.state_dim() || e.dims[1] >= p.state_dim()) {
    throw ConfigError("export.dims: index beyond the state dimension");
  }
  const io::StateLabels labels = io::labels_for(p);
  std::map<std::string, std::string> units;
  for (std::size_t i = 0; i < labels.state_names.size(); ++i) {
    units[labels.state_names[i]] = labels.state_units[i];
  }
  for (std::size_t i = 0; i < labels.control_names.size(); ++i) {
    units[labels.control_names[i]] = labels.control_units[i];
  }
  units["value"] = "1";
  units["cost"] = "1";
  units["residual"] = "1";
  const fs::path edir = ctx.out / files::kExportDir;
  fs::create_directories(edir);

  Raster raster;
  std::string name = opt.artifact;
  if (opt.artifact == "value_slice") {
    if (!opt.grid.empty()) {
      if (!fs::exists(opt.grid)) throw Error(opt.grid + ": missing grid file");
      const grid::GridValueFunction gvf = grid::load_grid(opt.grid);
      raster = grid::sample_grid_slice(gvf, base, e.dims[0], e.dims[1], e.lower[0], e.upper[0],
                                       e.lower[1], e.upper[1], e.resolution[0], e.resolution[1],
                                       gvf.sl_config().mu, labels.state_names);
      name = "value_slice_grid";
    } else {
      const nn::Network critic_net = load_artifact_network(ctx.dir / files::kCritic);
      const sl::NetworkCritic critic(critic_net, p);
      raster = grid::sample_grid_slice(critic, base, e.dims[0], e.dims[1], e.lower[0], e.upper[0],
                                       e.lower[1], e.upper[1], e.resolution[0], e.resolution[1],
                                       ctx.cfg.train.sl.mu, labels.state_names);
    }
    units["cost"] = labels.time_unit;
  } else if (opt.artifact == "switching_raster") {
    const nn::Network actor = load_artifact_network(ctx.dir / files::kActor);
    raster = rollout::switching_surface_raster(
        sl::network_policy(actor, p), p.control_dim(), base, e.dims[0], e.dims[1], e.lower[0],
        e.upper[0], e.lower[1], e.upper[1], e.resolution[0], e.resolution[1], labels.state_names);
    if (p.control_dim() == 1) raster.channels[0] = labels.control_names[0];
    if (p.name() == "double_integrator") {
      std::ostringstream curve;
      curve << "# slac curve v1: switching curve x = -y|y|/2\n# unit: x=m y=m/s\nx,y\n";
      const Index n = 401;
      for (Index i = 0; i < n; ++i) {
        const double y = -p.domain_radius() + 2.0 * p.domain_radius() * static_cast<double>(i) /
                                                  static_cast<double>(n - 1);
        curve << io::format_double(-0.5 * y * std::abs(y)) << "," << io::format_double(y) << "\n";
      }
      write_text(edir / "switching_curve.csv", curve.str());
    }
  } else if (opt.artifact == "residual_map") {
    const nn::Network actor = load_artifact_network(ctx.dir / files::kActor);
    const nn::Network critic_net = load_artifact_network(ctx.dir / files::kCritic);
    const sl::NetworkCritic critic(critic_net, p);
    raster = grid::sample_grid_slice(critic, base, e.dims[0], e.dims[1], e.lower[0], e.upper[0],
                                     e.lower[1], e.upper[1], e.resolution[0], e.resolution[1],
                                     ctx.cfg.train.sl.mu, labels.state_names);
    Matrix states(p.state_dim(), e.resolution[0] * e.resolution[1]);
    for (Index i = 0; i < e.resolution[0]; ++i) {
      for (Index j = 0; j < e.resolution[1]; ++j) {
        states.col(i * e.resolution[1] + j) = raster.state_at(i, j);
      }
    }
    sl::SlConfig sl_cfg = ctx.cfg.train.sl;
    if (opt.dt_override) sl_cfg.dt = *opt.dt_override;
    const Vector r =
        sl::bellman_residual(p, critic, sl::network_policy(actor, p), states, sl_cfg);
    raster.channels = {"residual"};
    Matrix m(e.resolution[0], e.resolution[1]);
    for (Index i = 0; i < e.resolution[0]; ++i) {
      for (Index j = 0; j < e.resolution[1]; ++j) m(i, j) = r[i * e.resolution[1] + j];
    }
    raster.data = {m};
  } else {
    throw ConfigError("--artifact: expected value_slice, switching_raster or residual_map, got '" +
                      opt.artifact + "'");
  }
  const fs::path file = edir / (name + ".csv");
  write_text(file, io::raster_csv(raster, units, name));
  out << "exported " << raster.x_axis.count * raster.y_axis.count << " rows -> " << file.string()
      << "\n";
}

// ---------------------------------------------------------------------------

/// Runs one subcommand and maps failures onto exit codes.
inline int run(const std::string& command, const Options& opt, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    if (opt.workers < 1) throw ConfigError("--workers must be >= 1");
    if (command == "train") {
      cmd_train(opt, out);
    } else if (command == "grid-solve") {
      cmd_grid_solve(opt, out, err);
    } else if (command == "evaluate") {
      cmd_evaluate(opt, out, err);
    } else if (command == "rollout") {
      cmd_rollout(opt, out);
    } else if (command == "export") {
      cmd_export(opt, out);
    } else {
      throw ConfigError("unknown command '" + command + "'");
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace slac::cli

#endif  // SLAC_CLI_COMMANDS_HPP
