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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. `--only 1,4` restricts the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <numbers>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slac/cli/commands.hpp"
#include "slac/slac.hpp"
#include "support/oracles.hpp"
#include "support/property.hpp"

namespace {

using namespace slac;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path source_dir() { return fs::path(SLAC_SOURCE_DIR); }

fs::path work_dir() {
  const char* env = std::getenv("SLAC_ACCEPTANCE_DIR");
  return env && *env ? fs::path(env) : fs::current_path() / "acceptance_runs";
}

/// Runs a CLI command in-process; progress goes to the log, errors to stderr.
void cli_or_throw(const std::string& cmd, const cli::Options& opt, std::ostream& log) {
  std::ostringstream err;
  const int code = cli::run(cmd, opt, log, err);
  if (code != 0) throw Error(cmd + " exited with " + std::to_string(code) + ": " + err.str());
}

io::json read_json(const fs::path& p) { return io::json::parse(slurp(p)); }

// ---------------------------------------------------------------------------
// 1. Gradient suite.

struct Topology {
  std::string problem;
  ac::NetworkSpec actor;
  ac::NetworkSpec critic;
  sl::SlConfig sl;
};

std::vector<Topology> preset_topologies() {
  std::vector<Topology> out;
  for (const char* name : {"double_integrator", "dubins", "trace"}) {
    const auto cfg = io::load_config(source_dir() / "configs" / (std::string(name) + ".cfg"));
    out.push_back({name, cfg.actor, cfg.critic, cfg.train.sl});
  }
  return out;
}

/// Relative error of an analytic gradient against central differences with
/// step h on the given coordinates: |g - g_fd| / max(|g|, |g_fd|).
double fd_error(const std::function<double(const Vector&)>& f, const Vector& x, const Vector& grad,
                const std::vector<Index>& coords, double h = 1e-6) {
  Vector analytic(static_cast<Index>(coords.size())), numeric(static_cast<Index>(coords.size()));
  Vector xp = x, xm = x;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Index i = coords[k];
    xp[i] += h;
    xm[i] -= h;
    numeric[static_cast<Index>(k)] = (f(xp) - f(xm)) / (2 * h);
    analytic[static_cast<Index>(k)] = grad[i];
    xp[i] = xm[i] = x[i];
  }
  const double scale = std::max(analytic.norm(), numeric.norm());
  return scale == 0.0 ? 0.0 : (analytic - numeric).norm() / scale;
}

/// Worst error for one gradient kind. Draws over tolerance are re-checked at
/// h = 1e-4 to separate gradient defects from rounding in the quotient.
struct FdTally {
  double worst = 0.0;
  int over = 0;
  double worst_recheck = 0.0;

  void add(const std::function<double(const Vector&)>& f, const Vector& x, const Vector& grad,
           const std::vector<Index>& coords) {
    const double e = fd_error(f, x, grad, coords);
    worst = std::max(worst, e);
    if (e > 1e-5) {
      ++over;
      worst_recheck = std::max(worst_recheck, fd_error(f, x, grad, coords, 1e-4));
    }
  }
  bool pass() const { return worst <= 1e-5; }
  std::string describe(const char* name) const {
    std::string s = fmt("%s %.1e", name, worst);
    if (over > 0) s += fmt(" (%d over; at h = 1e-4 worst %.1e)", over, worst_recheck);
    return s;
  }
};

std::vector<Index> all_coords(Index n) {
  std::vector<Index> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

std::vector<Index> sample_coords(testing::Gen& g, Index n, Index count) {
  std::vector<Index> out;
  for (Index k = 0; k < count; ++k) out.push_back(g.integer(0, n - 1));
  return out;
}

Outcome criterion_gradients() {
  const auto t0 = Clock::now();
  constexpr int kInstances = 100;
  bool pass = true;
  std::string detail;
  for (const auto& topo : preset_topologies()) {
    const auto p = ocp::make_problem(topo.problem);
    const std::vector<std::pair<std::vector<nn::LayerSpec>, std::optional<nn::OutputBounds>>> nets{
        {ac::actor_layers(*p, topo.actor), ac::control_bounds(*p)},
        {ac::critic_layers(*p, topo.critic), std::nullopt}};
    FdTally weight, input, control;
    testing::for_all(kInstances, 1000, [&](testing::Gen& g, int k) {
      Rng rng(static_cast<std::uint64_t>(9000 + k));
      const Vector s = p->sample_domain(rng, 1).col(0);
      const Vector x = p->features(s);
      for (const auto& [layers, bounds] : nets) {
        const nn::Network net = testing::random_network(layers, 7000 + k, bounds);
        // Scalar functional c . N(x; w).
        const Vector c = g.normal_vector(net.output_dim());
        const auto by_weights = [&](const Vector& w) {
          nn::Network moved = net;
          moved.set_weights(w);
          return c.dot(moved.forward(x));
        };
        const auto by_input = [&](const Vector& z) { return c.dot(net.forward(z)); };
        weight.add(by_weights, net.weights(), net.weight_gradient(x, c), sample_coords(g, net.size(), 32));
        input.add(by_input, x, net.input_gradient(x, c), all_coords(x.size()));
      }
      const nn::Network critic_net = testing::random_network(nets[1].first, 8000 + k);
      const sl::NetworkCritic critic(critic_net, *p);
      const Vector u = g.uniform_vector(p->control_lower(), p->control_upper());
      const auto by_control = [&](const Vector& v) { return sl::sl_operator(*p, critic, s, v, topo.sl); };
      control.add(by_control, u, sl::sl_operator_control_gradient(*p, critic, s, u, topo.sl), all_coords(u.size()));
    });
    pass &= weight.pass() && input.pass() && control.pass();
    detail += topo.problem + ": " + weight.describe("weight") + ", " + input.describe("input") + ", " +
              control.describe("control") + "; ";
  }
  const double elapsed = seconds_since(t0);
  pass &= elapsed < 60.0;
  return {pass, detail + fmt("max rel err, %d draws per network per preset, h = 1e-6, tol 1e-5; %.1f s",
                             kInstances, elapsed)};
}

// ---------------------------------------------------------------------------
// 2. Grid versus analytic oracle.

grid::GridSolveResult di_grid(Index nodes, double dt, double half, double tol = 1e-7) {
  const auto p = ocp::make_problem("double_integrator");
  grid::GridSpec spec;
  spec.lower = Vector::Constant(2, -half);
  spec.upper = Vector::Constant(2, half);
  spec.nodes = {nodes, nodes};
  spec.periodic = {false, false};
  grid::GridSolveOptions opt;
  opt.tol = tol;
  opt.max_sweeps = 100000;
  return grid::grid_value_iteration(*p, spec, grid::control_lattice(Vector::Constant(1, -1), Vector::Ones(1), 3),
                                    sl::SlConfig{dt, 1.0}, opt);
}

Outcome criterion_grid() {
  const auto t0 = Clock::now();
  // Oracle check against an independent two-arc search on the lattice.
  std::vector<std::pair<double, double>> lattice;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) lattice.emplace_back(-2.0 + 4.0 * i / 39.0, -2.0 + 4.0 * j / 39.0);
  }
  double oracle_err = 0.0;
  for (std::size_t k = 0; k < lattice.size(); k += 16) {
    const auto [x, y] = lattice[k];
    oracle_err = std::max(oracle_err, std::abs(grid::double_integrator_min_time(x, y) -
                                               testing::brute_force_min_time(x, y)));
  }
  auto max_error = [&](const grid::GridValueFunction& v) {
    double e = 0.0;
    for (const auto& [x, y] : lattice) {
      const Vector s = (Vector(2) << x, y).finished();
      e = std::max(e, std::abs(v.interpolate(s) - eval::double_integrator_reference(s)));
    }
    return e;
  };
  const auto coarse = di_grid(201, 0.05, 5.0);
  const auto fine = di_grid(401, 0.025, 5.0);
  const double e1 = max_error(coarse.value), e2 = max_error(fine.value);
  const double elapsed = seconds_since(t0);
  const bool pass = oracle_err < 1e-6 && coarse.report.converged && fine.report.converged && e1 <= 0.05 &&
                    e2 < e1 && elapsed < 120.0;
  return {pass, fmt("max abs err 201^2/dt=0.05: %.4f, 401^2/dt=0.025: %.4f; oracle vs search %.1e; %.1f s",
                    e1, e2, oracle_err, elapsed)};
}

// ---------------------------------------------------------------------------
// 3. Contraction suite.

/// Largest change ratio over the tail of a sweep history (changes above 1e-10).
double tail_ratio(const std::vector<double>& changes) {
  std::vector<double> live;
  for (double c : changes) {
    if (c > 1e-10) live.push_back(c);
  }
  if (live.size() < 4) return 0.0;
  double worst = 0.0;
  for (std::size_t k = live.size() / 2 + 1; k < live.size(); ++k) {
    worst = std::max(worst, live[k] / live[k - 1]);
  }
  return worst;
}

Outcome criterion_contraction() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  {
    const auto r = di_grid(101, 0.05, 3.0, 1e-9);
    const double ratio = tail_ratio(r.report.changes);
    const double bound = std::exp(-0.05) + 0.05;
    ok &= r.report.monotone && r.report.in_range && ratio <= bound;
    detail += fmt("DI grid monotone=%d ratio %.4f <= %.4f; ", r.report.monotone, ratio, bound);
  }
  {
    const auto p = ocp::make_problem("dubins");
    grid::GridSpec spec;
    spec.lower = (Vector(3) << -1.5, -1.5, -std::numbers::pi).finished();
    spec.upper = (Vector(3) << 1.5, 1.5, std::numbers::pi).finished();
    spec.nodes = {31, 31, 24};
    spec.periodic = {false, false, true};
    grid::GridSolveOptions opt;
    opt.tol = 1e-8;
    opt.max_sweeps = 20000;
    const sl::SlConfig cfg{0.1, 0.2};
    const auto r = grid::grid_value_iteration(
        *p, spec, grid::control_lattice(p->control_lower(), p->control_upper(), 7), cfg, opt);
    const double ratio = tail_ratio(r.report.changes);
    const double bound = cfg.max_discount() + 0.05;
    ok &= r.report.monotone && r.report.in_range && ratio <= bound;
    detail += fmt("Dubins grid monotone=%d ratio %.4f <= %.4f; ", r.report.monotone, ratio, bound);
  }
  // Operator properties on random function pairs V1 <= V2.
  Index violations = 0, checks = 0;
  for (const char* name : {"double_integrator", "dubins", "trace"}) {
    const auto p = ocp::make_problem(name);
    testing::for_all(300, 31, [&](testing::Gen& g, int) {
      const sl::SlConfig cfg{g.uniform(0.01, 0.5), g.uniform(0.05, 1.0)};
      const Vector a = g.normal_vector(p->state_dim()), b = g.normal_vector(p->state_dim());
      const double c = g.normal(), lift = g.uniform(0.0, 0.5);
      const sl::FunctionCritic v1([=](const Vector& x) { return sl::sigmoid(a.dot(x) + c); });
      const sl::FunctionCritic v2([=](const Vector& x) {
        return std::min(1.0, sl::sigmoid(a.dot(x) + c) + lift * sl::sigmoid(b.dot(x)));
      });
      Rng rng(static_cast<std::uint64_t>(g.integer(0, 1 << 30)));
      const Matrix xs = p->sample_domain(rng, 4);
      Matrix us(p->control_dim(), 4);
      for (Index j = 0; j < 4; ++j) us.col(j) = g.uniform_vector(p->control_lower(), p->control_upper());
      const auto e1 = sl::sl_operator_batch(*p, v1, xs, us, cfg);
      const auto e2 = sl::sl_operator_batch(*p, v2, xs, us, cfg);
      for (Index j = 0; j < 4; ++j) {
        ++checks;
        const bool range = e1.values[j] >= 0.0 && e1.values[j] <= 1.0;
        const bool mono = e1.values[j] <= e2.values[j] + 1e-15;
        const double gap = std::abs(e1.successor_values[j] - e2.successor_values[j]);
        const bool contract = std::abs(e1.values[j] - e2.values[j]) <= cfg.max_discount() * gap + 1e-15;
        violations += !(range && mono && contract);
      }
    });
  }
  ok &= violations == 0;
  const double elapsed = seconds_since(t0);
  ok &= elapsed < 60.0;
  detail += fmt("operator checks %ld, violations %ld; %.1f s", static_cast<long>(checks),
                static_cast<long>(violations), elapsed);
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 4-6. Preset training runs through the CLI.

cli::Options train_options(const std::string& preset, const fs::path& dir) {
  cli::Options o;
  o.config = (source_dir() / "configs" / (preset + ".cfg")).string();
  o.out = dir.string();
  return o;
}

cli::Options run_options(const fs::path& dir) {
  cli::Options o;
  o.run = dir.string();
  return o;
}

Outcome criterion_double_integrator(std::ostream& log) {
  const fs::path dir = work_dir() / "double_integrator";
  fs::remove_all(dir);
  const auto t0 = Clock::now();
  cli_or_throw("train", train_options("double_integrator", dir), log);
  const double train_s = seconds_since(t0);
  cli_or_throw("evaluate", run_options(dir), log);
  const auto e = read_json(dir / "evaluation.json");
  const double mse = e["mse"], sign = e["sign_agreement"];
  const double elapsed = seconds_since(t0);
  const bool pass = e["reference"] == "analytic" && e["n_test"] == 3200 && mse <= 5e-2 && sign >= 0.9 &&
                    elapsed <= 900.0;
  return {pass, fmt("critic MSE %.2e (<= 5e-2), sign agreement %.3f (>= 0.90) on %d points; train %.0f s, "
                    "total %.0f s",
                    mse, sign, e["sign_points"].get<int>(), train_s, elapsed)};
}

/// V~ just outside minus just inside the target disk, heading away from it.
double dubins_jump(const sl::Critic& v) {
  double jump = std::numeric_limits<double>::infinity();
  for (const double side : {1.0, -1.0}) {
    const double theta = side > 0 ? 0.0 : std::numbers::pi;
    const Vector out = (Vector(3) << side * 0.15, 0.0, theta).finished();
    const Vector in = (Vector(3) << side * 0.05, 0.0, theta).finished();
    jump = std::min(jump, v.value(out) - v.value(in));
  }
  return jump;
}

Outcome criterion_dubins(std::ostream& log) {
  const fs::path dir = work_dir() / "dubins";
  fs::remove_all(dir);
  const auto t0 = Clock::now();
  cli_or_throw("train", train_options("dubins", dir), log);
  const double train_s = seconds_since(t0);
  cli_or_throw("grid-solve", train_options("dubins", dir), log);
  const double grid_s = seconds_since(t0) - train_s;
  cli_or_throw("rollout", run_options(dir), log);
  cli_or_throw("evaluate", run_options(dir), log);
  for (const char* artifact : {"value_slice", "switching_raster"}) {
    cli::Options o = run_options(dir);
    o.artifact = artifact;
    cli_or_throw("export", o, log);
  }
  cli::Options grid_slice = run_options(dir);
  grid_slice.grid = (dir / "grid.bin").string();
  grid_slice.out = (dir / "grid_reference").string();
  cli_or_throw("export", grid_slice, log);

  const auto p = ocp::make_problem("dubins");
  const nn::Network critic_net = nn::load_network(dir / "critic.net");
  const sl::NetworkCritic critic(critic_net, *p);
  const grid::GridValueFunction gvf = grid::load_grid(dir / "grid.bin");
  const double jump_grid = dubins_jump(gvf), jump_critic = dubins_jump(critic);
  const auto roll = read_json(dir / "rollout_summary.json");
  const double success = roll["success_fraction"];
  const auto report = read_json(dir / "grid_report.json");
  const double elapsed = seconds_since(t0);
  const bool pass = jump_grid > 0.1 && jump_critic > 0.1 && roll["count"] == 200 && success >= 0.9 &&
                    report["converged"].get<bool>() && elapsed <= 1800.0;
  return {pass, fmt("value jump grid %.3f, critic %.3f (> 0.1); rollout success %.3f of %d (>= 0.90); "
                    "train %.0f s, grid %.0f s, total %.0f s",
                    jump_grid, jump_critic, success, roll["count"].get<int>(), train_s, grid_s, elapsed)};
}

Outcome criterion_trace(std::ostream& log) {
  const fs::path dir = work_dir() / "trace";
  fs::remove_all(dir);
  const auto t0 = Clock::now();
  cli_or_throw("train", train_options("trace", dir), log);
  const double train_s = seconds_since(t0);
  cli_or_throw("rollout", run_options(dir), log);
  const auto roll = read_json(dir / "rollout_summary.json");
  double q_settled = 0.0, q_sup = 0.0;
  for (const auto& g : roll["groups"]) {
    if (g["name"] == "q") {
      q_settled = g["settled_fraction"];
      q_sup = g["max_trailing_sup"];
    }
  }
  const bool in_bounds = roll["controls_in_bounds"];
  const bool pass = roll["count"] == 100 && q_settled >= 0.95 && in_bounds && train_s <= 1800.0;
  return {pass, fmt("trailing |q|_inf <= 0.05 in %.2f of %d rollouts (>= 0.95), worst %.4f; "
                    "controls within bounds: %s; all groups settled %.2f; train %.0f s",
                    q_settled, roll["count"].get<int>(), q_sup, in_bounds ? "yes" : "no",
                    roll["settled_fraction"].get<double>(), train_s)};
}

// ---------------------------------------------------------------------------
// 7. Rollout consistency.

/// Arrival time of the continuous bang-bang flow from (1, 0) at the disk of
/// radius r: the second arc is x = w^2/2, y = -w with w = 2 - t.
double arrival_time(double r) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double w = 0.5 * (lo + hi);
    (0.25 * w * w * w * w + w * w > r * r ? hi : lo) = w;
  }
  return 2.0 - 0.5 * (lo + hi);
}

Outcome criterion_rollout() {
  const auto p = ocp::make_problem("double_integrator");
  const double r = dynamic_cast<const ocp::DoubleIntegrator&>(*p).params().target_tolerance;
  const sl::BatchPolicy law = sl::pointwise_policy(
      [](const Vector& x) { return Vector::Constant(1, grid::double_integrator_bang_bang(x[0], x[1])); }, 1);
  const double t_ball = arrival_time(r);
  std::vector<double> dts{1e-2, 1e-3, 1e-4}, costs, errors;
  bool reached = true;
  for (double dt : dts) {
    rollout::SimulateOptions opt;
    opt.dt = dt;
    const auto t = rollout::simulate(*p, law, (Vector(2) << 1.0, 0.0).finished(), opt);
    reached &= t.reached_target;
    costs.push_back(t.accumulated_cost);
    errors.push_back(std::abs(t.accumulated_cost - t_ball));
  }
  // First order: the error drops by one decade per decade of dt.
  double slope_lo = std::numeric_limits<double>::infinity(), slope_hi = 0.0;
  for (std::size_t k = 0; k + 1 < dts.size(); ++k) {
    const double slope = std::log10(errors[k] / errors[k + 1]) / std::log10(dts[k] / dts[k + 1]);
    slope_lo = std::min(slope_lo, slope);
    slope_hi = std::max(slope_hi, slope);
  }
  const bool pass = reached && std::abs(costs[1] - 2.0) <= 0.01 && slope_lo >= 0.8 && slope_hi <= 1.2;
  return {pass, fmt("cost %.4f, %.4f, %.4f at dt 1e-2, 1e-3, 1e-4 (dt = 1e-3 needs 2 +- 0.01); error against "
                    "the exact arrival %.5f at |x| <= %.2f: %.2e, %.2e, %.2e; per-decade slopes %.2f to %.2f "
                    "(need 0.8 to 1.2)",
                    costs[0], costs[1], costs[2], t_ball, r, errors[0], errors[1], errors[2], slope_lo, slope_hi)};
}

// ---------------------------------------------------------------------------
// 8. Determinism.

constexpr const char* kDeterminismConfigs[] = {
    R"([problem]
name = double_integrator
[actor]
hidden = 16,16
[critic]
hidden = 16,16
[train]
n_domain = 64
iterations = 10
seed = 5
[grid]
lower = -2,-2
upper = 2,2
nodes = 41,41
[rollout]
t_max = 3
n = 5
[evaluate]
n_test = 200
[export]
lower = -2,-2
upper = 2,2
resolution = 20,20
)",
    R"([problem]
name = dubins
[actor]
hidden = 16,16
activation = relu
[critic]
hidden = 16,16
activation = relu
[train]
dt = 0.1
mu = 0.2
alpha = 0.1
n_domain = 64
n_target = 8
iterations = 10
seed = 6
[grid]
lower = -1,-1,-3.141592653589793
upper = 1,1,3.141592653589793
nodes = 21,21,12
periodic = false,false,true
control_samples = 5
tol = 1e-4
[rollout]
dt = 0.01
t_max = 2
n = 5
initial = annulus
[export]
dims = 0,2
lower = -1,-3
upper = 1,3
resolution = 10,10
)",
    R"([problem]
name = trace
[actor]
hidden = 16,16
activation = relu
residual = false,true
[critic]
hidden = 16,16
activation = relu
residual = false,true
[train]
dt = 0.3
mu = 0.02
n_domain = 64
n_target = 64
actor_optimizer = adagrad
actor_lr = 1e-2
critic_optimizer = adagrad
critic_lr = 1e-2
iterations = 10
seed = 7
[rollout]
t_max = 6
n = 5
stop_at_target = false
[export]
dims = 4,5
lower = -0.5,-0.5
upper = 0.5,0.5
resolution = 10,10
base = 1,0,0,0,0,0,0
)"};

/// Every file under `dir` except wall-clock timing and the checkpoint, which embeds it.
std::map<std::string, std::string> deterministic_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string name = e.path().filename().string();
    if (name == "timing.jsonl" || name == "grid_timing.json" || name == "state.bin") continue;
    out[fs::relative(e.path(), dir).string()] = slurp(e.path());
  }
  return out;
}

Outcome criterion_determinism(std::ostream& log) {
  const auto t0 = Clock::now();
  const fs::path root = work_dir() / "determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  Index compared = 0;
  std::vector<std::string> mismatched;
  int index = 0;
  for (const char* text : kDeterminismConfigs) {
    const fs::path cfg = root / ("config" + std::to_string(index++) + ".cfg");
    std::ofstream(cfg) << text;
    std::vector<std::map<std::string, std::string>> runs;
    for (const char* tag : {"a", "b"}) {
      const fs::path dir = root / (cfg.stem().string() + "_" + tag);
      cli::Options train;
      train.config = cfg.string();
      train.out = dir.string();
      cli_or_throw("train", train, log);
      const io::RunConfig rc = io::load_config(cfg);
      if (rc.grid.enabled()) cli_or_throw("grid-solve", train, log);
      cli_or_throw("evaluate", run_options(dir), log);
      cli_or_throw("rollout", run_options(dir), log);
      for (const char* artifact : {"value_slice", "switching_raster", "residual_map"}) {
        cli::Options o = run_options(dir);
        o.artifact = artifact;
        cli_or_throw("export", o, log);
      }
      runs.push_back(deterministic_files(dir));
    }
    for (const auto& [name, bytes] : runs[0]) {
      ++compared;
      auto it = runs[1].find(name);
      if (it == runs[1].end() || it->second != bytes) mismatched.push_back(cfg.stem().string() + "/" + name);
    }
    if (runs[0].size() != runs[1].size()) mismatched.push_back(cfg.stem().string() + ": file sets differ");
  }
  std::string detail = fmt("%ld files compared across train, grid-solve, evaluate, rollout, export for 3 "
                           "problems; %zu mismatched; %.1f s",
                           static_cast<long>(compared), mismatched.size(), seconds_since(t0));
  for (const auto& m : mismatched) detail += " [" + m + "]";
  return {mismatched.empty() && compared > 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) only.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--only 1,2,...]\n";
      return 2;
    }
  }
  fs::create_directories(work_dir());
  std::ofstream log(work_dir() / "acceptance.log");
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gradient suite", criterion_gradients},
      {"grid vs analytic", criterion_grid},
      {"contraction suite", criterion_contraction},
      {"double integrator preset", [&] { return criterion_double_integrator(log); }},
      {"dubins preset", [&] { return criterion_dubins(log); }},
      {"trace preset", [&] { return criterion_trace(log); }},
      {"rollout consistency", criterion_rollout},
      {"determinism", [&] { return criterion_determinism(log); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << id << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
