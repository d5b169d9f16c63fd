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

#include <CLI11.hpp>

#include "slac/cli/commands.hpp"

namespace {

void add_common(CLI::App* cmd, slac::cli::Options& opt) {
  cmd->add_option("--out", opt.out, "Output directory (default: $SLAC_OUTPUT_ROOT/<problem>)");
  cmd->add_option("--seed", opt.seed, "Override the configured seed");
  cmd->add_option("--workers", opt.workers, "Worker threads for grid sweeps and rollouts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dt-override", opt.dt_override, "Evaluation and rollout time step");
  cmd->add_option("--n", opt.n, "Number of rollouts or test points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slac: semi-Lagrangian actor-critic for free-terminal-time optimal control"};
  app.require_subcommand(1);
  slac::cli::Options opt;

  auto* train = app.add_subcommand("train", "Train actor and critic networks");
  train->add_option("--config", opt.config, "Run configuration (INI)");
  train->add_flag("--resume", opt.resume, "Continue from the checkpoint in --out");
  add_common(train, opt);

  auto* grid = app.add_subcommand("grid-solve", "Solve the reference value on a grid");
  grid->add_option("--config", opt.config, "Run configuration (INI)")->required();
  add_common(grid, opt);

  auto* evaluate = app.add_subcommand("evaluate", "Score a trained run against a reference");
  evaluate->add_option("--run", opt.run, "Run directory")->required();
  evaluate->add_option("--grid", opt.grid, "Grid value file used as reference");
  add_common(evaluate, opt);

  auto* rollout = app.add_subcommand("rollout", "Closed-loop rollouts of the trained actor");
  rollout->add_option("--run", opt.run, "Run directory")->required();
  add_common(rollout, opt);

  auto* exp = app.add_subcommand("export", "Export value, control or residual rasters");
  exp->add_option("--run", opt.run, "Run directory")->required();
  exp->add_option("--artifact", opt.artifact, "value_slice, switching_raster or residual_map");
  exp->add_option("--grid", opt.grid, "Sample this grid file instead of the critic");
  exp->add_option("--slice", opt.slice, "Slice as d:lower:upper:count,d:lower:upper:count");
  exp->add_option("--base", opt.base, "Comma-separated state for the fixed coordinates");
  add_common(exp, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? slac::cli::kOk : slac::cli::kConfigError;
  }
  return slac::cli::run(app.get_subcommands().front()->get_name(), opt);
}
