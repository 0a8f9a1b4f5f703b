// Copyright 2026 The cavgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using cavgate::cli::CommandOptions;

struct RawFlags {
  std::string config;
  std::string out;
  std::string format;
  std::optional<double> dt;
  std::optional<int> dim;
  std::optional<int> steps;
  bool allow_open = false;
};

void add_common(CLI::App* sub, RawFlags& flags) {
  sub->add_option("-c,--config", flags.config, "Configuration file")->required();
  sub->add_option("-o,--out", flags.out, "Output file");
  sub->add_option("--format", flags.format, "Output format: csv or json");
  sub->add_option("--dt", flags.dt, "Propagation step");
  sub->add_option("--dim", flags.dim, "Fock-space dimension");
  sub->add_option("--steps", flags.steps, "Analytic integration steps");
}

CommandOptions to_options(const RawFlags& flags) {
  CommandOptions options;
  options.config_path = flags.config;
  options.allow_open = flags.allow_open;
  options.overrides.dt = flags.dt;
  options.overrides.dim = flags.dim;
  options.overrides.steps = flags.steps;
  if (!flags.out.empty()) options.overrides.out = flags.out;
  if (!flags.format.empty()) options.overrides.format = flags.format;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric two-qubit phase gates in a driven cavity"};
  app.require_subcommand(1);

  RawFlags flags;

  auto* phases = app.add_subcommand("phases", "Per-branch geometric, dynamical and total phase");
  add_common(phases, flags);
  phases->add_flag("--allow-open", flags.allow_open, "Report phases even if a loop does not close");

  auto* gate = app.add_subcommand("gate", "Two-qubit gate matrix and fidelity");
  add_common(gate, flags);

  auto* validate = app.add_subcommand("validate", "RWA-error and truncation scans");
  add_common(validate, flags);

  auto* sweep = app.add_subcommand("sweep", "Branch ++ phases over a parameter grid");
  add_common(sweep, flags);
  sweep->add_flag("--allow-open", flags.allow_open, "Keep points whose loop does not close");

  cavgate::cli::DesignOptions design_options;
  std::string design_out;
  auto* design = app.add_subcommand("design", "Circular pulse for a target conditional phase");
  design->add_option("target", design_options.target, "Target phase, e.g. pi/2")->required();
  design->add_option("--g0", design_options.g0, "Fixed coupling amplitude");
  design->add_option("--T", design_options.duration, "Fixed gate duration");
  design->add_option("--loops", design_options.loops, "Number of loops")->check(CLI::PositiveNumber);
  design->add_option("-o,--out", design_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cavgate::cli::kExitOk : cavgate::cli::kExitConfig;
  }

  if (*design) {
    if (!design_out.empty()) design_options.out = design_out;
    return cavgate::cli::cmd_design(design_options, std::cout, std::cerr);
  }
  const CommandOptions options = to_options(flags);
  if (*phases) return cavgate::cli::cmd_phases(options, std::cout, std::cerr);
  if (*gate) return cavgate::cli::cmd_gate(options, std::cout, std::cerr);
  if (*validate) return cavgate::cli::cmd_validate(options, std::cout, std::cerr);
  return cavgate::cli::cmd_sweep(options, std::cout, std::cerr);
}
