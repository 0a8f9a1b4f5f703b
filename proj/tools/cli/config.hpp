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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cavgate/gate.hpp"
#include "cavgate/pulse.hpp"

namespace cavgate::cli {

/// Invalid configuration or command-line input (exit code 1). Carries one
/// diagnostic per offending field, each prefixed with its field path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message), diagnostics_{message} {}
  explicit ConfigError(std::vector<std::string> diagnostics);

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  std::vector<ConfigEntry> entries;  // file order

  const ConfigEntry* find(std::string_view key) const;
  void set(const std::string& key, const std::string& value);
};

/// Sectioned key = value text. `#` and `;` start comments, `[name]` opens a
/// section, keys before any section header land in section "".
struct ConfigFile {
  std::vector<ConfigSection> sections;

  const ConfigSection* find(std::string_view name) const;
  ConfigSection& section(const std::string& name);
};

ConfigFile parse_config(std::string_view text);
ConfigFile load_config_file(const std::string& path);

enum class OutputFormat { Csv, Json };

struct SweepAxis {
  std::string key;  // a scalar [pulse] key
  std::vector<double> values;
};

/// Command-line flags that override configuration values.
struct Overrides {
  std::optional<double> dt;
  std::optional<int> dim;
  std::optional<int> steps;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

/// Everything a subcommand needs, validated before any computation.
struct RunConfig {
  ConfigFile file;
  std::optional<PulseSpec> pulse;
  int dim = 32;
  GateMethod method = GateMethod::Analytic;
  double dt = 0.0;  // resolved: [evolve] dt, --dt, or T / 4000
  int steps = kDefaultPhaseSteps;
  std::optional<double> closure_tol;
  double nontrivial_tol = 1e-6;
  std::vector<double> r0_values;
  std::vector<int> dims;
  std::vector<SweepAxis> sweep;
  std::size_t max_points = 10000;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::Csv;
};

/// Steps per cycle used when no dt is configured.
inline constexpr int kDefaultStepsPerCycle = 4000;

RunConfig resolve_config(const ConfigFile& file, const Overrides& overrides);

/// Build a PulseSpec from a [pulse] section. Throws ConfigError with
/// field-path diagnostics.
PulseSpec pulse_from_section(const ConfigSection& section);

/// [pulse] section text that parses back to an identical PulseSpec.
std::string format_pulse_section(const PulseSpec& pulse);

/// Scalar [pulse] keys a sweep may vary.
bool is_sweepable_key(std::string_view key);

/// Parse a comma-separated list of expressions.
std::vector<double> parse_list(std::string_view text);

}  // namespace cavgate::cli
