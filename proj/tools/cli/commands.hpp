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

#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"

namespace cavgate::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitRegression = 3;

/// Environment variable naming the default output directory. When set and
/// no explicit output path is given, results go to <dir>/<command>.<format>.
inline constexpr const char* kOutputDirEnv = "CAVGATE_OUTPUT_DIR";

struct CommandOptions {
  std::optional<std::string> config_path;
  Overrides overrides;
  bool allow_open = false;
};

struct DesignOptions {
  std::string target;  // e.g. "pi/2", "2pi", "1.25"
  std::optional<double> g0;
  std::optional<double> duration;
  int loops = 1;
  std::optional<std::string> out;
};

/// Per-branch phase breakdown with closure residual and enclosed area.
int cmd_phases(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Gate matrix, fidelity, residuals and nontriviality.
int cmd_gate(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Solve a circular pulse for a target phase and print it as a [pulse] section.
int cmd_design(const DesignOptions& options, std::ostream& out, std::ostream& err);

/// RWA-error and/or truncation scans from [validate].
int cmd_validate(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Branch ++ phases over the cartesian grid in [sweep].
int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cavgate::cli
