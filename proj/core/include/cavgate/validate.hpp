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

#include <span>
#include <string>
#include <vector>

#include "cavgate/fock.hpp"
#include "cavgate/gate.hpp"
#include "cavgate/pulse.hpp"

namespace cavgate {

/// Maximum dt * r0 for which the 2 r0 oscillation counts as resolved.
inline constexpr double kMaxPhasePerStep = 0.1;

struct ValidationRow {
  double parameter_value = 0.0;
  double infidelity = 0.0;
  double diagonality_residual = 0.0;
  double phase_error = 0.0;
  /// |fidelity - previous row's fidelity|; 0 for the first row.
  double fidelity_change = 0.0;
};

struct ValidationReport {
  std::string parameter;  // "r0" or "dim"
  std::vector<ValidationRow> rows;
  /// Infidelity non-increasing along the scan.
  bool monotone = true;
  /// Last fidelity change below 1e-8 (truncation scans).
  bool converged = true;
};

struct ScanOptions {
  GateOptions gate;
  double convergence_tol = 1e-8;
};

/// Rotating-tier gate against the RWA-tier gate for each r0 (ascending,
/// positive). Throws StepTooCoarse when dt * max(r0) >= 0.1.
ValidationReport rwa_error_scan(const PulseSpec& pulse, std::span<const double> r0_values,
                                const FockSpace& space, double dt,
                                const ScanOptions& options = {});

/// RWA-tier numeric gate against the analytic gate for each Fock cutoff
/// (ascending). Throws PreconditionFailed when a cutoff is below
/// 4 max_t |alpha(t)|^2.
ValidationReport truncation_scan(const PulseSpec& pulse, std::span<const int> dims, double dt,
                                 const ScanOptions& options = {});

}  // namespace cavgate
