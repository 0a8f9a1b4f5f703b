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

#include "cavgate/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cavgate/evolve.hpp"

namespace cavgate {

namespace {

double wrapped_difference(double a, double b) {
  return std::remainder(a - b, kTwoPi);
}

template <typename T>
void require_ascending(std::span<const T> values, const char* where) {
  if (values.empty()) {
    throw Error(ErrorCode::InvalidArgument, std::string(where) + ": scan list is empty");
  }
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(where) + ": scan values must be strictly ascending");
    }
  }
}

ValidationRow compare(double parameter, const GateReport& reference, const GateReport& trial) {
  ValidationRow row;
  row.parameter_value = parameter;
  row.infidelity = std::max(0.0, 1.0 - gate_fidelity(reference.matrix, trial.matrix));
  row.diagonality_residual = trial.diagonality_residual;
  row.phase_error = std::abs(wrapped_difference(trial.extracted_gamma, reference.extracted_gamma));
  return row;
}

void finish(ValidationReport& report, double convergence_tol) {
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    auto& row = report.rows[k];
    const auto& prev = report.rows[k - 1];
    row.fidelity_change = std::abs(row.infidelity - prev.infidelity);
    if (row.infidelity > prev.infidelity) report.monotone = false;
  }
  report.converged = report.rows.back().fidelity_change < convergence_tol;
}

}  // namespace

ValidationReport rwa_error_scan(const PulseSpec& pulse, std::span<const double> r0_values,
                                const FockSpace& space, double dt, const ScanOptions& options) {
  require_ascending(r0_values, "rwa_error_scan");
  if (!(r0_values.front() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rwa_error_scan: r0 values must be positive");
  }
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "rwa_error_scan: dt must be > 0");
  const double largest = r0_values.back();
  const int steps = step_count_for(pulse.duration(), dt);
  const double actual_dt = pulse.duration() / steps;
  if (!(actual_dt * largest < kMaxPhasePerStep)) {
    std::ostringstream msg;
    msg << "rwa_error_scan: dt * r0 = " << actual_dt * largest << " >= " << kMaxPhasePerStep
        << " for r0 = " << largest << "; the 2 r0 oscillation is unresolved";
    throw Error(ErrorCode::StepTooCoarse, msg.str());
  }

  const GateReport reference =
      gate_matrix(pulse, space, GateMethod::NumericRWA, dt, options.gate);
  ValidationReport report;
  report.parameter = "r0";
  for (double r0 : r0_values) {
    const GateReport trial =
        gate_matrix(pulse.with_r0(r0), space, GateMethod::NumericRotating, dt, options.gate);
    report.rows.push_back(compare(r0, reference, trial));
  }
  finish(report, options.convergence_tol);
  return report;
}

ValidationReport truncation_scan(const PulseSpec& pulse, std::span<const int> dims, double dt,
                                 const ScanOptions& options) {
  require_ascending(dims, "truncation_scan");
  const auto traj = alpha_trajectory(pulse, Branch::PlusPlus, 4097);
  double largest = 0.0;
  for (Amplitude a : traj.alphas) largest = std::max(largest, std::abs(a));
  const double needed = 4.0 * largest * largest;
  if (dims.front() < needed || dims.front() < 2) {
    std::ostringstream msg;
    msg << "truncation_scan: dim " << dims.front() << " below 4 max|alpha|^2 = " << needed;
    throw Error(ErrorCode::PreconditionFailed, msg.str());
  }

  const GateReport reference =
      gate_matrix(pulse, FockSpace(dims.front()), GateMethod::Analytic, dt, options.gate);
  // Leakage out of a truncated space is what this scan measures, so the
  // trials report their unitarity defect instead of rejecting it.
  GateOptions trial_options = options.gate;
  trial_options.unitarity_tol = std::numeric_limits<double>::infinity();
  ValidationReport report;
  report.parameter = "dim";
  for (int dim : dims) {
    const GateReport trial = gate_matrix(pulse, FockSpace(dim), GateMethod::NumericRWA, dt,
                                         trial_options);
    report.rows.push_back(compare(dim, reference, trial));
  }
  finish(report, options.convergence_tol);
  return report;
}

}  // namespace cavgate
