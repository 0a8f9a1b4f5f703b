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

#include <optional>
#include <string_view>
#include <variant>

#include "cavgate/errors.hpp"
#include "cavgate/fock.hpp"
#include "cavgate/phase.hpp"
#include "cavgate/pulse.hpp"
#include "cavgate/types.hpp"

namespace cavgate {

enum class GateMethod { Analytic, NumericRWA, NumericRotating };

std::string_view gate_method_name(GateMethod method);
std::optional<GateMethod> parse_gate_method(std::string_view name);

struct GateOptions {
  /// Quadrature panels for the analytic method.
  int n_steps = kDefaultPhaseSteps;
  std::optional<double> closure_tol;
  /// Numeric methods require |<kl,0|U|kl,0>| above this on every branch.
  double vacuum_overlap_min = 0.99;
  double nontrivial_tol = 1e-6;
  /// Enforced on analytic and RWA-tier gates. Rotating-tier gates leak
  /// weight into excited cavity states, so their defect is only reported.
  double unitarity_tol = 1e-6;
  double propagation_tol = kDefaultUnitarityTol;
};

/// Two-qubit gate in branch order (++, +-, -+, --), gauge-fixed so that
/// matrix(1,1) == 1.
struct GateReport {
  GateMethod method = GateMethod::Analytic;
  Matrix4c matrix = Matrix4c::Identity();
  double extracted_gamma = 0.0;
  double diagonality_residual = 0.0;
  double closure_residual = 0.0;
  double fidelity = 1.0;
  double unitarity_defect = 0.0;
  bool nontrivial = false;
};

/// Build the gate produced by one cycle of `pulse`.
///
/// Analytic: diag(e^{i gamma_++}, 1, 1, e^{i gamma_--}) from total_phase;
/// extracted_gamma is gamma_++ unwrapped.
///
/// Numeric: propagates |kl> (x) |0> on the RWA or rotating tier with step
/// `dt`, projects each final state onto <k'l', 0| and assembles the 4x4
/// matrix; extracted_gamma = arg(M_00 + M_33) in (-pi, pi]. Throws OpenLoop
/// when the cavity does not return to vacuum.
///
/// fidelity is |tr(ideal(extracted_gamma)^dagger M)| / 4.
GateReport gate_matrix(const PulseSpec& pulse, const FockSpace& space, GateMethod method,
                       double dt, const GateOptions& options = {});

/// diag(e^{i gamma}, 1, 1, e^{i gamma}).
Matrix4c ideal_gate(double gamma);

/// |tr(reference^dagger actual)| / 4.
double gate_fidelity(const Matrix4c& reference, const Matrix4c& actual);

/// True iff gamma is farther than `tol` from every multiple of 2 pi.
bool nontriviality(double gamma, double tol = 1e-6);

struct FixedCoupling {
  double g0 = 0.0;
};
struct FixedDuration {
  double duration = 0.0;
};
using DesignConstraint = std::variant<FixedCoupling, FixedDuration>;

/// Circular pulse with `loops` full periods whose ++ / -- phase equals
/// `target_gamma`, solving loops * 2 pi g0^2 / nu^2 = target_gamma.
/// Throws InfeasibleConstraint for non-positive targets or constraints;
/// emits TrivialTarget when the target is a multiple of 2 pi.
PulseSpec design_circular_pulse(double target_gamma, const DesignConstraint& constraint,
                                int loops = 1, Warnings* warnings = nullptr);

/// Entanglement entropy (bits) of one qubit after applying the gate to
/// |+>|+> + |+>|-> + |->|+> + |->|->, normalized.
double entangling_entropy(const Matrix4c& gate);
double entangling_check(const GateReport& report);

}  // namespace cavgate
