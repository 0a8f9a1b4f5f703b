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

#include "cavgate/evolve.hpp"
#include "cavgate/pulse.hpp"
#include "cavgate/types.hpp"

namespace cavgate {

inline constexpr int kDefaultPhaseSteps = 100000;

/// Geometric, dynamical and total phase of one branch over a cycle.
/// Phases are unwrapped (not reduced mod 2 pi).
struct PhaseBreakdown {
  Branch branch = Branch::PlusPlus;
  double gamma_g = 0.0;
  double gamma_d = 0.0;
  double gamma_total = 0.0;
  double closure_residual = 0.0;
  /// Largest imaginary residue seen before taking real parts.
  double imag_leakage = 0.0;
};

struct PhaseOptions {
  int n_steps = kDefaultPhaseSteps;
  /// Absolute bound on |alpha(T)|; defaults to 1e-6 max(1, max_t |alpha(t)|).
  std::optional<double> closure_tol;
  /// When false, open paths are evaluated instead of rejected.
  bool require_closed = true;
};

/// G(t) = g(t) int_0^t g^* - g^*(t) int_0^t g, inner integrals by
/// trapezoidal quadrature with `n_steps` panels. Purely imaginary.
cplx big_g(const PulseSpec& pulse, double t, int n_steps = 1 << 14);

/// (i/2) int_0^T (alpha^* alpha' - alpha'^* alpha) dt along alpha_trajectory.
double geometric_phase(const PulseSpec& pulse, Branch branch, int n_steps = kDefaultPhaseSteps);

/// (i/4) lambda^2 int_0^T G(t) dt.
double dynamical_phase(const PulseSpec& pulse, Branch branch, int n_steps = kDefaultPhaseSteps);

/// All three phases. Throws OpenLoop when |alpha(T)| exceeds the closure
/// tolerance and `require_closed` is set.
PhaseBreakdown total_phase(const PulseSpec& pulse, Branch branch,
                           const PhaseOptions& options = {});

/// 1e-6 max(1, max_t |alpha(t)|).
double default_closure_tolerance(const Trajectory& traj);

/// Signed shoelace area of the sampled path, positive counterclockwise.
/// Throws OpenLoop when |alpha_end - alpha_0| exceeds the tolerance.
double enclosed_area(const Trajectory& traj, std::optional<double> closure_tol = std::nullopt);

}  // namespace cavgate
