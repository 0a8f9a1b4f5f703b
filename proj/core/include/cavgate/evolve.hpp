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

#include <vector>

#include "cavgate/fock.hpp"
#include "cavgate/model.hpp"
#include "cavgate/pulse.hpp"
#include "cavgate/types.hpp"

namespace cavgate {

inline constexpr double kDefaultUnitarityTol = 1e-8;
inline constexpr int kClosureSamples = 1 << 16;

/// Result of the numeric engine: U(t1, t0) on the composite space.
struct NumericPropagation {
  CMatrix unitary;
  int step_count = 0;
  double dt = 0.0;  // actual step, (t1 - t0) / step_count
  double unitarity_defect = 0.0;
};

/// Result of the analytic engine for one branch: U_kl = e^{i phase} D(residual).
struct DisplacementPropagation {
  Branch branch = Branch::PlusPlus;
  double phase = 0.0;
  Amplitude residual_displacement{};
  int step_count = 0;
};

/// Sampled phase-space path alpha_kl(t) of one branch.
struct Trajectory {
  std::vector<double> times;
  std::vector<Amplitude> alphas;
  Branch branch = Branch::PlusPlus;
};

/// Number of uniform steps covering `span` with steps no longer than `dt`.
int step_count_for(double span, double dt);

/// Time-ordered product of exp(-i H(t_n) dt) with midpoint samples
/// t_n = t0 + (n - 1/2) dt. Throws NonUnitaryResult when
/// max|U^dagger U - 1| exceeds `unitarity_tol`.
NumericPropagation propagate_numeric(HamiltonianTier tier, const PulseSpec& pulse,
                                     const FockSpace& space, double t0, double t1, double dt,
                                     double unitarity_tol = kDefaultUnitarityTol);

/// Same stepping as propagate_numeric, applied to the columns of `initial`
/// only. Cheap when a handful of initial states is all that is needed.
/// Throws NonUnitaryResult when the Gram matrix of the columns drifts by more
/// than `unitarity_tol`.
CMatrix propagate_states(HamiltonianTier tier, const PulseSpec& pulse, const FockSpace& space,
                         const CMatrix& initial, double t0, double t1, double dt,
                         double unitarity_tol = kDefaultUnitarityTol);

/// Scalar displacement-product engine. Accumulates
/// dalpha_n = -(i/2) lambda g^*(t_n) dt at midpoints t_n and the composition
/// phase of each left-multiplied D(dalpha_n). Steps are split at
/// piecewise-constant breakpoints, so step_count can exceed n_steps.
DisplacementPropagation propagate_displacement(const PulseSpec& pulse, Branch branch,
                                               int n_steps);

/// alpha(t) = -(i/2) lambda int_0^t g^*, on a uniform grid of n_samples points
/// (piecewise-constant breakpoints are added to the grid).
Trajectory alpha_trajectory(const PulseSpec& pulse, Branch branch, int n_samples);

/// |alpha(T)| from a high-resolution trajectory.
double loop_closure_residual(const PulseSpec& pulse, Branch branch,
                             int n_samples = kClosureSamples);

}  // namespace cavgate
