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

#include "cavgate/evolve.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "quadrature.hpp"

namespace cavgate {

namespace {

void check_interval(const PulseSpec& pulse, double t0, double t1, double dt) {
  const double tol = 1e-12 * std::max(1.0, pulse.duration());
  if (!(t0 >= -tol && t0 < t1 && t1 <= pulse.duration() + tol)) {
    std::ostringstream msg;
    msg << "propagate: need 0 <= t0 < t1 <= T, got t0 = " << t0 << ", t1 = " << t1
        << ", T = " << pulse.duration();
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  if (!(std::isfinite(dt) && dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "propagate: dt must be > 0");
  }
}

void step_through(const HamiltonianAssembler& assembler, const PulseSpec& pulse, double t0,
                  int steps, double h, CMatrix& states) {
  for (int n = 1; n <= steps; ++n) {
    const double t_mid = t0 + (n - 0.5) * h;
    apply_step(assembler.at(pulse, t_mid), h, states);
  }
}

void check_unitarity(double defect, double tol, const char* where) {
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << where << ": unitarity defect " << defect << " exceeds " << tol
        << " (step too large or Fock space too small)";
    throw Error(ErrorCode::NonUnitaryResult, msg.str());
  }
}

}  // namespace

int step_count_for(double span, double dt) {
  const double ratio = span / dt;
  return std::max(1, static_cast<int>(std::ceil(ratio - 1e-9 * ratio)));
}

NumericPropagation propagate_numeric(HamiltonianTier tier, const PulseSpec& pulse,
                                     const FockSpace& space, double t0, double t1, double dt,
                                     double unitarity_tol) {
  check_interval(pulse, t0, t1, dt);
  const HamiltonianAssembler assembler(tier, space);
  NumericPropagation out;
  out.step_count = step_count_for(t1 - t0, dt);
  out.dt = (t1 - t0) / out.step_count;
  out.unitary = CMatrix::Identity(assembler.size(), assembler.size());
  step_through(assembler, pulse, t0, out.step_count, out.dt, out.unitary);
  out.unitarity_defect = unitarity_defect(out.unitary);
  check_unitarity(out.unitarity_defect, unitarity_tol, "propagate_numeric");
  return out;
}

CMatrix propagate_states(HamiltonianTier tier, const PulseSpec& pulse, const FockSpace& space,
                         const CMatrix& initial, double t0, double t1, double dt,
                         double unitarity_tol) {
  check_interval(pulse, t0, t1, dt);
  const HamiltonianAssembler assembler(tier, space);
  if (initial.rows() != assembler.size()) {
    throw Error(ErrorCode::InvalidArgument, "propagate_states: state dimension mismatch");
  }
  const int steps = step_count_for(t1 - t0, dt);
  CMatrix states = initial;
  step_through(assembler, pulse, t0, steps, (t1 - t0) / steps, states);
  const CMatrix gram_drift = states.adjoint() * states - initial.adjoint() * initial;
  check_unitarity(max_abs(gram_drift), unitarity_tol, "propagate_states");
  return states;
}

DisplacementPropagation propagate_displacement(const PulseSpec& pulse, Branch branch,
                                               int n_steps) {
  if (n_steps < 1) {
    throw Error(ErrorCode::InvalidArgument, "propagate_displacement: n_steps must be >= 1");
  }
  DisplacementPropagation out;
  out.branch = branch;
  out.step_count = n_steps;
  const int lambda = branch_lambda(branch);
  if (lambda == 0) return out;

  // Uniform steps, split at segment boundaries so no step straddles a jump.
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(n_steps) + 1);
  const auto jumps = pulse.breakpoints();
  auto jump = jumps.begin();
  const double h = pulse.duration() / n_steps;
  for (int n = 0; n <= n_steps; ++n) {
    const double t = n == n_steps ? pulse.duration() : n * h;
    for (; jump != jumps.end() && *jump <= t; ++jump) {
      if (*jump > times.back() && *jump < t) times.push_back(*jump);
    }
    times.push_back(t);
  }

  const cplx prefactor = -0.5 * kI * static_cast<double>(lambda);
  Amplitude alpha{};
  double phase = 0.0;
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const double mid = 0.5 * (times[k] + times[k + 1]);
    const Amplitude step = prefactor * (times[k + 1] - times[k]) * std::conj(pulse.coupling(mid));
    // D(step) D(alpha) = e^{i Im(step alpha^*)} D(alpha + step)
    phase += compose_phase(step, alpha);
    alpha += step;
  }
  out.step_count = static_cast<int>(times.size()) - 1;
  out.phase = phase;
  out.residual_displacement = alpha;
  return out;
}

Trajectory alpha_trajectory(const PulseSpec& pulse, Branch branch, int n_samples) {
  if (n_samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "alpha_trajectory: n_samples must be >= 2");
  }
  const auto grid = detail::coupling_grid(pulse, pulse.duration(), n_samples - 1);
  const cplx prefactor = -0.5 * kI * static_cast<double>(branch_lambda(branch));
  Trajectory traj;
  traj.branch = branch;
  traj.times = grid.times;
  traj.alphas.reserve(grid.integral.size());
  for (cplx integral : grid.integral) traj.alphas.push_back(prefactor * std::conj(integral));
  return traj;
}

double loop_closure_residual(const PulseSpec& pulse, Branch branch, int n_samples) {
  if (branch_lambda(branch) == 0) return 0.0;
  return std::abs(alpha_trajectory(pulse, branch, n_samples).alphas.back());
}

}  // namespace cavgate
