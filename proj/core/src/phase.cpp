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

#include "cavgate/phase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quadrature.hpp"

namespace cavgate {

namespace {

void check_steps(int n_steps, const char* where) {
  if (n_steps < 2) {
    throw Error(ErrorCode::InvalidArgument, std::string(where) + ": n_steps must be >= 2");
  }
}

// Trapezoidal (i/2) int (alpha^* alpha' - alpha'^* alpha) dt, kept complex so
// the imaginary residue can be reported.
cplx geometric_integral(const detail::CouplingGrid& grid, int lambda) {
  const cplx p = -0.5 * kI * static_cast<double>(lambda);
  cplx sum{};
  for (std::size_t k = 0; k < grid.panels(); ++k) {
    const double h = grid.times[k + 1] - grid.times[k];
    const Amplitude a0 = p * std::conj(grid.integral[k]);
    const Amplitude a1 = p * std::conj(grid.integral[k + 1]);
    const Amplitude v0 = p * std::conj(grid.g_start[k]);
    const Amplitude v1 = p * std::conj(grid.g_end[k]);
    const cplx f0 = std::conj(a0) * v0 - std::conj(v0) * a0;
    const cplx f1 = std::conj(a1) * v1 - std::conj(v1) * a1;
    sum += 0.5 * h * (f0 + f1);
  }
  return 0.5 * kI * sum;
}

// Trapezoidal int_0^T G(t) dt.
cplx big_g_integral(const detail::CouplingGrid& grid) {
  cplx sum{};
  for (std::size_t k = 0; k < grid.panels(); ++k) {
    const double h = grid.times[k + 1] - grid.times[k];
    const cplx i0 = grid.integral[k];
    const cplx i1 = grid.integral[k + 1];
    const cplx g0 = grid.g_start[k];
    const cplx g1 = grid.g_end[k];
    const cplx big0 = g0 * std::conj(i0) - std::conj(g0) * i0;
    const cplx big1 = g1 * std::conj(i1) - std::conj(g1) * i1;
    sum += 0.5 * h * (big0 + big1);
  }
  return sum;
}

cplx dynamical_integral(const detail::CouplingGrid& grid, int lambda) {
  return 0.25 * kI * static_cast<double>(lambda * lambda) * big_g_integral(grid);
}

}  // namespace

cplx big_g(const PulseSpec& pulse, double t, int n_steps) {
  check_steps(n_steps, "big_g");
  const double tol = 1e-12 * std::max(1.0, pulse.duration());
  if (!(t >= -tol && t <= pulse.duration() + tol)) {
    throw Error(ErrorCode::InvalidArgument, "big_g: t outside [0, T]");
  }
  t = std::clamp(t, 0.0, pulse.duration());
  if (t == 0.0) return {};
  const auto grid = detail::coupling_grid(pulse, t, n_steps);
  const cplx g = pulse.coupling(t);
  const cplx inner = grid.integral.back();
  return g * std::conj(inner) - std::conj(g) * inner;
}

double geometric_phase(const PulseSpec& pulse, Branch branch, int n_steps) {
  check_steps(n_steps, "geometric_phase");
  const int lambda = branch_lambda(branch);
  if (lambda == 0) return 0.0;
  return geometric_integral(detail::coupling_grid(pulse, pulse.duration(), n_steps), lambda)
      .real();
}

double dynamical_phase(const PulseSpec& pulse, Branch branch, int n_steps) {
  check_steps(n_steps, "dynamical_phase");
  const int lambda = branch_lambda(branch);
  if (lambda == 0) return 0.0;
  return dynamical_integral(detail::coupling_grid(pulse, pulse.duration(), n_steps), lambda)
      .real();
}

double default_closure_tolerance(const Trajectory& traj) {
  double largest = 0.0;
  for (Amplitude a : traj.alphas) largest = std::max(largest, std::abs(a));
  return 1e-6 * std::max(1.0, largest);
}

PhaseBreakdown total_phase(const PulseSpec& pulse, Branch branch, const PhaseOptions& options) {
  check_steps(options.n_steps, "total_phase");
  PhaseBreakdown out;
  out.branch = branch;
  const int lambda = branch_lambda(branch);
  if (lambda == 0) return out;

  const auto grid = detail::coupling_grid(pulse, pulse.duration(), options.n_steps);
  const cplx p = -0.5 * kI * static_cast<double>(lambda);
  double largest = 0.0;
  for (cplx integral : grid.integral) largest = std::max(largest, std::abs(p * std::conj(integral)));
  out.closure_residual = std::abs(p * std::conj(grid.integral.back()));

  const double tol = options.closure_tol.value_or(1e-6 * std::max(1.0, largest));
  if (options.require_closed && out.closure_residual > tol) {
    std::ostringstream msg;
    msg << "total_phase: open loop on branch " << branch_name(branch)
        << ", closure residual |alpha(T)| = " << out.closure_residual << " > " << tol;
    throw Error(ErrorCode::OpenLoop, msg.str());
  }

  const cplx geometric = geometric_integral(grid, lambda);
  const cplx dynamical = dynamical_integral(grid, lambda);
  out.gamma_g = geometric.real();
  out.gamma_d = dynamical.real();
  out.gamma_total = out.gamma_g + out.gamma_d;
  out.imag_leakage = std::max(std::abs(geometric.imag()), std::abs(dynamical.imag()));

  const double scale = std::max(1.0, std::abs(out.gamma_total));
  if (std::abs(out.gamma_total + out.gamma_g) > 1e-9 * scale ||
      std::abs(out.gamma_total - 0.5 * out.gamma_d) > 1e-9 * scale) {
    throw std::logic_error("total_phase: geometric/dynamical proportionality violated");
  }
  return out;
}

double enclosed_area(const Trajectory& traj, std::optional<double> closure_tol) {
  if (traj.alphas.size() < 2) return 0.0;
  const double gap = std::abs(traj.alphas.back() - traj.alphas.front());
  const double tol = closure_tol.value_or(default_closure_tolerance(traj));
  if (gap > tol) {
    std::ostringstream msg;
    msg << "enclosed_area: path not closed, |alpha_end - alpha_0| = " << gap << " > " << tol;
    throw Error(ErrorCode::OpenLoop, msg.str());
  }
  double twice_area = 0.0;
  const std::size_t n = traj.alphas.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Amplitude a = traj.alphas[k];
    const Amplitude b = traj.alphas[(k + 1) % n];
    twice_area += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice_area;
}

}  // namespace cavgate
