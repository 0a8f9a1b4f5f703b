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

#include "cavgate/gate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cavgate/evolve.hpp"
#include "cavgate/model.hpp"

namespace cavgate {

namespace {

double off_diagonal_max(const Matrix4c& m) {
  double best = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

double closure_of(const PulseSpec& pulse, const std::optional<double>& closure_tol,
                  double* tol_out) {
  const auto traj = alpha_trajectory(pulse, Branch::PlusPlus, kClosureSamples);
  *tol_out = closure_tol.value_or(default_closure_tolerance(traj));
  return std::abs(traj.alphas.back());
}

void finish_report(GateReport& report, const GateOptions& options) {
  report.diagonality_residual = off_diagonal_max(report.matrix);
  report.unitarity_defect = unitarity_defect(report.matrix);
  report.fidelity = gate_fidelity(ideal_gate(report.extracted_gamma), report.matrix);
  report.nontrivial = nontriviality(report.extracted_gamma, options.nontrivial_tol);
  if (report.method != GateMethod::NumericRotating &&
      !(report.unitarity_defect <= options.unitarity_tol)) {
    std::ostringstream msg;
    msg << "gate_matrix: gate unitarity defect " << report.unitarity_defect << " exceeds "
        << options.unitarity_tol;
    throw Error(ErrorCode::NonUnitaryResult, msg.str());
  }
}

GateReport analytic_gate(const PulseSpec& pulse, const GateOptions& options) {
  PhaseOptions phase_options;
  phase_options.n_steps = options.n_steps;
  phase_options.closure_tol = options.closure_tol;
  const PhaseBreakdown plus = total_phase(pulse, Branch::PlusPlus, phase_options);
  const PhaseBreakdown minus = total_phase(pulse, Branch::MinusMinus, phase_options);

  GateReport report;
  report.method = GateMethod::Analytic;
  report.matrix = Matrix4c::Identity();
  report.matrix(0, 0) = std::polar(1.0, plus.gamma_total);
  report.matrix(3, 3) = std::polar(1.0, minus.gamma_total);
  report.extracted_gamma = plus.gamma_total;
  report.closure_residual = std::max(plus.closure_residual, minus.closure_residual);
  return report;
}

GateReport numeric_gate(const PulseSpec& pulse, const FockSpace& space, GateMethod method,
                        double dt, const GateOptions& options) {
  GateReport report;
  report.method = method;
  double tol = 0.0;
  report.closure_residual = closure_of(pulse, options.closure_tol, &tol);
  if (report.closure_residual > tol) {
    std::ostringstream msg;
    msg << "gate_matrix: open loop, closure residual |alpha(T)| = " << report.closure_residual
        << " > " << tol;
    throw Error(ErrorCode::OpenLoop, msg.str());
  }

  const int dim = space.dim();
  const Matrix4c basis = sigma_x_basis_change();
  CMatrix initial = CMatrix::Zero(4 * dim, 4);
  for (int b = 0; b < 4; ++b)
    for (int q = 0; q < 4; ++q) initial(q * dim, b) = basis(q, b);

  const auto tier = method == GateMethod::NumericRWA ? HamiltonianTier::RWAEffective
                                                     : HamiltonianTier::RotatingFrame;
  const CMatrix final_states = propagate_states(tier, pulse, space, initial, 0.0,
                                                pulse.duration(), dt, options.propagation_tol);

  Matrix4c m = Matrix4c::Zero();
  for (int out = 0; out < 4; ++out)
    for (int in = 0; in < 4; ++in)
      for (int q = 0; q < 4; ++q) m(out, in) += std::conj(basis(q, out)) * final_states(q * dim, in);

  for (Branch b : kBranches) {
    const int k = branch_index(b);
    if (!(std::abs(m(k, k)) > options.vacuum_overlap_min)) {
      std::ostringstream msg;
      msg << "gate_matrix: cavity did not return to vacuum on branch " << branch_name(b)
          << ", |<kl,0|U|kl,0>| = " << std::abs(m(k, k));
      throw Error(ErrorCode::OpenLoop, msg.str());
    }
  }

  report.matrix = m / m(1, 1);
  report.matrix(1, 1) = 1.0;
  report.extracted_gamma = std::arg(report.matrix(0, 0) + report.matrix(3, 3));
  return report;
}

}  // namespace

std::string_view gate_method_name(GateMethod method) {
  switch (method) {
    case GateMethod::Analytic: return "analytic";
    case GateMethod::NumericRWA: return "numeric_rwa";
    case GateMethod::NumericRotating: return "numeric_rotating";
  }
  return "?";
}

std::optional<GateMethod> parse_gate_method(std::string_view name) {
  for (auto m : {GateMethod::Analytic, GateMethod::NumericRWA, GateMethod::NumericRotating}) {
    if (gate_method_name(m) == name) return m;
  }
  return std::nullopt;
}

GateReport gate_matrix(const PulseSpec& pulse, const FockSpace& space, GateMethod method,
                       double dt, const GateOptions& options) {
  GateReport report = method == GateMethod::Analytic
                          ? analytic_gate(pulse, options)
                          : numeric_gate(pulse, space, method, dt, options);
  finish_report(report, options);
  return report;
}

Matrix4c ideal_gate(double gamma) {
  Matrix4c u = Matrix4c::Identity();
  u(0, 0) = u(3, 3) = std::polar(1.0, gamma);
  return u;
}

double gate_fidelity(const Matrix4c& reference, const Matrix4c& actual) {
  return std::min(1.0, std::abs((reference.adjoint() * actual).trace()) / 4.0);
}

bool nontriviality(double gamma, double tol) {
  const double nearest = kTwoPi * std::round(gamma / kTwoPi);
  return std::abs(gamma - nearest) > tol;
}

PulseSpec design_circular_pulse(double target_gamma, const DesignConstraint& constraint,
                                int loops, Warnings* warnings) {
  if (loops < 1) throw Error(ErrorCode::InvalidArgument, "design: loops must be >= 1");
  if (!(std::isfinite(target_gamma) && target_gamma > 0.0)) {
    throw Error(ErrorCode::InfeasibleConstraint, "design: target phase must be > 0");
  }
  const double per_loop = target_gamma / loops;
  double g0 = 0.0;
  double nu = 0.0;
  double duration = 0.0;
  if (const auto* fixed = std::get_if<FixedCoupling>(&constraint)) {
    if (!(std::isfinite(fixed->g0) && fixed->g0 > 0.0)) {
      throw Error(ErrorCode::InfeasibleConstraint, "design: fixed g0 must be > 0");
    }
    g0 = fixed->g0;
    nu = g0 * std::sqrt(kTwoPi / per_loop);
    duration = loops * kTwoPi / nu;
  } else {
    const double fixed_t = std::get<FixedDuration>(constraint).duration;
    if (!(std::isfinite(fixed_t) && fixed_t > 0.0)) {
      throw Error(ErrorCode::InfeasibleConstraint, "design: fixed T must be > 0");
    }
    duration = fixed_t;
    nu = loops * kTwoPi / duration;
    g0 = nu * std::sqrt(per_loop / kTwoPi);
  }
  if (!(nu > 0.0 && std::isfinite(nu) && g0 > 0.0 && std::isfinite(g0))) {
    throw Error(ErrorCode::InfeasibleConstraint, "design: constraint has no finite solution");
  }
  if (!nontriviality(target_gamma)) {
    std::ostringstream msg;
    msg << "design: target phase " << target_gamma
        << " is a multiple of 2 pi; the resulting gate is trivial";
    emit(warnings, WarningCode::TrivialTarget, msg.str());
  }
  return PulseSpec(CircularShape{g0, nu, 0.0}, 0.0, duration);
}

double entangling_entropy(const Matrix4c& gate) {
  Eigen::Vector4cd psi = gate * Eigen::Vector4cd::Constant(0.5);
  psi /= psi.norm();
  Eigen::Matrix2cd coeffs;
  coeffs << psi(0), psi(1), psi(2), psi(3);
  const Eigen::Matrix2cd reduced = coeffs * coeffs.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(reduced, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double p = solver.eigenvalues()(k);
    if (p > 1e-300) entropy -= p * std::log2(p);
  }
  return std::max(entropy, 0.0);
}

double entangling_check(const GateReport& report) { return entangling_entropy(report.matrix); }

}  // namespace cavgate
