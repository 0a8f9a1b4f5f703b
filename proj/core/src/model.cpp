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

#include "cavgate/model.hpp"

#include <cmath>
#include <sstream>

namespace cavgate {

namespace {

constexpr double kResonanceTol = 1e-12;

double relative_scale(std::initializer_list<double> xs) {
  double s = 1.0;
  for (double x : xs) s = std::max(s, std::abs(x));
  return s;
}

Eigen::Matrix2cd sigma_plus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(1, 0) = 1.0;
  return m;
}

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

// |+><-| and |-><+| with |+-> = (|g> +- |e>)/sqrt(2).
Eigen::Matrix2cd plus_minus() {
  Eigen::Matrix2cd m;
  m << 0.5, -0.5, 0.5, -0.5;
  return m;
}

Eigen::Matrix2cd minus_plus() {
  Eigen::Matrix2cd m;
  m << 0.5, 0.5, -0.5, -0.5;
  return m;
}

CMatrix two_qubit_sum(const Eigen::Matrix2cd& op) {
  const CMatrix id = CMatrix::Identity(2, 2);
  return kron(op, id) + kron(id, op);
}

SparseCMatrix sparse(const CMatrix& dense) { return dense.sparseView(); }

void check_time(const PulseSpec& pulse, double t, const char* where) {
  const double tol = 1e-12 * std::max(1.0, pulse.duration());
  if (!(t >= -tol && t <= pulse.duration() + tol)) {
    std::ostringstream msg;
    msg << where << ": t = " << t << " outside [0, " << pulse.duration() << "]";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

}  // namespace

RamanParams::RamanParams(const RamanFields& f) : fields_(f) {
  const double s1 = relative_scale({f.omega_p, f.omega_s, f.omega_0});
  const double s2 = relative_scale({f.omega_g, f.omega_c, f.omega_0});
  if (std::abs((f.omega_p - f.omega_s) - f.omega_0) > kResonanceTol * s1) {
    throw Error(ErrorCode::InvalidArgument,
                "RamanParams: classical channel off Raman resonance (omega_p - omega_s != omega_0)");
  }
  if (std::abs((f.omega_g - f.omega_c) - f.omega_0) > kResonanceTol * s2) {
    throw Error(ErrorCode::InvalidArgument,
                "RamanParams: cavity channel off Raman resonance (omega_g - omega_c != omega_0)");
  }
  if (f.delta_1 == 0.0 || f.delta_2 == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "RamanParams: detunings must be nonzero");
  }
}

EffectiveCouplings effective_couplings(const RamanParams& params) {
  const RamanFields& f = params.fields();
  return {-(f.rabi_p * std::conj(f.rabi_s)) / f.delta_1,
          -(f.rabi_g * std::conj(f.kappa_e)) / f.delta_2};
}

std::string_view tier_name(HamiltonianTier tier) {
  switch (tier) {
    case HamiltonianTier::FullEffective: return "full";
    case HamiltonianTier::RotatingFrame: return "rotating";
    case HamiltonianTier::RWAEffective: return "rwa";
  }
  return "?";
}

HamiltonianAssembler::HamiltonianAssembler(HamiltonianTier tier, const FockSpace& space)
    : tier_(tier), space_(space) {
  const CMatrix a = annihilation(space);
  const CMatrix id = CMatrix::Identity(space.dim(), space.dim());
  switch (tier) {
    case HamiltonianTier::FullEffective:
      drive_ = sparse(kron(two_qubit_sum(sigma_x()), id));
      raise_ = sparse(kron(two_qubit_sum(sigma_plus()), a));
      break;
    case HamiltonianTier::RotatingFrame:
      plus_ = sparse(kron(0.5 * two_qubit_sum(plus_minus()), a));
      minus_ = sparse(kron(0.5 * two_qubit_sum(minus_plus()), a));
      [[fallthrough]];
    case HamiltonianTier::RWAEffective:
      diag_ = sparse(kron(0.5 * two_qubit_sum(sigma_x()), a));
      break;
  }
}

SparseCMatrix HamiltonianAssembler::at(const PulseSpec& pulse, double t) const {
  const cplx g = pulse.coupling(t);
  SparseCMatrix quantum;
  switch (tier_) {
    case HamiltonianTier::FullEffective: {
      quantum = g * raise_;
      SparseCMatrix h = SparseCMatrix(quantum.adjoint()) + quantum;
      if (pulse.r0() != 0.0) h += pulse.r0() * drive_;
      return h;
    }
    case HamiltonianTier::RotatingFrame: {
      const cplx phase = std::polar(1.0, 2.0 * pulse.r0() * t);
      quantum = g * diag_ + (g * phase) * plus_ - (g * std::conj(phase)) * minus_;
      break;
    }
    case HamiltonianTier::RWAEffective:
      quantum = g * diag_;
      break;
  }
  return SparseCMatrix(quantum.adjoint()) + quantum;
}

CMatrix hamiltonian(HamiltonianTier tier, const PulseSpec& pulse, double t,
                    const FockSpace& space) {
  check_time(pulse, t, "hamiltonian");
  return CMatrix(HamiltonianAssembler(tier, space).at(pulse, t));
}

CMatrix hamiltonian_full(const PulseSpec& pulse, double t, const FockSpace& space) {
  return hamiltonian(HamiltonianTier::FullEffective, pulse, t, space);
}

CMatrix hamiltonian_rotating(const PulseSpec& pulse, double t, const FockSpace& space) {
  return hamiltonian(HamiltonianTier::RotatingFrame, pulse, t, space);
}

CMatrix hamiltonian_rwa(const PulseSpec& pulse, double t, const FockSpace& space) {
  return hamiltonian(HamiltonianTier::RWAEffective, pulse, t, space);
}

std::array<int, 4> lambda_values() {
  return {branch_lambda(Branch::PlusPlus), branch_lambda(Branch::PlusMinus),
          branch_lambda(Branch::MinusPlus), branch_lambda(Branch::MinusMinus)};
}

Matrix4c sigma_x_basis_change() {
  Eigen::Matrix2cd h;
  h << 1.0, 1.0, 1.0, -1.0;
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = 0.5 * h(i, j) * h;
  return out;
}

}  // namespace cavgate
