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

#include <array>
#include <string_view>
#include <utility>

#include "cavgate/fock.hpp"
#include "cavgate/linalg.hpp"
#include "cavgate/pulse.hpp"
#include "cavgate/types.hpp"

namespace cavgate {

/// Two-channel Raman inputs. Rabi-style amplitudes are the dipole-field
/// scalar products, supplied directly.
struct RamanFields {
  double omega_p = 0.0;
  double omega_s = 0.0;
  double omega_g = 0.0;
  double omega_c = 0.0;
  double omega_0 = 0.0;
  cplx rabi_p{};
  cplx rabi_s{};
  cplx rabi_g{};
  cplx kappa_e{};
  double delta_1 = 0.0;
  double delta_2 = 0.0;
};

/// Validated Raman parameters: both channels on two-photon resonance with
/// the g-e splitting, nonzero single-photon detunings.
class RamanParams {
 public:
  explicit RamanParams(const RamanFields& fields);

  const RamanFields& fields() const noexcept { return fields_; }

 private:
  RamanFields fields_;
};

struct EffectiveCouplings {
  cplx r;
  cplx g;
};

/// r = -(rabi_p conj(rabi_s)) / delta_1,  g = -(rabi_g conj(kappa_e)) / delta_2.
EffectiveCouplings effective_couplings(const RamanParams& params);

enum class HamiltonianTier { FullEffective, RotatingFrame, RWAEffective };

std::string_view tier_name(HamiltonianTier tier);

// Composite space layout: qubit1 (x) qubit2 (x) Fock(dim), each qubit in the
// bare {|g>, |e>} basis, so the index of |q1 q2, n> is (2 q1 + q2) dim + n.

/// Effective two-channel Hamiltonian: classical drive r0 plus the quantum channel.
CMatrix hamiltonian_full(const PulseSpec& pulse, double t, const FockSpace& space);

/// Interaction picture of the quantum channel w.r.t. H0 = r0 (sigma_1^x + sigma_2^x),
/// keeping the terms that oscillate at 2 r0.
CMatrix hamiltonian_rotating(const PulseSpec& pulse, double t, const FockSpace& space);

/// (1/2)(g a + g^* a^dagger)(sigma_1^x + sigma_2^x).
CMatrix hamiltonian_rwa(const PulseSpec& pulse, double t, const FockSpace& space);

CMatrix hamiltonian(HamiltonianTier tier, const PulseSpec& pulse, double t,
                    const FockSpace& space);

/// Eigenvalues of sigma_1^x + sigma_2^x in branch order (++, +-, -+, --).
std::array<int, 4> lambda_values();

/// Columns are |++>, |+->, |-+>, |--> expressed in the bare
/// {|gg>, |ge>, |eg>, |ee>} basis; real, symmetric and self-inverse.
Matrix4c sigma_x_basis_change();

/// Precomputed sparse operator pieces for one tier on one space, for
/// repeated evaluation of H(t) inside a propagator.
class HamiltonianAssembler {
 public:
  HamiltonianAssembler(HamiltonianTier tier, const FockSpace& space);

  HamiltonianTier tier() const noexcept { return tier_; }
  const FockSpace& space() const noexcept { return space_; }
  Eigen::Index size() const noexcept { return 4 * space_.dim(); }

  SparseCMatrix at(const PulseSpec& pulse, double t) const;

 private:
  HamiltonianTier tier_;
  FockSpace space_;
  SparseCMatrix drive_;    // (sigma_1^x + sigma_2^x) (x) 1
  SparseCMatrix raise_;    // (sigma_1^+ + sigma_2^+) (x) a
  SparseCMatrix diag_;     // (1/2) sum_j (|+><+| - |-><-|)_j (x) a
  SparseCMatrix plus_;     // (1/2) sum_j |+><-|_j (x) a
  SparseCMatrix minus_;    // (1/2) sum_j |-><+|_j (x) a
};

}  // namespace cavgate
