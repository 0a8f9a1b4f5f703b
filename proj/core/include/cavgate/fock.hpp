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

#include "cavgate/errors.hpp"
#include "cavgate/types.hpp"

namespace cavgate {

/// Truncated single-mode Fock space spanned by |0>, ..., |dim-1>.
class FockSpace {
 public:
  explicit FockSpace(int dim);

  int dim() const noexcept { return dim_; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int dim_;
};

/// Lowering operator a with <n-1|a|n> = sqrt(n).
CMatrix annihilation(const FockSpace& space);

/// Raising operator a^dagger.
CMatrix creation(const FockSpace& space);

/// a^dagger a, diagonal (0, 1, ..., dim-1).
CMatrix number_operator(const FockSpace& space);

/// True when |alpha|^2 <= dim/4, i.e. the Poisson tail beyond the cutoff is
/// negligible for a coherent state of that amplitude.
bool amplitude_fits(Amplitude alpha, const FockSpace& space);

/// D(alpha) = exp(alpha a^dagger - alpha^* a) in the truncated space.
///
/// The generator is anti-Hermitian, so the exponential is computed as
/// exp(-i K) with K = i(alpha a^dagger - alpha^* a) Hermitian; the result is
/// unitary to working precision regardless of truncation. Emits a
/// Truncation warning when |alpha|^2 > dim/4.
CMatrix displacement(Amplitude alpha, const FockSpace& space, Warnings* warnings = nullptr);

/// Phase Im(alpha beta^*) in D(alpha) D(beta) = exp(i Im(alpha beta^*)) D(alpha + beta).
double compose_phase(Amplitude alpha, Amplitude beta);

/// Coherent state e^{-|alpha|^2/2} sum_n alpha^n / sqrt(n!) |n>, renormalized
/// after truncation.
CVector coherent_state(Amplitude alpha, const FockSpace& space, Warnings* warnings = nullptr);

}  // namespace cavgate
