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

#include "cavgate/fock.hpp"

#include <cmath>
#include <sstream>

#include "cavgate/linalg.hpp"

namespace cavgate {

FockSpace::FockSpace(int dim) : dim_(dim) {
  if (dim < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "FockSpace: dim must be >= 2, got " + std::to_string(dim));
  }
}

CMatrix annihilation(const FockSpace& space) {
  const int n = space.dim();
  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

CMatrix creation(const FockSpace& space) { return annihilation(space).adjoint(); }

CMatrix number_operator(const FockSpace& space) {
  const int n = space.dim();
  CMatrix num = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) num(k, k) = static_cast<double>(k);
  return num;
}

bool amplitude_fits(Amplitude alpha, const FockSpace& space) {
  return std::norm(alpha) <= space.dim() / 4.0;
}

namespace {

void check_amplitude(Amplitude alpha, const FockSpace& space, Warnings* warnings,
                     const char* where) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw Error(ErrorCode::InvalidArgument, std::string(where) + ": non-finite amplitude");
  }
  if (!amplitude_fits(alpha, space)) {
    std::ostringstream msg;
    msg << where << ": |alpha|^2 = " << std::norm(alpha) << " exceeds dim/4 = "
        << space.dim() / 4.0 << "; truncated result is unreliable";
    emit(warnings, WarningCode::Truncation, msg.str());
  }
}

}  // namespace

CMatrix displacement(Amplitude alpha, const FockSpace& space, Warnings* warnings) {
  check_amplitude(alpha, space, warnings, "displacement");
  const CMatrix a = annihilation(space);
  const CMatrix generator = kI * (alpha * a.adjoint() - std::conj(alpha) * a);
  return expm_hermitian(generator, 1.0);
}

double compose_phase(Amplitude alpha, Amplitude beta) {
  return (alpha * std::conj(beta)).imag();
}

CVector coherent_state(Amplitude alpha, const FockSpace& space, Warnings* warnings) {
  check_amplitude(alpha, space, warnings, "coherent_state");
  const int n = space.dim();
  CVector psi(n);
  psi(0) = std::exp(-0.5 * std::norm(alpha));
  for (int k = 1; k < n; ++k) psi(k) = psi(k - 1) * alpha / std::sqrt(static_cast<double>(k));
  return psi / psi.norm();
}

}  // namespace cavgate
