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

#include <Eigen/SparseCore>

#include "cavgate/types.hpp"

namespace cavgate {

using SparseCMatrix = Eigen::SparseMatrix<cplx>;

/// exp(-i H t) for Hermitian H, via a Hermitian eigendecomposition. The
/// result is unitary to working precision for any t.
CMatrix expm_hermitian(const CMatrix& hamiltonian, double t);

/// Advance the columns of `states` by exp(-i H dt) in place. Uses a Taylor
/// series run to convergence, with the step split so each sub-step has
/// ||H||_1 * h <= 0.5.
void apply_step(const SparseCMatrix& hamiltonian, double dt, CMatrix& states);

/// Largest |m_ij|.
double max_abs(const CMatrix& m);

/// max |(U^dagger U - 1)_ij|.
double unitarity_defect(const CMatrix& u);

/// max |(H - H^dagger)_ij|.
double hermiticity_defect(const CMatrix& h);

/// Kronecker product of two dense matrices.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace cavgate
