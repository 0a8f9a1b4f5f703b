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

#include "cavgate/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace cavgate {

CMatrix expm_hermitian(const CMatrix& hamiltonian, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian);
  const CMatrix& v = solver.eigenvectors();
  CVector phases(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  return v * phases.asDiagonal() * v.adjoint();
}

namespace {

double norm1(const SparseCMatrix& h) {
  double best = 0.0;
  for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
    double sum = 0.0;
    for (SparseCMatrix::InnerIterator it(h, col); it; ++it) sum += std::abs(it.value());
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

void apply_step(const SparseCMatrix& hamiltonian, double dt, CMatrix& states) {
  const double scale = norm1(hamiltonian) * std::abs(dt);
  if (scale == 0.0) return;
  const int substeps = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
  const double h = dt / substeps;

  CMatrix term(states.rows(), states.cols());
  CMatrix next(states.rows(), states.cols());
  for (int s = 0; s < substeps; ++s) {
    term = states;
    const double base = states.norm();
    for (int k = 1; k <= 60; ++k) {
      next.noalias() = hamiltonian * term;
      term = next * cplx(0.0, -h / k);
      states += term;
      if (term.norm() <= 1e-18 * base) break;
    }
  }
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()));
}

double hermiticity_defect(const CMatrix& h) {
  return max_abs(h - h.adjoint());
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace cavgate
