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

#include <gtest/gtest.h>

#include "cavgate/errors.hpp"
#include "cavgate/fock.hpp"
#include "support.hpp"

namespace cavgate {
namespace {

using testing::coherent_coefficients;
using testing::max_abs_diff;
using testing::pade_expm;

TEST(FockSpace, RejectsTinyDimension) {
  EXPECT_THROW(FockSpace(1), Error);
  EXPECT_THROW(FockSpace(-3), Error);
  EXPECT_EQ(FockSpace(2).dim(), 2);
}

TEST(Ladder, SmallestSpace) {
  const CMatrix a = annihilation(FockSpace(2));
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  EXPECT_EQ(a, expected);
}

TEST(Ladder, ThreeLevels) {
  const CMatrix a = annihilation(FockSpace(3));
  EXPECT_DOUBLE_EQ(a(0, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
  int nonzero = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) nonzero += a.data()[i] != cplx{};
  EXPECT_EQ(nonzero, 2);
}

TEST(Ladder, NumberOperatorDiagonal) {
  const FockSpace space(7);
  const CMatrix n = creation(space) * annihilation(space);
  EXPECT_LT(max_abs_diff(n, number_operator(space)), 1e-14);
  for (int k = 0; k < space.dim(); ++k) EXPECT_DOUBLE_EQ(n(k, k).real(), k);
  EXPECT_LT(max_abs_diff(creation(space), annihilation(space).adjoint()), 1e-15);
}

TEST(Displacement, ZeroIsIdentity) {
  const FockSpace space(10);
  EXPECT_LT(max_abs_diff(displacement(0.0, space), CMatrix::Identity(10, 10)), 1e-15);
}

TEST(Displacement, InverseProperty) {
  const FockSpace space(32);
  const Amplitude alpha = std::polar(0.5, 0.7);
  const CMatrix product = displacement(alpha, space) * displacement(-alpha, space);
  EXPECT_LT(max_abs_diff(product, CMatrix::Identity(32, 32)), 1e-10);
}

TEST(Displacement, VacuumColumnIsCoherentState) {
  const FockSpace space(32);
  const Amplitude alpha = std::polar(0.5, -1.1);
  const CVector column = displacement(alpha, space).col(0);
  EXPECT_LT(max_abs_diff(column, coherent_coefficients(alpha, 32)), 1e-10);
}

TEST(Displacement, MatchesPadeExponential) {
  const FockSpace space(24);
  for (const Amplitude alpha : {Amplitude(0.3, 0.0), Amplitude(-0.2, 0.9), Amplitude(1.1, -0.4)}) {
    const CMatrix generator = alpha * creation(space) - std::conj(alpha) * annihilation(space);
    EXPECT_LT(max_abs_diff(displacement(alpha, space), pade_expm(generator)), 1e-11) << alpha;
  }
}

TEST(Displacement, UnitaryEvenWhenTruncated) {
  const FockSpace space(6);
  Warnings warnings;
  const CMatrix d = displacement({2.0, 1.0}, space, &warnings);
  EXPECT_LT(max_abs_diff(d.adjoint() * d, CMatrix::Identity(6, 6)), 1e-12);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings.front().code, WarningCode::Truncation);
}

TEST(ComposePhase, ClosedForms) {
  EXPECT_DOUBLE_EQ(compose_phase(1.0, kI), -1.0);
  for (const Amplitude a : {Amplitude(0.3, 0.4), Amplitude(-2.0, 1.0), Amplitude(0.0, -0.7)}) {
    EXPECT_DOUBLE_EQ(compose_phase(a, a), 0.0);
  }
}

TEST(ComposePhase, MatchesMatrixProduct) {
  const FockSpace space(32);
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Amplitude a = rng.complex(0.5);
    const Amplitude b = rng.complex(0.5);
    const CMatrix lhs = displacement(a, space) * displacement(b, space);
    const CMatrix rhs = std::exp(kI * compose_phase(a, b)) * displacement(a + b, space);
    // Truncation only disturbs the top Fock levels; compare the low block.
    EXPECT_LT(max_abs_diff(lhs.topLeftCorner(16, 16), rhs.topLeftCorner(16, 16)), 1e-8)
        << a << ' ' << b;
  }
}

TEST(CoherentState, VacuumAndNorm) {
  const FockSpace space(12);
  const CVector vacuum = coherent_state(0.0, space);
  EXPECT_DOUBLE_EQ(std::abs(vacuum(0)), 1.0);
  EXPECT_DOUBLE_EQ(vacuum.tail(11).norm(), 0.0);
  EXPECT_NEAR(coherent_state({1.3, -0.6}, space).norm(), 1.0, 1e-12);
}

TEST(CoherentState, EigenvectorOfAnnihilation) {
  const FockSpace space(32);
  const Amplitude alpha = std::polar(0.5, 2.0);
  const CVector psi = coherent_state(alpha, space);
  const cplx mean = psi.dot(annihilation(space) * psi);
  EXPECT_LT(std::abs(mean - alpha), 1e-8);
}

TEST(CoherentState, WarnsOutsideCutoff) {
  Warnings warnings;
  coherent_state(3.0, FockSpace(8), &warnings);
  EXPECT_FALSE(warnings.empty());
  EXPECT_TRUE(amplitude_fits(1.0, FockSpace(4)));
  EXPECT_FALSE(amplitude_fits(1.01, FockSpace(4)));
}

}  // namespace
}  // namespace cavgate
