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
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace cavgate {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix4c = Eigen::Matrix4cd;

/// Dimensionless coherent amplitude of the cavity mode.
using Amplitude = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cplx kI{0.0, 1.0};

/// Computational branch |k>_1|l>_2 in the sigma^x product basis. The
/// enumerator order is the branch order used for every 4x4 gate matrix.
enum class Branch { PlusPlus = 0, PlusMinus = 1, MinusPlus = 2, MinusMinus = 3 };

inline constexpr std::array<Branch, 4> kBranches{
    Branch::PlusPlus, Branch::PlusMinus, Branch::MinusPlus, Branch::MinusMinus};

constexpr int branch_index(Branch b) { return static_cast<int>(b); }

/// Eigenvalue of sigma_1^x + sigma_2^x on the branch.
constexpr int branch_lambda(Branch b) {
  switch (b) {
    case Branch::PlusPlus: return 2;
    case Branch::MinusMinus: return -2;
    default: return 0;
  }
}

constexpr std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::PlusPlus: return "++";
    case Branch::PlusMinus: return "+-";
    case Branch::MinusPlus: return "-+";
    case Branch::MinusMinus: return "--";
  }
  return "?";
}

}  // namespace cavgate
