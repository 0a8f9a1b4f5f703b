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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "cavgate/pulse.hpp"
#include "cavgate/types.hpp"

namespace cavgate::testing {

// Pade scaling-and-squaring exponential, independent of the library's
// eigendecomposition route.
inline CMatrix pade_expm(const CMatrix& generator) { return generator.exp(); }

inline double factorial(int n) { return std::tgamma(n + 1.0); }

// e^{-|alpha|^2/2} alpha^n / sqrt(n!), untruncated coefficients.
inline CVector coherent_coefficients(Amplitude alpha, int dim) {
  CVector out(dim);
  for (int n = 0; n < dim; ++n) {
    out(n) = std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) / std::sqrt(factorial(n));
  }
  return out;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx complex(double radius) {
    return std::polar(uniform(0.0, radius), uniform(-kPi, kPi));
  }

 private:
  std::mt19937_64 engine_;
};

// Piecewise-constant pulse whose last segment cancels the accumulated
// integral of g, so every branch returns to the origin.
inline PulseSpec random_closed_pulse(Rng& rng, int min_segments = 3, int max_segments = 8) {
  const int n = rng.integer(min_segments, max_segments);
  PiecewiseConstantShape shape;
  cplx moment{};
  double total = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double d = rng.uniform(0.2, 2.0);
    const cplx g = rng.complex(0.3);
    shape.segments.push_back({d, g});
    moment += d * g;
    total += d;
  }
  const double last = rng.uniform(0.5, 2.0);
  shape.segments.push_back({last, -moment / last});
  total += last;
  return PulseSpec(std::move(shape), 0.0, total);
}

// Closed-form phase of the circular family on branch ++ / --. A negative nu
// runs the loop the other way round and flips the sign.
inline double circle_gamma(double g0, double nu, double loops) {
  return std::copysign(loops * kTwoPi * g0 * g0 / (nu * nu), nu);
}

}  // namespace cavgate::testing
