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

#include <variant>
#include <vector>

#include "cavgate/types.hpp"

namespace cavgate {

/// g(t) = g0 exp(i (phase0 - nu t)): a circular loop in phase space with
/// period 2 pi / |nu|.
struct CircularShape {
  double g0 = 0.0;
  double nu = 0.0;
  double phase0 = 0.0;
};

struct Segment {
  double duration = 0.0;
  cplx g{};
};

/// Right-continuous piecewise-constant coupling.
struct PiecewiseConstantShape {
  std::vector<Segment> segments;
};

/// Uniformly sampled coupling, linearly interpolated. Spans dt * (n - 1).
struct SampledShape {
  double dt = 0.0;
  std::vector<cplx> values;
};

using PulseShape = std::variant<CircularShape, PiecewiseConstantShape, SampledShape>;

/// Quantum coupling g(t), constant classical drive r0 (real) and cycle
/// duration T. Validated at construction; immutable afterwards.
class PulseSpec {
 public:
  PulseSpec(PulseShape shape, double r0, double duration);

  /// Circular pulse running `loops` full periods.
  static PulseSpec circular(double g0, double nu, double phase0 = 0.0, double loops = 1.0,
                            double r0 = 0.0);

  /// g(t) = 0 for the whole cycle.
  static PulseSpec zero(double duration, double r0 = 0.0);

  const PulseShape& shape() const noexcept { return shape_; }
  double r0() const noexcept { return r0_; }
  double duration() const noexcept { return duration_; }

  /// Same shape and duration, different classical drive.
  PulseSpec with_r0(double r0) const;

  /// g(t), right-continuous at piecewise-constant boundaries. Arguments
  /// outside [0, T] are clamped.
  cplx coupling(double t) const;

  /// lim_{s -> t^-} g(s); equals coupling(t) for continuous shapes.
  cplx coupling_left(double t) const;

  /// Interior discontinuities of g (segment boundaries), ascending.
  std::vector<double> breakpoints() const;

  bool is_piecewise_constant() const noexcept {
    return std::holds_alternative<PiecewiseConstantShape>(shape_);
  }

 private:
  PulseShape shape_;
  double r0_;
  double duration_;
};

}  // namespace cavgate
