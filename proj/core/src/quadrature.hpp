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

#include <vector>

#include "cavgate/pulse.hpp"

namespace cavgate::detail {

/// Panels over [0, t_end] for trapezoidal quadrature of pulse integrals.
/// Uniform panels, plus every piecewise-constant breakpoint so that each
/// panel sees a constant (or smooth) coupling. On panel k the coupling is
/// g_start[k] at times[k] (right limit) and g_end[k] at times[k+1] (left
/// limit). `integral[k]` is the cumulative trapezoidal integral of g over
/// [0, times[k]], exact for piecewise-constant pulses.
struct CouplingGrid {
  std::vector<double> times;
  std::vector<cplx> g_start;
  std::vector<cplx> g_end;
  std::vector<cplx> integral;

  std::size_t panels() const { return g_start.size(); }
};

CouplingGrid coupling_grid(const PulseSpec& pulse, double t_end, int uniform_panels);

}  // namespace cavgate::detail
