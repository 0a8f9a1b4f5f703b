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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cavgate::detail {

CouplingGrid coupling_grid(const PulseSpec& pulse, double t_end, int uniform_panels) {
  uniform_panels = std::max(uniform_panels, 1);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(uniform_panels) + 1);
  for (int k = 0; k <= uniform_panels; ++k) {
    times.push_back(t_end * static_cast<double>(k) / uniform_panels);
  }
  const auto breaks = pulse.breakpoints();
  if (!breaks.empty()) {
    for (double b : breaks) {
      if (b > 0.0 && b < t_end) times.push_back(b);
    }
    std::sort(times.begin(), times.end());
    const double merge = 1e-12 * std::max(1.0, pulse.duration());
    std::vector<double> merged;
    merged.reserve(times.size());
    for (double t : times) {
      if (merged.empty() || t - merged.back() > merge) {
        merged.push_back(t);
      } else if (std::find(breaks.begin(), breaks.end(), t) != breaks.end()) {
        merged.back() = t;  // keep exact breakpoints
      }
    }
    merged.back() = t_end;
    times = std::move(merged);
  }

  CouplingGrid grid;
  const std::size_t panels = times.size() - 1;
  grid.g_start.resize(panels);
  grid.g_end.resize(panels);
  grid.integral.resize(panels + 1);
  grid.integral[0] = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    grid.g_start[k] = pulse.coupling(times[k]);
    grid.g_end[k] = pulse.coupling_left(times[k + 1]);
    const double h = times[k + 1] - times[k];
    grid.integral[k + 1] = grid.integral[k] + 0.5 * h * (grid.g_start[k] + grid.g_end[k]);
  }
  grid.times = std::move(times);
  return grid;
}

}  // namespace cavgate::detail
