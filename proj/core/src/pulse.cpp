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

#include "cavgate/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cavgate/errors.hpp"

namespace cavgate {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidArgument, "PulseSpec: " + msg);
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double duration_tolerance(double duration) { return 1e-12 * std::max(1.0, duration); }

struct Validator {
  double duration;

  void operator()(const CircularShape& c) const {
    if (!(std::isfinite(c.g0) && c.g0 > 0.0)) invalid("circular g0 must be > 0");
    if (!std::isfinite(c.nu) || c.nu == 0.0) invalid("circular nu must be finite and nonzero");
    if (!std::isfinite(c.phase0)) invalid("circular phase0 must be finite");
  }

  void operator()(const PiecewiseConstantShape& p) const {
    if (p.segments.empty()) invalid("piecewise-constant pulse needs at least one segment");
    double total = 0.0;
    for (const Segment& s : p.segments) {
      if (!(std::isfinite(s.duration) && s.duration > 0.0)) invalid("segment durations must be > 0");
      if (!finite(s.g)) invalid("segment coupling must be finite");
      total += s.duration;
    }
    if (std::abs(total - duration) > duration_tolerance(duration)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "segment durations sum to " << total << " but T = " << duration;
      invalid(msg.str());
    }
  }

  void operator()(const SampledShape& s) const {
    if (!(std::isfinite(s.dt) && s.dt > 0.0)) invalid("sampled dt must be > 0");
    if (s.values.size() < 2) invalid("sampled pulse needs at least two samples");
    for (cplx v : s.values) {
      if (!finite(v)) invalid("sampled values must be finite");
    }
    const double span = s.dt * static_cast<double>(s.values.size() - 1);
    if (std::abs(span - duration) > duration_tolerance(duration)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "samples span " << span << " but T = " << duration;
      invalid(msg.str());
    }
  }
};

cplx sampled_value(const SampledShape& s, double t) {
  const auto last = static_cast<double>(s.values.size() - 1);
  const double u = std::clamp(t / s.dt, 0.0, last);
  const auto k = std::min(static_cast<std::size_t>(u), s.values.size() - 2);
  const double frac = u - static_cast<double>(k);
  return (1.0 - frac) * s.values[k] + frac * s.values[k + 1];
}

}  // namespace

PulseSpec::PulseSpec(PulseShape shape, double r0, double duration)
    : shape_(std::move(shape)), r0_(r0), duration_(duration) {
  if (!(std::isfinite(duration) && duration > 0.0)) invalid("T must be > 0");
  if (!(std::isfinite(r0) && r0 >= 0.0)) invalid("r0 must be >= 0");
  std::visit(Validator{duration}, shape_);
}

PulseSpec PulseSpec::circular(double g0, double nu, double phase0, double loops, double r0) {
  if (!(std::isfinite(loops) && loops > 0.0)) invalid("loops must be > 0");
  if (!std::isfinite(nu) || nu == 0.0) invalid("circular nu must be finite and nonzero");
  return PulseSpec(CircularShape{g0, nu, phase0}, r0, loops * kTwoPi / std::abs(nu));
}

PulseSpec PulseSpec::zero(double duration, double r0) {
  return PulseSpec(PiecewiseConstantShape{{Segment{duration, cplx{}}}}, r0, duration);
}

PulseSpec PulseSpec::with_r0(double r0) const { return PulseSpec(shape_, r0, duration_); }

cplx PulseSpec::coupling(double t) const {
  t = std::clamp(t, 0.0, duration_);
  if (const auto* c = std::get_if<CircularShape>(&shape_)) {
    return std::polar(c->g0, c->phase0 - c->nu * t);
  }
  if (const auto* p = std::get_if<PiecewiseConstantShape>(&shape_)) {
    double end = 0.0;
    for (const Segment& s : p->segments) {
      end += s.duration;
      if (t < end) return s.g;
    }
    return p->segments.back().g;
  }
  return sampled_value(std::get<SampledShape>(shape_), t);
}

cplx PulseSpec::coupling_left(double t) const {
  const auto* p = std::get_if<PiecewiseConstantShape>(&shape_);
  if (p == nullptr) return coupling(t);
  t = std::clamp(t, 0.0, duration_);
  double end = 0.0;
  for (const Segment& s : p->segments) {
    end += s.duration;
    if (t <= end) return s.g;
  }
  return p->segments.back().g;
}

std::vector<double> PulseSpec::breakpoints() const {
  std::vector<double> out;
  if (const auto* p = std::get_if<PiecewiseConstantShape>(&shape_)) {
    double end = 0.0;
    for (std::size_t k = 0; k + 1 < p->segments.size(); ++k) {
      end += p->segments[k].duration;
      out.push_back(end);
    }
  }
  return out;
}

}  // namespace cavgate
