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

#include <benchmark/benchmark.h>

#include "cavgate/evolve.hpp"
#include "cavgate/fock.hpp"
#include "cavgate/gate.hpp"
#include "cavgate/phase.hpp"

namespace {

using namespace cavgate;

void BM_Displacement(benchmark::State& state) {
  const FockSpace space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(displacement({0.4, -0.3}, space));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Displacement)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_PropagateDisplacement(benchmark::State& state) {
  const PulseSpec pulse = PulseSpec::circular(0.1, 0.2);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_displacement(pulse, Branch::PlusPlus, steps));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_PropagateDisplacement)->Arg(1000)->Arg(100000);

void BM_TotalPhase(benchmark::State& state) {
  const PulseSpec pulse = PulseSpec::circular(0.1, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(total_phase(pulse, Branch::PlusPlus));
}
BENCHMARK(BM_TotalPhase)->Unit(benchmark::kMillisecond);

void BM_NumericGate(benchmark::State& state) {
  const PulseSpec pulse = PulseSpec::circular(0.1, 0.2);
  const FockSpace space(static_cast<int>(state.range(0)));
  const auto method = state.range(1) == 0 ? GateMethod::NumericRWA : GateMethod::NumericRotating;
  const double dt = pulse.duration() / 4000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gate_matrix(pulse.with_r0(1.0), space, method, dt));
  }
}
BENCHMARK(BM_NumericGate)
    ->ArgsProduct({{16, 32}, {0, 1}})
    ->ArgNames({"dim", "rotating"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
