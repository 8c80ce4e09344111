// Copyright 2026 The rotframe Authors
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

#include "rotframe/basis.hpp"
#include "rotframe/eigensolver.hpp"
#include "rotframe/ionization.hpp"
#include "rotframe/pseudo_hamiltonian.hpp"
#include "rotframe/transitions.hpp"

namespace {

using namespace rotframe;

const LaserField kField = LaserField::from_lab_units(5e-6, 2.37);

void BM_RadialTable(benchmark::State& state) {
  const int n0 = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RadialTable(n0));
}
BENCHMARK(BM_RadialTable)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto basis = std::make_shared<const BasisSet>(static_cast<int>(state.range(0)));
  RadialTable::shared(basis->n0());
  for (auto _ : state) benchmark::DoNotOptimize(assemble(basis, kField));
}
BENCHMARK(BM_Assemble)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& state) {
  const auto h = assemble(BasisSet(static_cast<int>(state.range(0))), kField);
  DiagonalizeOptions opts;
  opts.split_blocks = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h, opts));
}
BENCHMARK(BM_Diagonalize)
    ->Args({10, 1})
    ->Args({18, 1})
    ->Args({18, 0})
    ->Unit(benchmark::kMillisecond);

void BM_TransitionMatrix(benchmark::State& state) {
  const auto d = diagonalize(assemble(BasisSet(static_cast<int>(state.range(0))), kField));
  for (auto _ : state) benchmark::DoNotOptimize(transition_matrix(d));
}
BENCHMARK(BM_TransitionMatrix)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Ionize(benchmark::State& state) {
  const auto d = diagonalize(assemble(BasisSet(static_cast<int>(state.range(0))), kField));
  const std::size_t i = track_state(d, {1, 0, 0}).index;
  for (auto _ : state) benchmark::DoNotOptimize(ionize(d, i));
}
BENCHMARK(BM_Ionize)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_ContinuumMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(continuum_radial_moment(0.3, 7, 12, 6, 3));
}
BENCHMARK(BM_ContinuumMoment)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
