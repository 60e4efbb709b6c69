/*
   Copyright 2026 The valfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference vs OpenMP kernels: the bounded curve search over F_p(u)
// and the exhaustive Hahn monomial square sweep.

#include <benchmark/benchmark.h>

#include "valfield/fields/hahn_sweep.hpp"
#include "valfield/valuation/appendix.hpp"

namespace {

using valfield::HahnSweepRange;

void BM_CurveSearchSerial(benchmark::State& state) {
    const auto p = state.range(0);
    const auto bound = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(valfield::valuation::search_curve_points_serial(p, bound));
}

void BM_CurveSearchParallel(benchmark::State& state) {
    const auto p = state.range(0);
    const auto bound = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(valfield::valuation::search_curve_points_parallel(p, bound));
}

HahnSweepRange sweep_range(const benchmark::State& state) {
    HahnSweepRange r;
    r.p = state.range(0);
    r.max_den_exp = static_cast<int>(state.range(1));
    return r;
}

void BM_HahnSweepSerial(benchmark::State& state) {
    const auto r = sweep_range(state);
    for (auto _ : state) benchmark::DoNotOptimize(valfield::sweep_hahn_squares_serial(r));
}

void BM_HahnSweepParallel(benchmark::State& state) {
    const auto r = sweep_range(state);
    for (auto _ : state) benchmark::DoNotOptimize(valfield::sweep_hahn_squares_parallel(r));
}

}  // namespace

BENCHMARK(BM_CurveSearchSerial)->Args({5, 2})->Args({5, 3})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CurveSearchParallel)->Args({5, 2})->Args({5, 3})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HahnSweepSerial)->Args({5, 2})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HahnSweepParallel)->Args({5, 2})->Args({7, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
