// Copyright 2026 The Geocodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "geocodes/cacode.h"

namespace {

void BM_SingleSeedWeight(benchmark::State &state) {
    auto L = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::single_seed_weight(L));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SingleSeedWeight)->Arg(101)->Arg(1001)->Arg(4001)->Arg(10001)->Complexity(benchmark::oNSquared);

void BM_ExhaustiveDistance(benchmark::State &state) {
    auto L = static_cast<size_t>(state.range(0));
    geocodes::ExhaustiveOptions opts;
    opts.threads = static_cast<size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::exhaustive_distance(L, opts));
    }
    state.counters["messages"] = static_cast<double>(uint64_t{1} << (L - 1));
}
BENCHMARK(BM_ExhaustiveDistance)->Args({15, 1})->Args({19, 1})->Args({23, 1})->Args({23, 2})->Unit(benchmark::kMillisecond);

void BM_SierpinskiClosedForm(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::sierpinski_weight_closed_form(static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_SierpinskiClosedForm)->Arg(10)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
