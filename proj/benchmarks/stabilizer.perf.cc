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

#include <numeric>

#include "geocodes/stabilizer.h"
#include "geocodes/surface.h"

namespace {

void BM_MinDistanceToric3(benchmark::State &state) {
    auto code = geocodes::toric_code(3);
    geocodes::MinDistanceOptions opts;
    opts.threads = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::min_distance_bruteforce(code, opts));
    }
}
BENCHMARK(BM_MinDistanceToric3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CorrectableHalfLattice(benchmark::State &state) {
    auto code = geocodes::planar_surface_code(static_cast<size_t>(state.range(0)));
    std::vector<size_t> half(code.n() / 2);
    std::iota(half.begin(), half.end(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::correctable_region(code, half));
    }
}
BENCHMARK(BM_CorrectableHalfLattice)->Arg(5)->Arg(9)->Arg(15);

void BM_EntropyRegion(benchmark::State &state) {
    auto code = geocodes::toric_code(static_cast<size_t>(state.range(0)));
    std::vector<size_t> half(code.n() / 2);
    std::iota(half.begin(), half.end(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::entropy_region(code, half));
    }
}
BENCHMARK(BM_EntropyRegion)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
