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

#include <random>

#include "geocodes/gf2.h"

namespace {

geocodes::BitMatrix random_matrix(size_t rows, size_t cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    geocodes::BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

void BM_Rank(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    auto m = random_matrix(n, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::gf2::rank(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed);

void BM_Nullspace(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    auto m = random_matrix(n / 2, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(geocodes::gf2::nullspace(m));
    }
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
