/**
 * Copyright 2026 The gbsbin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <cstddef>

#include "gbsbin/encoding.hpp"
#include "gbsbin/graphio.hpp"
#include "gbsbin/matfun.hpp"
#include "gbsbin/matrix.hpp"
#include "gbsbin/rng.hpp"

namespace {

using namespace gbsbin;

Matrix dense_symmetric(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            a(i, j) = a(j, i) = 2.0 * rng.next_double() - 1.0;
    return a;
}

void BM_Hafnian(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Matrix a = dense_symmetric(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(hafnian(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hafnian)->DenseRange(4, 16, 2)->Complexity();

void BM_Torontonian(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const GaussianEncoding enc = encode(erdos_renyi(m, 0.5, 2), 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(torontonian(enc.o));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Torontonian)->DenseRange(4, 14, 2)->Complexity();

}  // namespace

BENCHMARK_MAIN();
