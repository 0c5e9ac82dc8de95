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
#include "gbsbin/probability.hpp"
#include "gbsbin/sampling.hpp"

namespace {

using namespace gbsbin;

void BM_Encode(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const Graph g = erdos_renyi(m, 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(encode(g, 5.0));
}
BENCHMARK(BM_Encode)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactNu(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const GaussianEncoding enc = encode(erdos_renyi(m, 0.5, 5), 5.0);
    for (auto _ : state) benchmark::DoNotOptimize(exact_nu_distribution(enc));
}
BENCHMARK(BM_ExactNu)->DenseRange(6, 22, 4);

// Cold cache: the per-batch cost a featurization run actually pays.
void BM_SampleBatch(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const GaussianEncoding enc = encode(erdos_renyi(m, 0.5, 7), 5.0);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_binary(enc, 1000, ++seed));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}
BENCHMARK(BM_SampleBatch)->DenseRange(4, 12, 2);

}  // namespace
