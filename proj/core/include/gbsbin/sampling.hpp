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

#ifndef GBSBIN_SAMPLING_HPP
#define GBSBIN_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gbsbin/encoding.hpp"
#include "gbsbin/matfun.hpp"
#include "gbsbin/rng.hpp"

namespace gbsbin {

struct SampleBatch {
    std::vector<BinaryEvent> samples;
    std::uint64_t seed = 0;
    std::size_t modes = 0;
    int graph_id = 0;
};

/**
 * Exact chain-rule sampler over binary detector outcomes.  Mode k is
 * drawn from the conditional p(prefix, b_k = 0) / p(prefix), where both
 * marginals come from the reduced state on the first k+1 modes, so every
 * sample carries probability exactly binary_probability(enc, b).
 *
 * Prefix marginals are cached across samples; one sampler instance can
 * serve many seeds.  Not thread-safe (shared cache).
 */
class BinarySampler {
  public:
    explicit BinarySampler(const GaussianEncoding& enc);

    // One sample; consumes exactly M uniforms from rng.
    BinaryEvent sample(SplitMix64& rng);

    // Marginal probability of the prefix pattern over the first `len`
    // modes, bit j of `bits` holding mode j.  Cached.
    double prefix_marginal(std::size_t len, std::uint64_t bits);

    std::size_t modes() const { return modes_; }

  private:
    std::size_t modes_;
    std::vector<GaussianEncoding> prefixes_;  // index len-1: first len modes
    std::unordered_map<std::uint64_t, double> cache_;
};

// Batch of S samples; sample s uses substream(seed, s), so batches are
// reproducible and order-independent.
SampleBatch sample_binary(const GaussianEncoding& enc, std::size_t count, std::uint64_t seed);

// Click-count frequencies f_0..f_N; samples with more than N clicks
// count toward no bin, so sum f_i <= 1.
std::vector<double> empirical_mu(const SampleBatch& batch, int max_clicks);

// Frequencies of the 32 first-five-mode patterns, indexed with mode 0 as
// the most significant bit.
std::vector<double> empirical_nu(const SampleBatch& batch);

}  // namespace gbsbin

#endif  // GBSBIN_SAMPLING_HPP
