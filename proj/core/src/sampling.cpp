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

#include "gbsbin/sampling.hpp"

#include <stdexcept>

#include "gbsbin/probability.hpp"

namespace gbsbin {

BinarySampler::BinarySampler(const GaussianEncoding& enc) : modes_(enc.modes()) {
    if (modes_ == 0 || modes_ > 26)
        throw std::invalid_argument("BinarySampler: 1 to 26 modes supported");
    prefixes_.reserve(modes_);
    std::vector<std::size_t> kept;
    for (std::size_t len = 1; len < modes_; ++len) {
        kept.push_back(len - 1);
        prefixes_.push_back(reduce(enc, kept));
    }
    prefixes_.push_back(enc);  // full-length prefix is the encoding itself
}

double BinarySampler::prefix_marginal(std::size_t len, std::uint64_t bits) {
    if (len == 0) return 1.0;
    if (len > modes_) throw std::invalid_argument("prefix_marginal: length out of range");
    const std::uint64_t key = (static_cast<std::uint64_t>(len) << 32) | bits;
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    BinaryEvent b;
    b.clicks.resize(len);
    for (std::size_t j = 0; j < len; ++j)
        b.clicks[j] = static_cast<std::uint8_t>((bits >> j) & 1u);
    const double p = binary_probability(prefixes_[len - 1], b);
    cache_.emplace(key, p);
    return p;
}

BinaryEvent BinarySampler::sample(SplitMix64& rng) {
    std::uint64_t bits = 0;
    double p_prefix = 1.0;
    for (std::size_t len = 0; len < modes_; ++len) {
        const double p_zero = prefix_marginal(len + 1, bits);
        double cond = p_zero / p_prefix;
        if (cond < 0.0 || cond > 1.0) {
            if (cond >= -1e-10 && cond <= 1.0 + 1e-10)
                cond = cond < 0.0 ? 0.0 : 1.0;
            else
                throw std::runtime_error("sample: chain-rule conditional outside [0, 1]");
        }
        if (rng.next_double() < cond) {
            p_prefix = p_zero;
        } else {
            bits |= std::uint64_t{1} << len;
            p_prefix = prefix_marginal(len + 1, bits);
        }
    }

    BinaryEvent b;
    b.clicks.resize(modes_);
    for (std::size_t j = 0; j < modes_; ++j)
        b.clicks[j] = static_cast<std::uint8_t>((bits >> j) & 1u);
    return b;
}

SampleBatch sample_binary(const GaussianEncoding& enc, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_binary: need at least one sample");
    BinarySampler sampler(enc);
    SampleBatch batch;
    batch.seed = seed;
    batch.modes = sampler.modes();
    batch.samples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        SplitMix64 rng = substream(seed, s);
        batch.samples.push_back(sampler.sample(rng));
    }
    return batch;
}

std::vector<double> empirical_mu(const SampleBatch& batch, int max_clicks) {
    if (batch.samples.empty()) throw std::invalid_argument("empirical_mu: empty batch");
    if (max_clicks < 0) throw std::invalid_argument("empirical_mu: negative click cap");
    std::vector<double> f(static_cast<std::size_t>(max_clicks) + 1, 0.0);
    for (const BinaryEvent& b : batch.samples) {
        const std::size_t clicks = b.count();
        if (clicks <= static_cast<std::size_t>(max_clicks)) f[clicks] += 1.0;
    }
    for (double& v : f) v /= static_cast<double>(batch.samples.size());
    return f;
}

std::vector<double> empirical_nu(const SampleBatch& batch) {
    if (batch.samples.empty()) throw std::invalid_argument("empirical_nu: empty batch");
    if (batch.modes < 5)
        throw std::invalid_argument("empirical_nu: at least 5 modes required");
    std::vector<double> f(32, 0.0);
    for (const BinaryEvent& b : batch.samples) {
        std::size_t index = 0;
        for (std::size_t j = 0; j < 5; ++j)
            index |= static_cast<std::size_t>(b.clicks[j]) << (4 - j);
        f[index] += 1.0;
    }
    for (double& v : f) v /= static_cast<double>(batch.samples.size());
    return f;
}

}  // namespace gbsbin
