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

#ifndef GBSBIN_RNG_HPP
#define GBSBIN_RNG_HPP

#include <cstdint>

namespace gbsbin {

/// SplitMix64 finalizer; also used on its own to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * @brief SplitMix64 pseudo random generator.
 *
 * A 64-bit counter generator: tiny state, trivially seedable, and every
 * (seed, index) substream is reproducible independent of draw order, which
 * is what sample batches need for order-independent parallel generation.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n); the modulo bias is negligible for the
    /// shuffle sizes used here (a few hundred elements).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Generator for the index-th substream of a master seed. Distinct indices
/// give decorrelated streams, so per-sample draws commute with batching.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
}

}  // namespace gbsbin

#endif
