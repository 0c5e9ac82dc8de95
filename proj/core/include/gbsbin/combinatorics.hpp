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

#ifndef GBSBIN_COMBINATORICS_HPP
#define GBSBIN_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbsbin {

// Counting stays in exact integer arithmetic; the values involved
// overflow 64 bits at the mode counts this pipeline targets.
using BigInt = boost::multiprecision::cpp_int;

/**
 * Samples required to reconstruct a distribution over `omega` outcomes
 * to L1 accuracy epsilon with failure probability at most delta:
 * 2 (ln2 * omega + ln(1/delta)) / epsilon^2, rounded to the nearest
 * integer and at least 1.  Domain: omega >= 1, 0 < epsilon < 2,
 * 0 < delta < 1.
 */
long long sample_size(long long omega, double epsilon, double delta);

// C(n, k), exact; 0 when k > n.
BigInt binomial(unsigned long long n, unsigned long long k);

// Weak compositions of n into m parts: C(n + m - 1, m - 1).
BigInt count_weak_compositions(unsigned long long n, unsigned long long m);

// Partitions of n into at most parts_max parts (equivalently, parts of
// size at most parts_max), by dynamic programming.
BigInt count_partitions_exact(unsigned long long n, unsigned long long parts_max);

// Partitions of n into exactly m positive parts.
BigInt count_partitions_with_parts(unsigned long long n, unsigned long long m);

/**
 * Asymptotic count of partitions of n into exactly m parts in the
 * regime m <= n <= 2m (where every part is 1 or 2 plus a remainder):
 * exp(pi sqrt(2(n - m)/3)) / (4 sqrt(3) (n - m)).  Outside the regime,
 * or with n - m <= 1, throws.
 */
double partitions_asymptotic(unsigned long long n, unsigned long long m);

// sum_i C(m, i) over i = 0..m, cross-checked against 2^m.
BigInt count_binary_events(unsigned m);

/**
 * Growth check for the number of photon-number outcomes: with
 * n = floor(sqrt(m)) photons over m modes, the weak-composition count
 * C(n + m - 1, m - 1) must reach n^n for every m in [m_lo, m_hi].
 */
struct GrowthCheckReport {
    unsigned m_lo = 0;
    unsigned m_hi = 0;
    std::vector<unsigned> violations;
    bool ok() const { return violations.empty(); }
};

GrowthCheckReport verify_composition_growth(unsigned m_lo, unsigned m_hi);

/**
 * Polynomial-growth check for binomials: C(n, k) / n^k must approach
 * 1/k!.  Verifies the ratio lies within 1% of 1/k! at n = n_max and is
 * nondecreasing for n >= k^2.
 */
struct BinomialRatioReport {
    unsigned k = 0;
    unsigned long long n_max = 0;
    double ratio_at_top = 0.0;
    double target = 0.0;
    bool within_tolerance = false;
    bool monotone = false;
    unsigned long long first_violation_n = 0;
    bool ok() const { return within_tolerance && monotone; }
};

BinomialRatioReport verify_binomial_ratio(unsigned k, unsigned long long n_max);

}  // namespace gbsbin

#endif  // GBSBIN_COMBINATORICS_HPP
