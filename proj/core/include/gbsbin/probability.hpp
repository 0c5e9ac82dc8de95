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

#ifndef GBSBIN_PROBABILITY_HPP
#define GBSBIN_PROBABILITY_HPP

#include <cstddef>
#include <vector>

#include "gbsbin/encoding.hpp"
#include "gbsbin/matfun.hpp"

namespace gbsbin {

// Largest total photon number accepted by the hafnian-based routines.
inline constexpr int kMaxPnrTotal = 20;

// Event budget for the photon-number enumeration in
// verify_binary_pnr_identity.
inline constexpr std::size_t kMaxIdentityEvents = 100000;

// Binary pattern for a feature-style index: mode 0 is the most
// significant of the `modes` bits.
BinaryEvent binary_event_from_index(std::size_t index, std::size_t modes);

/**
 * Probability of the photon-number outcome n:
 * Haf((cA)_n)^2 / (n! sqrt(det Q)).  Odd totals are exactly zero and
 * return early.  Requires a full (non-reduced) encoding and a total of
 * at most kMaxPnrTotal photons.
 */
double pnr_probability(const GaussianEncoding& enc, const PnrEvent& n);

/**
 * Probability of the binary outcome b:
 * torontonian(induce_binary(O, b)) / sqrt(det Q).  Works for reduced
 * encodings, which makes it the marginal probability of b over the kept
 * modes.  Results within 1e-12 below zero are clamped to zero (rounding
 * in the alternating torontonian sum); anything further out throws.
 */
double binary_probability(const GaussianEncoding& enc, const BinaryEvent& b);

/**
 * All 2^M binary probabilities, indexed with mode 0 as the most
 * significant bit.  Enumeration cost grows as 3^M, so M <= 16 is
 * enforced.
 */
std::vector<double> exact_binary_distribution(const GaussianEncoding& enc);

/**
 * Probabilities f_0..f_N of seeing exactly i clicks, left raw:
 * sum_i f_i <= 1 and the deficit is the mass beyond N clicks.
 * The enumeration budget sum_{i<=N} C(M,i) 2^i <= 10^8 is enforced.
 */
std::vector<double> exact_mu_distribution(const GaussianEncoding& enc, int max_clicks);

// The 32 marginal probabilities of the first five modes, indexed with
// mode 0 as the most significant bit.  Requires M >= 5.
std::vector<double> exact_nu_distribution(const GaussianEncoding& enc);

/**
 * Consistency check between the two detector models: the binary
 * probability of b must equal the sum of photon-number probabilities
 * over all outcomes with positive counts exactly on the clicked modes.
 * partial_sum accumulates that series up to total photon number
 * `photon_cutoff`; the remainder gap = lhs - partial_sum is nonnegative
 * and shrinks as the cutoff grows.
 */
struct IdentityCheck {
    double lhs = 0.0;
    double partial_sum = 0.0;
    double gap = 0.0;
    std::size_t terms = 0;
};

IdentityCheck verify_binary_pnr_identity(const GaussianEncoding& enc, const BinaryEvent& b,
                                         int photon_cutoff);

}  // namespace gbsbin

#endif  // GBSBIN_PROBABILITY_HPP
