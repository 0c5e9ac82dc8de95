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

#include "gbsbin/probability.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace gbsbin {

BinaryEvent binary_event_from_index(std::size_t index, std::size_t modes) {
    if (modes >= 64 || index >= (std::size_t{1} << modes))
        throw std::invalid_argument("binary_event_from_index: index out of range");
    BinaryEvent b;
    b.clicks.resize(modes);
    for (std::size_t j = 0; j < modes; ++j)
        b.clicks[j] = static_cast<std::uint8_t>((index >> (modes - 1 - j)) & 1u);
    return b;
}

double pnr_probability(const GaussianEncoding& enc, const PnrEvent& n) {
    if (enc.reduced)
        throw std::invalid_argument("pnr_probability: requires a full encoding");
    if (n.counts.size() != enc.modes())
        throw std::invalid_argument("pnr_probability: event length mismatch");
    int total = 0;
    for (int count : n.counts) {
        if (count < 0) throw std::invalid_argument("pnr_probability: negative count");
        total += count;
    }
    if (total > kMaxPnrTotal)
        throw std::invalid_argument("pnr_probability: photon cutoff exceeded");
    if (total % 2 != 0) return 0.0;  // photons arrive in pairs

    const Matrix ca = enc.a.scaled(enc.c);
    const double h = hafnian(induce_pnr(ca, n));
    double fact = 1.0;
    for (int count : n.counts)
        for (int i = 2; i <= count; ++i) fact *= static_cast<double>(i);
    return h * h / (fact * std::sqrt(enc.det_q));
}

double binary_probability(const GaussianEncoding& enc, const BinaryEvent& b) {
    if (b.clicks.size() != enc.modes())
        throw std::invalid_argument("binary_probability: event length mismatch");
    const double tor = torontonian(induce_binary(enc.o, b));
    double p = tor / std::sqrt(enc.det_q);
    if (p < 0.0) {
        if (p <= -1e-12)
            throw std::domain_error("binary_probability: probability below zero");
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::cerr << "binary_probability: clamped a probability within 1e-12 "
                         "below zero (alternating-sum rounding); further clamps "
                         "are silent\n";
        p = 0.0;
    } else if (p > 1.0) {
        if (p > 1.0 + 1e-9)
            throw std::domain_error("binary_probability: probability above one");
        p = 1.0;
    }
    return p;
}

std::vector<double> exact_binary_distribution(const GaussianEncoding& enc) {
    const std::size_t m = enc.modes();
    if (m > 16)
        throw std::invalid_argument(
            "exact_binary_distribution: enumeration cost grows as 3^M, M <= 16 "
            "required");
    std::vector<double> dist(std::size_t{1} << m);
    for (std::size_t index = 0; index < dist.size(); ++index)
        dist[index] = binary_probability(enc, binary_event_from_index(index, m));
    return dist;
}

namespace {

// C(n, k) for the small values seen in enumeration budgets.
unsigned long long comb64(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<double> exact_mu_distribution(const GaussianEncoding& enc, int max_clicks) {
    const std::size_t m = enc.modes();
    if (max_clicks < 0 || static_cast<std::size_t>(max_clicks) > m)
        throw std::invalid_argument("exact_mu_distribution: need 0 <= N <= M");

    double budget = 0.0;
    for (int i = 0; i <= max_clicks; ++i)
        budget += static_cast<double>(comb64(static_cast<unsigned>(m), static_cast<unsigned>(i))) *
                  std::ldexp(1.0, i);
    if (budget > 1e8)
        throw std::invalid_argument("exact_mu_distribution: enumeration budget exceeded");

    std::vector<double> mu(static_cast<std::size_t>(max_clicks) + 1, 0.0);
    BinaryEvent b;
    b.clicks.assign(m, 0);
    mu[0] = binary_probability(enc, b);
    for (int i = 1; i <= max_clicks; ++i) {
        // Clicked-mode combinations in lexicographic order.
        std::vector<std::size_t> pick(static_cast<std::size_t>(i));
        for (int j = 0; j < i; ++j) pick[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j);
        while (true) {
            b.clicks.assign(m, 0);
            for (std::size_t mode : pick) b.clicks[mode] = 1;
            mu[static_cast<std::size_t>(i)] += binary_probability(enc, b);

            int j = i - 1;
            while (j >= 0 &&
                   pick[static_cast<std::size_t>(j)] == m - static_cast<std::size_t>(i - j))
                --j;
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < i; ++l)
                pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
    }
    return mu;
}

std::vector<double> exact_nu_distribution(const GaussianEncoding& enc) {
    if (enc.modes() < 5)
        throw std::invalid_argument("exact_nu_distribution: at least 5 modes required");
    const GaussianEncoding marginal = reduce(enc, {0, 1, 2, 3, 4});
    std::vector<double> nu(32);
    for (std::size_t index = 0; index < 32; ++index)
        nu[index] = binary_probability(marginal, binary_event_from_index(index, 5));
    return nu;
}

IdentityCheck verify_binary_pnr_identity(const GaussianEncoding& enc, const BinaryEvent& b,
                                         int photon_cutoff) {
    if (enc.reduced)
        throw std::invalid_argument("verify_binary_pnr_identity: requires a full encoding");
    if (b.clicks.size() != enc.modes())
        throw std::invalid_argument("verify_binary_pnr_identity: event length mismatch");
    if (photon_cutoff < 0 || photon_cutoff > kMaxPnrTotal)
        throw std::invalid_argument("verify_binary_pnr_identity: cutoff outside [0, " +
                                    std::to_string(kMaxPnrTotal) + "]");

    IdentityCheck check;
    check.lhs = binary_probability(enc, b);

    std::vector<std::size_t> clicked;
    for (std::size_t i = 0; i < b.clicks.size(); ++i)
        if (b.clicks[i] != 0) clicked.push_back(i);
    const std::size_t k = clicked.size();
    if (k == 0) {
        PnrEvent vacuum;
        vacuum.counts.assign(enc.modes(), 0);
        check.partial_sum = pnr_probability(enc, vacuum);
        check.terms = 1;
        check.gap = check.lhs - check.partial_sum;
        return check;
    }

    // Positive counts on exactly the clicked modes; odd totals vanish.
    unsigned long long events = 0;
    for (int total = static_cast<int>(k); total <= photon_cutoff; ++total)
        if (total % 2 == 0)
            events += comb64(static_cast<unsigned>(total - 1), static_cast<unsigned>(k - 1));
    if (events > kMaxIdentityEvents)
        throw std::invalid_argument("verify_binary_pnr_identity: enumeration budget exceeded");

    PnrEvent event;
    event.counts.assign(enc.modes(), 0);
    const auto enumerate = [&](auto&& self, std::size_t pos, int remaining) -> void {
        const int slots_left = static_cast<int>(k - pos) - 1;
        if (slots_left == 0) {
            event.counts[clicked[pos]] = remaining;
            check.partial_sum += pnr_probability(enc, event);
            ++check.terms;
            return;
        }
        for (int v = 1; v <= remaining - slots_left; ++v) {
            event.counts[clicked[pos]] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (int total = static_cast<int>(k); total <= photon_cutoff; ++total)
        if (total % 2 == 0) enumerate(enumerate, 0, total);

    check.gap = check.lhs - check.partial_sum;
    return check;
}

}  // namespace gbsbin
