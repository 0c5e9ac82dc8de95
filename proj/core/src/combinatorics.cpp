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

#include "gbsbin/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace gbsbin {

long long sample_size(long long omega, double epsilon, double delta) {
    if (omega < 1) throw std::invalid_argument("sample_size: omega must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 2.0))
        throw std::invalid_argument("sample_size: epsilon outside (0, 2)");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("sample_size: delta outside (0, 1)");
    const double x =
        2.0 * (std::log(2.0) * static_cast<double>(omega) + std::log(1.0 / delta)) /
        (epsilon * epsilon);
    const long long s = std::llround(x);
    return s < 1 ? 1 : s;
}

BigInt binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (n - k < k) k = n - k;
    BigInt r = 1;
    // Stepwise products stay integral: each prefix is itself a binomial.
    for (unsigned long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt count_weak_compositions(unsigned long long n, unsigned long long m) {
    if (m < 1) throw std::invalid_argument("count_weak_compositions: need at least one part");
    return binomial(n + m - 1, m - 1);
}

BigInt count_partitions_exact(unsigned long long n, unsigned long long parts_max) {
    if (parts_max == 0) return n == 0 ? 1 : 0;
    // Conjugation turns "at most parts_max parts" into "parts of size at
    // most parts_max", which the coin-style DP counts directly.
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (unsigned long long part = 1; part <= std::min(parts_max, n); ++part)
        for (unsigned long long total = part; total <= n; ++total)
            dp[static_cast<std::size_t>(total)] += dp[static_cast<std::size_t>(total - part)];
    return dp[static_cast<std::size_t>(n)];
}

BigInt count_partitions_with_parts(unsigned long long n, unsigned long long m) {
    if (m == 0) return n == 0 ? 1 : 0;
    if (n < m) return 0;
    // Subtracting 1 from each part bijects onto partitions of n - m with
    // at most m parts.
    return count_partitions_exact(n - m, m);
}

double partitions_asymptotic(unsigned long long n, unsigned long long m) {
    if (n < m || n > 2 * m)
        throw std::invalid_argument("partitions_asymptotic: regime is m <= n <= 2m");
    if (n - m <= 1)
        throw std::invalid_argument("partitions_asymptotic: n - m must exceed 1");
    const double excess = static_cast<double>(n - m);
    const double pi = 3.14159265358979323846;
    return std::exp(pi * std::sqrt(2.0 * excess / 3.0)) / (4.0 * std::sqrt(3.0) * excess);
}

BigInt count_binary_events(unsigned m) {
    BigInt sum = 0;
    for (unsigned i = 0; i <= m; ++i) sum += binomial(m, i);
    const BigInt direct = BigInt(1) << m;
    if (sum != direct)
        throw std::logic_error("count_binary_events: binomial sum disagrees with 2^m");
    return sum;
}

namespace {

unsigned isqrt(unsigned v) {
    unsigned r = static_cast<unsigned>(std::sqrt(static_cast<double>(v)));
    while ((r + 1) * (r + 1) <= v) ++r;
    while (r * r > v) --r;
    return r;
}

}  // namespace

GrowthCheckReport verify_composition_growth(unsigned m_lo, unsigned m_hi) {
    if (m_lo < 4 || m_hi < m_lo)
        throw std::invalid_argument("verify_composition_growth: need 4 <= m_lo <= m_hi");
    GrowthCheckReport report;
    report.m_lo = m_lo;
    report.m_hi = m_hi;
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const unsigned n = isqrt(m);
        const BigInt lhs = count_weak_compositions(n, m);
        BigInt rhs = 1;
        for (unsigned i = 0; i < n; ++i) rhs *= n;
        if (lhs < rhs) report.violations.push_back(m);
    }
    return report;
}

BinomialRatioReport verify_binomial_ratio(unsigned k, unsigned long long n_max) {
    if (k < 1 || n_max < static_cast<unsigned long long>(k) * k)
        throw std::invalid_argument("verify_binomial_ratio: need n_max >= k^2 >= 1");
    BinomialRatioReport report;
    report.k = k;
    report.n_max = n_max;
    double target = 1.0;
    for (unsigned i = 2; i <= k; ++i) target /= static_cast<double>(i);
    report.target = target;

    // C(n, k) / n^k = prod_i (1 - i/n) / k!, evaluated in closed form.
    const auto ratio = [&](unsigned long long n) {
        double r = target;
        for (unsigned i = 1; i < k; ++i)
            r *= 1.0 - static_cast<double>(i) / static_cast<double>(n);
        return r;
    };

    report.ratio_at_top = ratio(n_max);
    report.within_tolerance = std::abs(report.ratio_at_top / target - 1.0) <= 0.01;
    report.monotone = true;
    double prev = ratio(static_cast<unsigned long long>(k) * k);
    for (unsigned long long n = static_cast<unsigned long long>(k) * k + 1; n <= n_max; ++n) {
        const double cur = ratio(n);
        if (cur < prev - 1e-15) {
            report.monotone = false;
            report.first_violation_n = n;
            break;
        }
        prev = cur;
    }
    return report;
}

}  // namespace gbsbin
