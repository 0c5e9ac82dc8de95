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

#include "gbsbin/matfun.hpp"

#include <cmath>
#include <stdexcept>

#include "gbsbin/linalg.hpp"

namespace gbsbin {

std::string BinaryEvent::to_string() const {
    std::string s(clicks.size(), '0');
    for (std::size_t i = 0; i < clicks.size(); ++i)
        if (clicks[i]) s[i] = '1';
    return s;
}

BinaryEvent BinaryEvent::from_string(const std::string& s) {
    BinaryEvent b;
    b.clicks.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary pattern must contain only '0' and '1'");
        b.clicks.push_back(c == '1' ? 1 : 0);
    }
    return b;
}

namespace {

/// Recursion workspace: one index buffer per depth avoids re-allocating on
/// the hot path of the matching enumeration.
class HafnianWork {
public:
    explicit HafnianWork(const Matrix& a) : a_(a) {}

    double run(std::vector<int> idx) {
        scratch_.resize(idx.size() / 2 + 1);
        return expand(idx, 0);
    }

private:
    double expand(const std::vector<int>& idx, std::size_t depth) {
        const std::size_t n = idx.size();
        if (n == 0) return 1.0;  // empty product: one way to match nothing
        double total = 0.0;
        std::vector<int>& rest = scratch_[depth];
        for (std::size_t j = 1; j < n; ++j) {
            const double w = a_(idx[0], idx[j]);
            if (w == 0.0) continue;  // prunes the (2k-1)!! tree on sparse inputs
            rest.clear();
            for (std::size_t t = 1; t < n; ++t)
                if (t != j) rest.push_back(idx[t]);
            total += w * expand(rest, depth + 1);
        }
        return total;
    }

    const Matrix& a_;
    std::vector<std::vector<int>> scratch_;
};

}  // namespace

double hafnian(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hafnian: matrix not square");
    if (a.rows() % 2 != 0) throw std::invalid_argument("hafnian: dimension must be even");
    std::vector<int> idx(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) idx[i] = static_cast<int>(i);
    return HafnianWork(a).run(std::move(idx));
}

double torontonian(const Matrix& o) {
    if (!o.is_square()) throw std::invalid_argument("torontonian: matrix not square");
    if (o.rows() % 2 != 0) throw std::invalid_argument("torontonian: dimension must be even");
    const std::size_t n = o.rows() / 2;
    if (n > 26) throw std::invalid_argument("torontonian: more than 26 mode pairs");

    double total = 0.0;
    std::vector<std::size_t> idx;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        idx.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const std::size_t k = idx.size();
        for (std::size_t i = 0; i < k; ++i) idx.push_back(idx[i] + n);

        Matrix m(2 * k, 2 * k);
        for (std::size_t i = 0; i < 2 * k; ++i)
            for (std::size_t j = 0; j < 2 * k; ++j)
                m(i, j) = (i == j ? 1.0 : 0.0) - o(idx[i], idx[j]);
        const double d = det(m);
        if (d <= 0.0)
            throw std::domain_error(
                "torontonian: nonpositive subset determinant, input is not a valid "
                "threshold-detection matrix");
        const double term = 1.0 / std::sqrt(d);
        total += ((n - k) % 2 == 0) ? term : -term;
    }
    return total;
}

Matrix induce_pnr(const Matrix& a, const PnrEvent& n) {
    if (!a.is_square()) throw std::invalid_argument("induce_pnr: matrix not square");
    if (n.counts.size() != a.rows())
        throw std::invalid_argument("induce_pnr: event length mismatch");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n.counts.size(); ++i) {
        if (n.counts[i] < 0) throw std::invalid_argument("induce_pnr: negative count");
        for (int r = 0; r < n.counts[i]; ++r) idx.push_back(i);
    }
    return a.principal_submatrix(idx);
}

Matrix induce_binary(const Matrix& x, const BinaryEvent& b) {
    if (!x.is_square()) throw std::invalid_argument("induce_binary: matrix not square");
    const std::size_t m = b.clicks.size();
    if (x.rows() != 2 * m) throw std::invalid_argument("induce_binary: event length mismatch");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
        if (b.clicks[i]) idx.push_back(i);
    const std::size_t k = idx.size();
    for (std::size_t i = 0; i < k; ++i) idx.push_back(idx[i] + m);
    return x.principal_submatrix(idx);
}

}  // namespace gbsbin
