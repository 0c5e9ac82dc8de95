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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gbsbin/encoding.hpp"
#include "gbsbin/graphio.hpp"
#include "gbsbin/matfun.hpp"
#include "gbsbin/rng.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace gbsbin;
using namespace gbsbin::testing;

namespace {

Matrix direct_sum_pair(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(n + i, n + j) = a(i, j);
        }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("matfun");

TEST_CASE("binary events round-trip through strings") {
    const BinaryEvent b = BinaryEvent::from_string("01101");
    CHECK(b.modes() == 5);
    CHECK(b.count() == 3);
    CHECK(b.clicks[0] == 0);
    CHECK(b.clicks[1] == 1);
    CHECK(b.to_string() == "01101");
    CHECK_THROWS_AS(BinaryEvent::from_string("01x"), std::invalid_argument);
}

TEST_CASE("hafnian base cases") {
    CHECK(hafnian(Matrix(0, 0)) == 1.0);

    Matrix odd(3, 3);
    CHECK_THROWS_AS(hafnian(odd), std::invalid_argument);

    Matrix pair = Matrix::from_rows({{0.0, 0.7}, {0.7, 0.0}});
    CHECK(hafnian(pair) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("hafnian of the complete graph on 4 vertices is 3") {
    Matrix k4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) k4(i, j) = 1.0;
    CHECK(hafnian(k4) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hafnian matches the permutation-sum oracle") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 * (1 + trial % 4);  // 2, 4, 6, 8
        const Matrix a = random_symmetric(n, rng);
        CHECK(mixed_error(hafnian(a), perm_hafnian(a)) < 1e-10);
    }
}

TEST_CASE("hafnian of a direct sum squares the hafnian") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 * (1 + trial % 3);  // 2, 4, 6
        const Matrix a = random_symmetric(n, rng);
        const double h = hafnian(a);
        CHECK(mixed_error(hafnian(direct_sum_pair(a)), h * h) < 1e-9);
    }

    // An odd block has no perfect matching, so the doubled matrix has none
    // either.
    const Matrix odd = random_symmetric(3, rng);
    CHECK(hafnian(direct_sum_pair(odd)) == 0.0);
}

TEST_CASE("torontonian matches the subset-sum oracle on encoded graphs") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 2 + trial % 5;  // 2..6 modes
        const Graph g = erdos_renyi(m, 0.6, 1000 + trial);
        if (g.edge_count() == 0) continue;
        const GaussianEncoding enc = encode(g.adjacency, 0.5 + 2.0 * rng.next_double());

        // Full-size and induced cases both covered.
        CHECK(mixed_error(torontonian(enc.o), oracle_torontonian(enc.o)) < 1e-10);

        BinaryEvent b;
        for (std::size_t i = 0; i < m; ++i) b.clicks.push_back(rng.next() & 1);
        if (b.count() == 0) b.clicks[0] = 1;
        const Matrix induced = induce_binary(enc.o, b);
        CHECK(mixed_error(torontonian(induced), oracle_torontonian(induced)) < 1e-10);
    }
}

TEST_CASE("torontonian of an empty matrix is 1") {
    CHECK(torontonian(Matrix(0, 0)) == 1.0);
}

TEST_CASE("induce_binary keeps exactly the clicked mode pairs") {
    Matrix o(6, 6);  // 3 modes
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) o(i, j) = static_cast<double>(10 * i + j);
    const BinaryEvent b = BinaryEvent::from_string("101");
    const Matrix sub = induce_binary(o, b);
    REQUIRE(sub.rows() == 4);
    // Kept doubled indices: 0, 2 (modes) then 3, 5 (conjugates).
    CHECK(sub(0, 0) == o(0, 0));
    CHECK(sub(0, 1) == o(0, 2));
    CHECK(sub(1, 3) == o(2, 5));
    CHECK(sub(2, 2) == o(3, 3));
    CHECK(sub(3, 3) == o(5, 5));
}

TEST_CASE("induce_pnr repeats rows by photon count") {
    Matrix a = Matrix::from_rows({{1.0, 2.0}, {2.0, 3.0}});
    PnrEvent n;
    n.counts = {2, 1};
    const Matrix sub = induce_pnr(a, n);
    REQUIRE(sub.rows() == 3);
    CHECK(sub(0, 0) == 1.0);
    CHECK(sub(0, 1) == 1.0);
    CHECK(sub(0, 2) == 2.0);
    CHECK(sub(2, 2) == 3.0);
}

TEST_SUITE_END();
