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
#include "gbsbin/linalg.hpp"
#include "gbsbin/matrix.hpp"
#include "gbsbin/rng.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace gbsbin;
using namespace gbsbin::testing;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 7;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = 2.0 * rng.next_double() - 1.0;
        CHECK(mixed_error(det(a), cofactor_det(a)) < 1e-10);
        CHECK(mixed_error(det(a), bareiss_det(a)) < 1e-10);
    }
}

TEST_CASE("determinant of a singular matrix is zero") {
    Matrix a = Matrix::from_rows({{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}, {0.5, 1.0, 2.0}});
    CHECK(det(a) == 0.0);
    CHECK(lu_factor(a).singular);
}

TEST_CASE("inverse satisfies A * inv(A) = I") {
    SplitMix64 rng(202);
    for (std::size_t n : {1, 3, 6, 10}) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = 2.0 * rng.next_double() - 1.0;
            a(i, i) += static_cast<double>(n);  // diagonally dominant, well conditioned
        }
        const Matrix prod = a * inverse(a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("inverse rejects singular and ill-conditioned input") {
    Matrix singular = Matrix::from_rows({{1.0, 2.0}, {2.0, 4.0}});
    CHECK_THROWS_AS(inverse(singular), std::domain_error);

    Matrix skewed = Matrix::from_rows({{1.0, 0.0}, {0.0, 1e-14}});
    CHECK_THROWS_AS(inverse(skewed), std::domain_error);
}

TEST_CASE("symmetric eigendecomposition reconstructs and is orthonormal") {
    SplitMix64 rng(303);
    for (std::size_t n : {2, 5, 9}) {
        const Matrix a = random_symmetric(n, rng);
        const EigResult eig = sym_eig(a);
        REQUIRE(eig.values.size() == n);

        // Columns are eigenvectors: A v = lambda v.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                double av = 0.0;
                for (std::size_t j = 0; j < n; ++j) av += a(i, j) * eig.vectors(j, k);
                CHECK(std::abs(av - eig.values[k] * eig.vectors(i, k)) < 1e-9);
            }

        const Matrix gram = eig.vectors.transpose() * eig.vectors;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);

        for (std::size_t k = 0; k + 1 < n; ++k)
            CHECK(std::abs(eig.values[k]) >= std::abs(eig.values[k + 1]) - 1e-12);
    }
}

TEST_CASE("eigenvalues of a hand matrix") {
    // Complete graph on 4 vertices: spectrum 3, -1, -1, -1.
    Matrix k4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) k4(i, j) = 1.0;
    const EigResult eig = sym_eig(k4);
    CHECK(std::abs(eig.values[0] - 3.0) < 1e-10);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(eig.values[k] + 1.0) < 1e-10);
}

TEST_CASE("sym_eig rejects asymmetric input") {
    Matrix bad = Matrix::from_rows({{0.0, 1.0}, {0.5, 0.0}});
    CHECK_THROWS_AS(sym_eig(bad), std::invalid_argument);
}

TEST_CASE("takagi factors are nonnegative, decreasing, and reconstruct") {
    SplitMix64 rng(404);
    for (std::size_t n : {2, 4, 6}) {
        const Matrix a = random_symmetric(n, rng);
        const TakagiFactors tf = takagi(a);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(tf.lambdas[k] >= 0.0);
            if (k + 1 < n) CHECK(tf.lambdas[k] >= tf.lambdas[k + 1] - 1e-12);
        }
        const Matrix back = tf.reconstruct();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(back(i, j) - a(i, j)) < 1e-9);
    }
}

TEST_CASE("takagi of the complete graph on 4 vertices") {
    Matrix k4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) k4(i, j) = 1.0;
    const TakagiFactors tf = takagi(k4);
    CHECK(std::abs(tf.lambdas[0] - 3.0) < 1e-10);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(tf.lambdas[k] - 1.0) < 1e-10);
}

TEST_SUITE_END();
