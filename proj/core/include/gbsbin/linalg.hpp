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

#ifndef GBSBIN_LINALG_HPP
#define GBSBIN_LINALG_HPP

#include <vector>

#include "gbsbin/matrix.hpp"

namespace gbsbin {

/// Eigendecomposition of a real symmetric matrix. Column i of `vectors`
/// is the unit eigenvector of `values[i]`; values are sorted by decreasing
/// magnitude (the order downstream consumers of dominant modes expect).
struct EigResult {
    std::vector<double> values;
    Matrix vectors;
};

/**
 * @brief Symmetric eigendecomposition by the cyclic Jacobi method.
 *
 * Sweeps rotate away off-diagonal entries until their Frobenius norm drops
 * below 1e-12; at the problem sizes here (d <= 64) the O(d^3) sweep cost is
 * negligible and the method is deterministic, which the reproducibility
 * requirements rely on.
 *
 * @throws std::invalid_argument on non-symmetric input
 * @throws std::runtime_error if 100 sweeps do not converge
 */
EigResult sym_eig(const Matrix& a);

/**
 * @brief Takagi factors of a real symmetric matrix, A = U diag(lambda) U^T.
 *
 * For real symmetric input, U is obtained from the eigenvectors: columns
 * with negative eigenvalue pick up a factor of the imaginary unit, making
 * lambda = |eigenvalue| >= 0. Since each column is then purely real or
 * purely imaginary, U is stored as a real matrix plus per-column flags:
 *
 *     A = sum_j s_j lambda_j u_j u_j^T,  s_j = -1 when imag_column[j] is set.
 */
struct TakagiFactors {
    std::vector<double> lambdas;           ///< nonnegative, decreasing
    Matrix u;                              ///< real part of the column data
    std::vector<unsigned char> imag_column;///< 1 if the column carries factor i

    /// Reconstructs A from the factors (used by validation code).
    Matrix reconstruct() const;
};

/// @throws std::invalid_argument on non-symmetric input
TakagiFactors takagi(const Matrix& a);

/// LU factorization with partial pivoting, stored packed (L below the
/// diagonal with unit diagonal implied, U on and above it).
struct LuFactors {
    Matrix lu;
    std::vector<std::size_t> perm;  ///< row permutation applied to the input
    double parity;                  ///< +1 or -1, sign of the permutation
    bool singular;                  ///< an exactly-zero pivot was hit

    double det() const;
    /// max |u_ii| / min |u_ii|; a crude but effective conditioning estimate.
    double condition_estimate() const;
};

LuFactors lu_factor(Matrix a);

/// Determinant via LU; exactly singular input gives 0.
double det(const Matrix& a);

/**
 * @brief Matrix inverse via LU with partial pivoting.
 *
 * @throws std::domain_error when the matrix is singular or the condition
 *         estimate exceeds 1e12 (results would carry no trustworthy digits)
 */
Matrix inverse(const Matrix& a);

}  // namespace gbsbin

#endif
