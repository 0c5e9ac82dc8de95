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

#ifndef GBSBIN_MATFUN_HPP
#define GBSBIN_MATFUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gbsbin/matrix.hpp"

namespace gbsbin {

/// Photon-number-resolving detection event: per-mode photon counts.
struct PnrEvent {
    std::vector<int> counts;

    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }
};

/// Threshold-detector event: one click bit per mode.
struct BinaryEvent {
    std::vector<std::uint8_t> clicks;

    int count() const {
        int t = 0;
        for (auto c : clicks) t += c;
        return t;
    }
    std::size_t modes() const { return clicks.size(); }

    std::string to_string() const;
    /// Parses a string of '0'/'1' characters, leftmost character = mode 1.
    static BinaryEvent from_string(const std::string& s);
};

/**
 * @brief Hafnian of a symmetric matrix of even dimension.
 *
 * Sums the products of entries over all perfect-matching pairings of the
 * index set; for an unweighted adjacency matrix this counts the perfect
 * matchings of the graph. Computed by direct recursive pairing, cost
 * (2k-1)!! before pruning; branches through zero entries are skipped, which
 * collapses the tree for sparse inputs. The hafnian of an empty matrix is 1
 * by definition.
 *
 * @throws std::invalid_argument on odd dimension or non-square input
 */
double hafnian(const Matrix& a);

/**
 * @brief Torontonian of a 2N x 2N matrix in mode-pair layout.
 *
 * Inclusion-exclusion over the subsets Z of the N modes,
 *
 *     Tor(O) = sum_Z (-1)^(N-|Z|) / sqrt(det(I - O_Z)),
 *
 * where O_Z keeps the row/column pairs (i, i+N) for i in Z. The empty
 * matrix gives 1 (only the empty subset). Subsets are enumerated in
 * ascending bit-mask order so single-threaded summation is deterministic.
 *
 * @throws std::invalid_argument on odd dimension or N > 26
 * @throws std::domain_error when some det(I - O_Z) is not positive, which
 *         means the input is not a valid threshold-detection matrix
 */
double torontonian(const Matrix& o);

/**
 * @brief Submatrix induction for photon-number events: row/column i is
 * repeated counts[i] times (dropped when zero). Output dimension sum(n).
 */
Matrix induce_pnr(const Matrix& a, const PnrEvent& n);

/**
 * @brief Submatrix induction for binary events on a 2M x 2M matrix: keeps
 * the row/column pairs (i, i+M) of clicked modes. Output dimension 2N for
 * N clicks.
 */
Matrix induce_binary(const Matrix& x, const BinaryEvent& b);

}  // namespace gbsbin

#endif
