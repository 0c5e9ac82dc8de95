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

#ifndef GBSBIN_ENCODING_HPP
#define GBSBIN_ENCODING_HPP

#include <cstddef>
#include <vector>

#include "gbsbin/graphio.hpp"
#include "gbsbin/matrix.hpp"

namespace gbsbin {

/**
 * Gaussian state that encodes a graph on a simulated photonic device.
 *
 * The adjacency matrix a is rescaled by c and doubled into
 * a_tilde = c (a + a), giving the pure-state coupling matrix
 * o = [[0, ca], [ca, 0]] and q = (I - o)^{-1}.  Vacuum covariance is I/2,
 * so sigma = q - I/2.  Mode i of an M-vertex graph occupies rows/columns
 * i and i + M of the doubled matrices.
 *
 * Reduced (marginal) states produced by reduce() keep only q, sigma, o,
 * det_q and nbar; a, a_tilde, lambdas and r are empty and c is zero.
 */
struct GaussianEncoding {
    Matrix a;
    double c = 0.0;
    Matrix a_tilde;
    Matrix o;
    Matrix q;
    Matrix sigma;
    std::vector<double> lambdas;
    std::vector<double> r;
    double nbar = 0.0;
    double det_q = 1.0;
    bool reduced = false;

    std::size_t modes() const { return q.rows() / 2; }
};

// Mean photon number sum_i t^2 / (1 - t^2) with t = c * lambda_i.
// Returns +inf when any |t| >= 1.
double mean_photons(const std::vector<double>& lambdas, double c);

/**
 * Bisection for the rescaling constant c with mean_photons(lambdas, c)
 * equal to nbar_target.  The map is strictly increasing on
 * (0, 1/lambda_max), so the bracket (0, (1 - 1e-12)/lambda_max) is searched
 * until |nbar(c) - target| < 1e-9, capped at 200 iterations.
 *
 * Throws std::invalid_argument when the spectrum is all zero, the target
 * is not positive, or the target exceeds the reachable range.
 */
double choose_c(const std::vector<double>& lambdas, double nbar_target);

// Encoding at a fixed rescaling constant; 0 < c < 1/lambda_max required.
GaussianEncoding encode_with_scale(const Matrix& adjacency, double c);

// Encoding at a target mean photon number via choose_c.
GaussianEncoding encode(const Matrix& adjacency, double nbar_target);
GaussianEncoding encode(const Graph& g, double nbar_target);

/**
 * Marginal state on a subset of modes (0-based, strictly increasing).
 * sigma restricts to rows/columns {i, i + M : i in subset}, then
 * q = sigma + I/2 and o = I - q^{-1} are rebuilt from the restriction.
 */
GaussianEncoding reduce(const GaussianEncoding& enc,
                        const std::vector<std::size_t>& modes);

}  // namespace gbsbin

#endif  // GBSBIN_ENCODING_HPP
