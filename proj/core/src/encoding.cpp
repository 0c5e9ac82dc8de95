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

#include "gbsbin/encoding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gbsbin/linalg.hpp"

namespace gbsbin {

double mean_photons(const std::vector<double>& lambdas, double c) {
    double n = 0.0;
    for (double lambda : lambdas) {
        const double t = c * lambda;
        const double t2 = t * t;
        if (t2 >= 1.0) return std::numeric_limits<double>::infinity();
        n += t2 / (1.0 - t2);
    }
    return n;
}

double choose_c(const std::vector<double>& lambdas, double nbar_target) {
    if (!(nbar_target > 0.0))
        throw std::invalid_argument("choose_c: target mean photon number must be positive");
    double lambda_max = 0.0;
    for (double lambda : lambdas) lambda_max = std::max(lambda_max, std::abs(lambda));
    if (lambda_max == 0.0)
        throw std::invalid_argument(
            "choose_c: all-zero spectrum (empty graph) cannot reach a positive "
            "mean photon number");

    constexpr double kTol = 1e-9;
    constexpr int kMaxIterations = 200;
    double lo = 0.0;
    double hi = (1.0 - 1e-12) / lambda_max;  // keeps c * lambda_max strictly below 1
    if (mean_photons(lambdas, hi) < nbar_target)
        throw std::invalid_argument("choose_c: target mean photon number out of reach");

    double mid = 0.5 * hi;
    for (int it = 0; it < kMaxIterations; ++it) {
        mid = 0.5 * (lo + hi);
        const double n = mean_photons(lambdas, mid);
        if (std::abs(n - nbar_target) < kTol) return mid;
        if (n < nbar_target)
            lo = mid;
        else
            hi = mid;
    }
    throw std::runtime_error("choose_c: bisection failed to reach tolerance");
}

namespace {

GaussianEncoding build(const Matrix& adjacency, const std::vector<double>& lambdas, double c) {
    const std::size_t m = adjacency.rows();
    GaussianEncoding enc;
    enc.a = adjacency;
    enc.c = c;
    enc.lambdas = lambdas;
    enc.r.reserve(lambdas.size());
    for (double lambda : lambdas) enc.r.push_back(std::atanh(c * lambda));
    enc.nbar = mean_photons(lambdas, c);

    const Matrix b = adjacency.scaled(c);
    enc.a_tilde = Matrix::direct_sum(b, b);
    enc.o = Matrix(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            enc.o(i, j + m) = b(i, j);
            enc.o(i + m, j) = b(i, j);
        }

    const Matrix i_minus_o = Matrix::identity(2 * m) - enc.o;
    const double d = det(i_minus_o);
    if (!(d > 0.0)) throw std::runtime_error("encode: I - O is not positive definite");
    enc.det_q = 1.0 / d;
    enc.q = inverse(i_minus_o);
    enc.sigma = enc.q - Matrix::identity(2 * m).scaled(0.5);
    return enc;
}

}  // namespace

GaussianEncoding encode_with_scale(const Matrix& adjacency, double c) {
    if (!adjacency.is_square() || !adjacency.is_symmetric(1e-12))
        throw std::invalid_argument("encode: adjacency matrix must be symmetric");
    const TakagiFactors tak = takagi(adjacency);
    const double lambda_max = tak.lambdas.empty() ? 0.0 : tak.lambdas.front();
    if (!(c > 0.0) || !(c * lambda_max < 1.0))
        throw std::invalid_argument("encode: rescaling constant outside (0, 1/lambda_max)");
    return build(adjacency, tak.lambdas, c);
}

GaussianEncoding encode(const Matrix& adjacency, double nbar_target) {
    if (!adjacency.is_square() || !adjacency.is_symmetric(1e-12))
        throw std::invalid_argument("encode: adjacency matrix must be symmetric");
    const TakagiFactors tak = takagi(adjacency);
    const double c = choose_c(tak.lambdas, nbar_target);
    return build(adjacency, tak.lambdas, c);
}

GaussianEncoding encode(const Graph& g, double nbar_target) {
    return encode(g.adjacency, nbar_target);
}

GaussianEncoding reduce(const GaussianEncoding& enc, const std::vector<std::size_t>& modes) {
    const std::size_t m = enc.modes();
    if (modes.empty()) throw std::invalid_argument("reduce: empty mode subset");
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] >= m) throw std::invalid_argument("reduce: mode index out of range");
        if (i > 0 && modes[i] <= modes[i - 1])
            throw std::invalid_argument("reduce: modes must be strictly increasing");
    }

    std::vector<std::size_t> idx;
    idx.reserve(2 * modes.size());
    for (std::size_t mode : modes) idx.push_back(mode);
    for (std::size_t mode : modes) idx.push_back(mode + m);

    const std::size_t k = modes.size();
    GaussianEncoding out;
    out.reduced = true;
    out.sigma = enc.sigma.principal_submatrix(idx);
    out.q = out.sigma + Matrix::identity(2 * k).scaled(0.5);
    out.det_q = det(out.q);
    if (!(out.det_q > 0.0)) throw std::runtime_error("reduce: singular reduced state");
    out.o = Matrix::identity(2 * k) - inverse(out.q);
    out.nbar = 0.5 * (out.sigma.trace() - static_cast<double>(k));
    return out;
}

}  // namespace gbsbin
