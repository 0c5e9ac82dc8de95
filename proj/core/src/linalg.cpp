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

#include "gbsbin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gbsbin {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigResult sym_eig(const Matrix& input) {
    if (!input.is_square()) throw std::invalid_argument("sym_eig: matrix not square");
    if (!input.is_symmetric(1e-12)) throw std::invalid_argument("sym_eig: matrix not symmetric");

    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-12;

    int sweep = 0;
    while (off_diagonal_frobenius(a) >= kOffTol) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("sym_eig: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Classic Jacobi rotation annihilating a(p, q).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::fabs(a(i, i)) > std::fabs(a(j, j));
    });

    EigResult out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

Matrix TakagiFactors::reconstruct() const {
    const std::size_t n = u.rows();
    Matrix a(n, n);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        // (i u)(i u)^T = -u u^T, so imaginary columns flip the sign.
        const double s = (imag_column[k] ? -1.0 : 1.0) * lambdas[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) += s * u(i, k) * u(j, k);
    }
    return a;
}

TakagiFactors takagi(const Matrix& a) {
    EigResult eig = sym_eig(a);
    TakagiFactors out;
    out.u = eig.vectors;
    out.lambdas.resize(eig.values.size());
    out.imag_column.resize(eig.values.size());
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
        out.lambdas[i] = std::fabs(eig.values[i]);
        out.imag_column[i] = eig.values[i] < 0.0 ? 1 : 0;
    }
    return out;
}

LuFactors lu_factor(Matrix a) {
    if (!a.is_square()) throw std::invalid_argument("lu_factor: matrix not square");
    const std::size_t n = a.rows();
    LuFactors f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    f.parity = 1.0;
    f.singular = false;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::fabs(a(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(f.perm[k], f.perm[pivot]);
            f.parity = -f.parity;
        }
        const double akk = a(k, k);
        if (akk == 0.0) {
            f.singular = true;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) / akk;
            a(i, k) = m;
            if (m == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    f.lu = std::move(a);
    return f;
}

double LuFactors::det() const {
    if (singular) return 0.0;
    double d = parity;
    for (std::size_t i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
}

double LuFactors::condition_estimate() const {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < lu.rows(); ++i) {
        const double u = std::fabs(lu(i, i));
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

double det(const Matrix& a) { return lu_factor(a).det(); }

Matrix inverse(const Matrix& a) {
    const LuFactors f = lu_factor(a);
    if (f.singular) throw std::domain_error("inverse: singular matrix");
    if (f.condition_estimate() > 1e12)
        throw std::domain_error("inverse: matrix too ill-conditioned (estimate > 1e12)");

    const std::size_t n = a.rows();
    Matrix inv(n, n);
    std::vector<double> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        // Solve A x = e_col: forward pass on the permuted unit vector...
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = (f.perm[i] == col) ? 1.0 : 0.0;
            for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
        }
        // ...then back substitution through U.
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu(ii, j) * x[j];
            x[ii] /= f.lu(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

}  // namespace gbsbin
