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

#include "gbsbin/learn.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace gbsbin {

Matrix rbf_kernel(const std::vector<std::vector<double>>& rows, double gamma) {
    if (rows.empty()) throw std::invalid_argument("rbf_kernel: empty feature matrix");
    if (!(gamma > 0.0)) throw std::invalid_argument("rbf_kernel: gamma must be positive");
    const std::size_t n = rows.size();
    const std::size_t dim = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != dim) throw std::invalid_argument("rbf_kernel: ragged rows");
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("rbf_kernel: non-finite feature");
    }
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t l = 0; l < dim; ++l) {
                const double d = rows[i][l] - rows[j][l];
                d2 += d * d;
            }
            k(i, j) = std::exp(-gamma * d2);
            k(j, i) = k(i, j);
        }
    }
    return k;
}

double rbf_auto_gamma(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("rbf_auto_gamma: empty feature matrix");
    const std::size_t n = rows.size();
    const std::size_t dim = rows.front().size();
    if (dim == 0) throw std::invalid_argument("rbf_auto_gamma: zero-width rows");
    double total_var = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        double s = 0.0, s2 = 0.0;
        for (const auto& row : rows) {
            s += row[j];
            s2 += row[j] * row[j];
        }
        const double mean = s / static_cast<double>(n);
        total_var += std::max(0.0, s2 / static_cast<double>(n) - mean * mean);
    }
    const double mean_var = total_var / static_cast<double>(dim);
    if (mean_var <= 0.0) return 1.0 / static_cast<double>(dim);
    return 1.0 / (static_cast<double>(dim) * mean_var);
}

SvmModel svm_train(const Matrix& kernel, const std::vector<std::size_t>& index,
                   const std::vector<int>& y, double c) {
    if (index.empty() || index.size() != y.size())
        throw std::invalid_argument("svm_train: index/label size mismatch");
    if (!(c > 0.0)) throw std::invalid_argument("svm_train: C must be positive");
    for (int label : y)
        if (label != 1 && label != -1)
            throw std::invalid_argument("svm_train: labels must be +1/-1");

    SvmModel model;
    model.index = index;
    model.y = y;
    model.c = c;
    model.alpha.assign(index.size(), 0.0);

    const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
    const bool has_neg = std::find(y.begin(), y.end(), -1) != y.end();
    if (!has_pos || !has_neg) {
        model.bias = has_pos ? 1.0 : -1.0;  // constant answer for the only class
        return model;
    }

    const std::size_t n = index.size();
    constexpr double kTol = 1e-3;
    constexpr long kMaxIterations = 100000;

    // f_i = sum_j alpha_j y_j K_ij - y_i; the bias cancels in every gap.
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = -static_cast<double>(y[i]);

    double b_up = 0.0, b_low = 0.0;
    long it = 0;
    for (; it < kMaxIterations; ++it) {
        // Most violating pair: smallest f among those free to grow toward
        // +1, largest among those free to grow toward -1.
        std::size_t i_up = n, i_low = n;
        b_up = std::numeric_limits<double>::infinity();
        b_low = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const bool in_up = (y[i] == 1 && model.alpha[i] < c) ||
                               (y[i] == -1 && model.alpha[i] > 0.0);
            const bool in_low = (y[i] == 1 && model.alpha[i] > 0.0) ||
                                (y[i] == -1 && model.alpha[i] < c);
            if (in_up && f[i] < b_up) {
                b_up = f[i];
                i_up = i;
            }
            if (in_low && f[i] > b_low) {
                b_low = f[i];
                i_low = i;
            }
        }
        if (i_up == n || i_low == n || b_low - b_up <= 2.0 * kTol) break;

        const std::size_t i = i_up, j = i_low;
        const std::size_t ki = index[i], kj = index[j];
        const double eta =
            std::max(kernel(ki, ki) + kernel(kj, kj) - 2.0 * kernel(ki, kj), 1e-12);
        const double s = static_cast<double>(y[i] * y[j]);
        const double alpha_i_old = model.alpha[i];
        const double alpha_j_old = model.alpha[j];

        double lo, hi;
        if (y[i] == y[j]) {
            lo = std::max(0.0, alpha_i_old + alpha_j_old - c);
            hi = std::min(c, alpha_i_old + alpha_j_old);
        } else {
            lo = std::max(0.0, alpha_j_old - alpha_i_old);
            hi = std::min(c, c + alpha_j_old - alpha_i_old);
        }

        double alpha_j = alpha_j_old + static_cast<double>(y[j]) * (f[i] - f[j]) / eta;
        alpha_j = std::clamp(alpha_j, lo, hi);
        const double alpha_i = alpha_i_old + s * (alpha_j_old - alpha_j);
        if (std::abs(alpha_j - alpha_j_old) < 1e-14) break;  // pinned at the box

        model.alpha[i] = alpha_i;
        model.alpha[j] = alpha_j;
        const double di = static_cast<double>(y[i]) * (alpha_i - alpha_i_old);
        const double dj = static_cast<double>(y[j]) * (alpha_j - alpha_j_old);
        for (std::size_t t = 0; t < n; ++t)
            f[t] += di * kernel(ki, index[t]) + dj * kernel(kj, index[t]);
    }

    if (it == kMaxIterations) {
        model.converged = false;
        std::cerr << "svm_train: iteration cap reached (gap " << b_low - b_up << ")\n";
    }
    model.bias = -0.5 * (b_up + b_low);
    return model;
}

double svm_decision(const SvmModel& model, const Matrix& kernel, std::size_t column) {
    double d = model.bias;
    for (std::size_t i = 0; i < model.index.size(); ++i)
        if (model.alpha[i] != 0.0)
            d += model.alpha[i] * static_cast<double>(model.y[i]) *
                 kernel(model.index[i], column);
    return d;
}

OvrModel ovr_train(const Matrix& kernel, const std::vector<std::size_t>& index,
                   const std::vector<int>& labels, int num_classes, double c) {
    if (num_classes < 2) throw std::invalid_argument("ovr_train: need at least two classes");
    if (labels.size() != index.size())
        throw std::invalid_argument("ovr_train: index/label size mismatch");
    OvrModel model;
    model.num_classes = num_classes;
    model.per_class.reserve(static_cast<std::size_t>(num_classes));
    std::vector<int> y(labels.size());
    for (int cls = 0; cls < num_classes; ++cls) {
        for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == cls ? 1 : -1;
        model.per_class.push_back(svm_train(kernel, index, y, c));
    }
    return model;
}

int ovr_predict(const OvrModel& model, const Matrix& kernel, std::size_t column) {
    int best = 0;
    double best_d = -std::numeric_limits<double>::infinity();
    for (int cls = 0; cls < model.num_classes; ++cls) {
        const double d = svm_decision(model.per_class[static_cast<std::size_t>(cls)], kernel,
                                      column);
        if (d > best_d) {
            best_d = d;
            best = cls;
        }
    }
    return best;
}

std::vector<int> assign_folds(const std::vector<int>& labels, int folds, SplitMix64& rng,
                              bool* stratified) {
    if (folds < 2) throw std::invalid_argument("assign_folds: need at least two folds");
    const std::size_t n = labels.size();
    if (n < static_cast<std::size_t>(folds))
        throw std::invalid_argument("assign_folds: fewer samples than folds");

    int num_classes = 0;
    for (int label : labels) {
        if (label < 0) throw std::invalid_argument("assign_folds: negative class id");
        num_classes = std::max(num_classes, label + 1);
    }
    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(num_classes));
    for (std::size_t i = 0; i < n; ++i)
        by_class[static_cast<std::size_t>(labels[i])].push_back(i);

    bool can_stratify = true;
    for (const auto& members : by_class)
        if (!members.empty() && members.size() < static_cast<std::size_t>(folds))
            can_stratify = false;
    if (stratified != nullptr) *stratified = can_stratify;

    const auto shuffle = [&rng](std::vector<std::size_t>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng.next_below(i)]);
    };

    std::vector<int> fold_of(n, 0);
    if (can_stratify) {
        std::size_t counter = 0;
        for (auto& members : by_class) {
            shuffle(members);
            for (std::size_t idx : members)
                fold_of[idx] = static_cast<int>(counter++ % static_cast<std::size_t>(folds));
        }
    } else {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        shuffle(order);
        for (std::size_t i = 0; i < n; ++i)
            fold_of[order[i]] = static_cast<int>(i % static_cast<std::size_t>(folds));
    }
    return fold_of;
}

std::vector<double> default_c_grid() {
    return {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
}

CvReport double_cv(const Matrix& kernel, const std::vector<int>& labels,
                   const std::vector<double>& c_grid, int repeats, int folds,
                   std::uint64_t seed) {
    const std::size_t n = labels.size();
    if (kernel.rows() != n || kernel.cols() != n)
        throw std::invalid_argument("double_cv: kernel/label size mismatch");
    if (c_grid.empty()) throw std::invalid_argument("double_cv: empty C grid");
    if (repeats < 1) throw std::invalid_argument("double_cv: need at least one repeat");

    int num_classes = 0;
    for (int label : labels) num_classes = std::max(num_classes, label + 1);
    num_classes = std::max(num_classes, 2);

    CvReport report;
    report.repeats = repeats;
    report.folds = folds;
    report.seed = seed;

    bool warned_fallback = false;
    for (int r = 0; r < repeats; ++r) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(r));
        bool stratified_outer = true;
        const std::vector<int> fold_of = assign_folds(labels, folds, rng, &stratified_outer);
        if (!stratified_outer) {
            report.stratified = false;
            if (!warned_fallback) {
                std::cerr << "double_cv: class smaller than fold count, plain split used\n";
                warned_fallback = true;
            }
        }

        std::size_t correct = 0;
        std::vector<double> chosen;
        for (int outer = 0; outer < folds; ++outer) {
            std::vector<std::size_t> train, test;
            std::vector<int> train_labels;
            for (std::size_t i = 0; i < n; ++i) {
                if (fold_of[i] == outer) {
                    test.push_back(i);
                } else {
                    train.push_back(i);
                    train_labels.push_back(labels[i]);
                }
            }
            if (test.empty()) continue;

            const int inner_folds = std::min<int>(folds, static_cast<int>(train.size()));
            bool stratified_inner = true;
            const std::vector<int> inner_of =
                assign_folds(train_labels, inner_folds, rng, &stratified_inner);
            if (!stratified_inner) report.stratified = false;

            double best_c = c_grid.front();
            std::size_t best_correct = 0;
            bool first = true;
            for (double c : c_grid) {
                std::size_t grid_correct = 0;
                for (int inner = 0; inner < inner_folds; ++inner) {
                    std::vector<std::size_t> fit_index;
                    std::vector<int> fit_labels;
                    std::vector<std::size_t> val;
                    for (std::size_t t = 0; t < train.size(); ++t) {
                        if (inner_of[t] == inner) {
                            val.push_back(t);
                        } else {
                            fit_index.push_back(train[t]);
                            fit_labels.push_back(train_labels[t]);
                        }
                    }
                    if (val.empty() || fit_index.empty()) continue;
                    const OvrModel model =
                        ovr_train(kernel, fit_index, fit_labels, num_classes, c);
                    for (const SvmModel& svm : model.per_class)
                        if (!svm.converged) ++report.convergence_failures;
                    for (std::size_t t : val)
                        if (ovr_predict(model, kernel, train[t]) == train_labels[t])
                            ++grid_correct;
                }
                if (first || grid_correct > best_correct) {
                    best_correct = grid_correct;
                    best_c = c;
                    first = false;
                }
            }

            const OvrModel model = ovr_train(kernel, train, train_labels, num_classes, best_c);
            for (const SvmModel& svm : model.per_class)
                if (!svm.converged) ++report.convergence_failures;
            for (std::size_t i : test)
                if (ovr_predict(model, kernel, i) == labels[i]) ++correct;
            chosen.push_back(best_c);
        }

        report.repeat_accuracies.push_back(100.0 * static_cast<double>(correct) /
                                           static_cast<double>(n));
        report.chosen_c.push_back(std::move(chosen));
    }

    double sum = 0.0;
    for (double a : report.repeat_accuracies) sum += a;
    report.mean = sum / static_cast<double>(repeats);
    if (repeats > 1) {
        double ss = 0.0;
        for (double a : report.repeat_accuracies) ss += (a - report.mean) * (a - report.mean);
        report.stddev = std::sqrt(ss / static_cast<double>(repeats - 1));
    }
    return report;
}

std::vector<long long> sp_histogram(const Graph& g) {
    const std::size_t m = g.vertices();
    constexpr long long kUnreachable = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dist(m * m, kUnreachable);
    for (std::size_t i = 0; i < m; ++i) {
        dist[i * m + i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && g.adjacency(i, j) != 0.0) dist[i * m + j] = 1;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            const long long dik = dist[i * m + k];
            if (dik >= kUnreachable) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (dik + dist[k * m + j] < dist[i * m + j])
                    dist[i * m + j] = dik + dist[k * m + j];
        }

    std::vector<long long> hist;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const long long d = dist[i * m + j];
            if (d >= kUnreachable) continue;
            if (static_cast<std::size_t>(d) >= hist.size())
                hist.resize(static_cast<std::size_t>(d) + 1, 0);
            ++hist[static_cast<std::size_t>(d)];
        }
    return hist;
}

Matrix shortest_path_kernel(const Dataset& ds) {
    const std::size_t n = ds.graphs.size();
    if (n == 0) throw std::invalid_argument("shortest_path_kernel: empty dataset");
    std::vector<std::vector<long long>> hists;
    hists.reserve(n);
    for (const Graph& g : ds.graphs) hists.push_back(sp_histogram(g));

    const auto dot = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        const std::size_t overlap = std::min(a.size(), b.size());
        double d = 0.0;
        for (std::size_t l = 0; l < overlap; ++l)
            d += static_cast<double>(a[l]) * static_cast<double>(b[l]);
        return d;
    };

    std::vector<double> self(n);
    for (std::size_t i = 0; i < n; ++i) self[i] = dot(hists[i], hists[i]);

    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double v;
            if (self[i] == 0.0 || self[j] == 0.0)
                v = self[i] == self[j] ? 1.0 : 0.0;  // empty histograms match each other
            else
                v = dot(hists[i], hists[j]) / std::sqrt(self[i] * self[j]);
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return k;
}

}  // namespace gbsbin
