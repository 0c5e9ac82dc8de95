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

#ifndef GBSBIN_LEARN_HPP
#define GBSBIN_LEARN_HPP

#include <cstdint>
#include <vector>

#include "gbsbin/graphio.hpp"
#include "gbsbin/matrix.hpp"
#include "gbsbin/rng.hpp"

namespace gbsbin {

// kappa(x, x') = exp(-gamma ||x - x'||^2); gamma must be positive and the
// rows finite.
Matrix rbf_kernel(const std::vector<std::vector<double>>& rows, double gamma);

// Heuristic bandwidth 1 / (D * mean column variance); falls back to 1/D
// for constant data.
double rbf_auto_gamma(const std::vector<std::vector<double>>& rows);

/**
 * Binary kernel SVM trained by sequential minimal optimization on a
 * precomputed kernel.  Training rows are addressed through `index`, so one
 * kernel over the whole dataset serves every fold and grid point.
 */
struct SvmModel {
    std::vector<std::size_t> index;  // kernel rows/columns used in training
    std::vector<int> y;              // +1/-1, aligned with index
    std::vector<double> alpha;       // dual coefficients, aligned with index
    double bias = 0.0;
    double c = 1.0;
    bool converged = true;
};

/**
 * SMO with working pairs picked by maximal KKT violation, stopping when
 * the violating gap drops to 2e-3, capped at 10^5 iterations.  A cap hit
 * still returns the model, flagged non-converged with a warning.
 * Training sets containing a single class yield the trivial model that
 * always answers that class.
 */
SvmModel svm_train(const Matrix& kernel, const std::vector<std::size_t>& index,
                   const std::vector<int>& y, double c);

// Decision value sum_i alpha_i y_i K(index_i, column) + bias.
double svm_decision(const SvmModel& model, const Matrix& kernel, std::size_t column);

struct OvrModel {
    std::vector<SvmModel> per_class;  // slot c: class c against the rest
    int num_classes = 0;
};

OvrModel ovr_train(const Matrix& kernel, const std::vector<std::size_t>& index,
                   const std::vector<int>& labels, int num_classes, double c);

// Largest decision value wins; exact ties go to the lowest class id.
int ovr_predict(const OvrModel& model, const Matrix& kernel, std::size_t column);

/**
 * Fold ids (0..folds-1) per sample.  Stratified: per class, indices are
 * shuffled and dealt round-robin.  A class smaller than `folds` forces a
 * plain shuffled split; *stratified reports which path was taken.
 */
std::vector<int> assign_folds(const std::vector<int>& labels, int folds, SplitMix64& rng,
                              bool* stratified);

struct CvReport {
    std::vector<double> repeat_accuracies;  // percent, one per repeat
    double mean = 0.0;
    double stddev = 0.0;                     // sample deviation over repeats
    std::vector<std::vector<double>> chosen_c;  // [repeat][outer fold]
    bool stratified = true;
    int convergence_failures = 0;
    int repeats = 0;
    int folds = 0;
    std::uint64_t seed = 0;
};

/**
 * Double cross-validation: per outer fold, an inner grid search over
 * c_grid (same fold count, capped by the training-set size) picks C by
 * pooled inner accuracy, ties to the smaller C; the winner is retrained
 * on the outer training set and scored on the held-out fold.  A repeat's
 * accuracy pools all outer test predictions.  Repeat r draws its fold
 * assignments from substream(seed, r).
 */
CvReport double_cv(const Matrix& kernel, const std::vector<int>& labels,
                   const std::vector<double>& c_grid, int repeats, int folds,
                   std::uint64_t seed);

// 10^-4, 10^-3, ..., 10^3.
std::vector<double> default_c_grid();

// Counts of unordered vertex pairs by shortest-path length; index =
// length, unreachable pairs excluded.  Edges are taken as unweighted.
std::vector<long long> sp_histogram(const Graph& g);

/**
 * Shortest-path kernel: Floyd-Warshall histograms compared by dot
 * product, normalized to k(g,g') / sqrt(k(g,g) k(g',g')).  Graphs with an
 * empty histogram match only each other.
 */
Matrix shortest_path_kernel(const Dataset& ds);

}  // namespace gbsbin

#endif  // GBSBIN_LEARN_HPP
