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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gbsbin/graphio.hpp"
#include "gbsbin/learn.hpp"
#include "gbsbin/linalg.hpp"
#include "gbsbin/rng.hpp"

using namespace gbsbin;

namespace {

// Two well-separated 2D blobs with alternating labels.
void blobs(std::size_t per_class, std::vector<std::vector<double>>* rows,
           std::vector<int>* labels) {
    SplitMix64 rng(2024);
    for (std::size_t i = 0; i < per_class; ++i) {
        rows->push_back({rng.next_double(), rng.next_double()});
        labels->push_back(0);
        rows->push_back({6.0 + rng.next_double(), 6.0 + rng.next_double()});
        labels->push_back(1);
    }
}

std::vector<std::size_t> everything(std::size_t n) {
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i) index[i] = i;
    return index;
}

Graph complete_graph(std::size_t n) {
    Graph g;
    g.adjacency = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) g.adjacency(i, j) = 1.0;
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("learn");

TEST_CASE("rbf kernel has unit diagonal, symmetry and hand values") {
    const std::vector<std::vector<double>> rows = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}};
    const double gamma = 0.3;
    const Matrix k = rbf_kernel(rows, gamma);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(k(i, i) == 1.0);
        for (std::size_t j = 0; j < 3; ++j) CHECK(k(i, j) == k(j, i));
    }
    CHECK(std::abs(k(0, 1) - std::exp(-gamma * 1.0)) < 1e-15);
    CHECK(std::abs(k(0, 2) - std::exp(-gamma * 4.0)) < 1e-15);
    CHECK(std::abs(k(1, 2) - std::exp(-gamma * 5.0)) < 1e-15);

    CHECK_THROWS_AS(rbf_kernel(rows, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rbf_kernel(rows, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(rbf_kernel({}, 1.0), std::invalid_argument);
}

TEST_CASE("rbf kernel matrices are positive semidefinite") {
    SplitMix64 rng(77);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 12; ++i) rows.push_back({rng.next_double(), rng.next_double(), rng.next_double()});
    const Matrix k = rbf_kernel(rows, 1.3);
    const EigResult eig = sym_eig(k);
    for (double v : eig.values) CHECK(v >= -1e-8);
}

TEST_CASE("rbf_auto_gamma averages column variances") {
    // Column variances (population) 0.25 and 1.0; D = 2.
    const std::vector<std::vector<double>> rows = {{0.0, 0.0}, {1.0, 2.0}};
    CHECK(std::abs(rbf_auto_gamma(rows) - 1.0 / (2.0 * 0.625)) < 1e-12);

    const std::vector<std::vector<double>> constant = {{3.0, 3.0, 3.0}, {3.0, 3.0, 3.0}};
    CHECK(rbf_auto_gamma(constant) == 1.0 / 3.0);
}

TEST_CASE("the svm separates blobs and respects box constraints") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    blobs(10, &rows, &labels);
    const Matrix k = rbf_kernel(rows, rbf_auto_gamma(rows));
    std::vector<int> y;
    for (int label : labels) y.push_back(label == 1 ? 1 : -1);

    const SvmModel model = svm_train(k, everything(rows.size()), y, 10.0);
    CHECK(model.converged);
    double dual_balance = 0.0;
    for (std::size_t i = 0; i < model.alpha.size(); ++i) {
        CHECK(model.alpha[i] >= -1e-12);
        CHECK(model.alpha[i] <= 10.0 + 1e-12);
        dual_balance += model.alpha[i] * model.y[i];
    }
    CHECK(std::abs(dual_balance) < 1e-9);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK((svm_decision(model, k, i) > 0.0) == (y[i] > 0));
}

TEST_CASE("a single-class training set yields the constant model") {
    const std::vector<std::vector<double>> rows = {{0.0}, {1.0}, {2.0}};
    const Matrix k = rbf_kernel(rows, 1.0);
    const SvmModel plus = svm_train(k, everything(3), {1, 1, 1}, 1.0);
    CHECK(plus.converged);
    for (std::size_t i = 0; i < 3; ++i) CHECK(svm_decision(plus, k, i) > 0.0);
    const SvmModel minus = svm_train(k, everything(3), {-1, -1, -1}, 1.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(svm_decision(minus, k, i) < 0.0);
}

TEST_CASE("svm_train validates labels, sizes and C") {
    const std::vector<std::vector<double>> rows = {{0.0}, {1.0}};
    const Matrix k = rbf_kernel(rows, 1.0);
    CHECK_THROWS_AS(svm_train(k, everything(2), {1, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(svm_train(k, everything(2), {1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(svm_train(k, everything(2), {1, -1}, 0.0), std::invalid_argument);
}

TEST_CASE("one-vs-rest breaks exact ties toward the lowest class id") {
    OvrModel model;
    model.num_classes = 3;
    for (int c = 0; c < 3; ++c) {
        SvmModel m;
        m.index = {0};
        m.y = {1};
        m.alpha = {0.0};  // decision reduces to the bias
        m.bias = (c == 1 || c == 2) ? 0.5 : -0.5;
        model.per_class.push_back(m);
    }
    const Matrix k(1, 1);
    CHECK(ovr_predict(model, k, 0) == 1);  // classes 1 and 2 tie at 0.5
}

TEST_CASE("one-vs-rest classifies three separated blobs") {
    SplitMix64 rng(31);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    const double centers[3][2] = {{0.0, 0.0}, {8.0, 0.0}, {0.0, 8.0}};
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 6; ++i) {
            rows.push_back({centers[c][0] + rng.next_double(), centers[c][1] + rng.next_double()});
            labels.push_back(c);
        }
    const Matrix k = rbf_kernel(rows, rbf_auto_gamma(rows));
    const OvrModel model = ovr_train(k, everything(rows.size()), labels, 3, 10.0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(ovr_predict(model, k, i) == labels[i]);

    CHECK_THROWS_AS(ovr_train(k, everything(rows.size()), labels, 1, 10.0),
                    std::invalid_argument);
}

TEST_CASE("fold assignment is stratified, covering and deterministic") {
    std::vector<int> labels;
    for (int i = 0; i < 21; ++i) labels.push_back(i % 2);  // 11 zeros, 10 ones

    SplitMix64 rng_a(5);
    bool stratified = false;
    const std::vector<int> folds = assign_folds(labels, 4, rng_a, &stratified);
    CHECK(stratified);
    REQUIRE(folds.size() == labels.size());

    int per_fold_class[4][2] = {};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        REQUIRE(folds[i] >= 0);
        REQUIRE(folds[i] < 4);
        ++per_fold_class[folds[i]][labels[i]];
    }
    for (int c = 0; c < 2; ++c) {
        int lo = 1000;
        int hi = 0;
        for (int f = 0; f < 4; ++f) {
            lo = std::min(lo, per_fold_class[f][c]);
            hi = std::max(hi, per_fold_class[f][c]);
        }
        CHECK(hi - lo <= 1);
    }

    SplitMix64 rng_b(5);
    bool again = false;
    CHECK(assign_folds(labels, 4, rng_b, &again) == folds);
}

TEST_CASE("a class smaller than the fold count forces a plain split") {
    std::vector<int> labels(12, 0);
    labels[3] = 1;  // one sample of class 1, three folds
    SplitMix64 rng(9);
    bool stratified = true;
    const std::vector<int> folds = assign_folds(labels, 3, rng, &stratified);
    CHECK_FALSE(stratified);
    std::vector<int> counts(3, 0);
    for (int f : folds) ++counts[f];
    for (int c : counts) CHECK(c == 4);

    SplitMix64 rng2(9);
    CHECK_THROWS_AS(assign_folds(labels, 1, rng2, &stratified), std::invalid_argument);
    std::vector<int> tiny(2, 0);
    CHECK_THROWS_AS(assign_folds(tiny, 3, rng2, &stratified), std::invalid_argument);
}

TEST_CASE("double cross-validation is perfect on separable blobs") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    blobs(20, &rows, &labels);
    const Matrix k = rbf_kernel(rows, rbf_auto_gamma(rows));
    const CvReport report = double_cv(k, labels, default_c_grid(), 3, 4, 11);
    REQUIRE(report.repeat_accuracies.size() == 3);
    REQUIRE(report.chosen_c.size() == 3);
    REQUIRE(report.chosen_c[0].size() == 4);
    CHECK(report.mean == 100.0);
    CHECK(report.stddev == 0.0);
    CHECK(report.stratified);
    CHECK(report.convergence_failures == 0);

    const CvReport again = double_cv(k, labels, default_c_grid(), 3, 4, 11);
    CHECK(again.repeat_accuracies == report.repeat_accuracies);
    CHECK(again.chosen_c == report.chosen_c);
}

TEST_CASE("label-permuted data scores at chance level") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    blobs(20, &rows, &labels);
    // Balanced relabeling with no relation to geometry.
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (i % 4 < 2) ? 0 : 1;
    const Matrix k = rbf_kernel(rows, rbf_auto_gamma(rows));
    const CvReport report = double_cv(k, labels, default_c_grid(), 3, 4, 13);
    CHECK(report.mean > 20.0);
    CHECK(report.mean < 80.0);
}

TEST_CASE("double_cv validates kernel size, grid and repeats") {
    const std::vector<std::vector<double>> rows = {{0.0}, {1.0}, {2.0}, {3.0}};
    const Matrix k = rbf_kernel(rows, 1.0);
    const std::vector<int> labels = {0, 1, 0, 1};
    CHECK_THROWS_AS(double_cv(k, {0, 1}, default_c_grid(), 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(double_cv(k, labels, {}, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(double_cv(k, labels, default_c_grid(), 0, 2, 1), std::invalid_argument);
}

TEST_CASE("the default C grid spans seven decades") {
    const std::vector<double> grid = default_c_grid();
    REQUIRE(grid.size() == 8);
    CHECK(std::abs(grid.front() - 1e-4) < 1e-19);
    CHECK(std::abs(grid.back() - 1e3) < 1e-12);
    for (std::size_t i = 1; i < grid.size(); ++i)
        CHECK(std::abs(grid[i] / grid[i - 1] - 10.0) < 1e-12);
}

TEST_CASE("shortest-path histograms count pairs by distance") {
    // Path graph 0-1-2-3: distances 1,1,1,2,2,3.
    Graph path;
    path.adjacency = Matrix(4, 4);
    for (std::size_t i = 0; i + 1 < 4; ++i)
        path.adjacency(i, i + 1) = path.adjacency(i + 1, i) = 1.0;
    const std::vector<long long> h = sp_histogram(path);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == 0);
    CHECK(h[1] == 3);
    CHECK(h[2] == 2);
    CHECK(h[3] == 1);

    const std::vector<long long> hk = sp_histogram(complete_graph(4));
    REQUIRE(hk.size() == 2);
    CHECK(hk[1] == 6);

    // Disconnected pairs contribute nothing.
    Graph two;
    two.adjacency = Matrix(4, 4);
    two.adjacency(0, 1) = two.adjacency(1, 0) = 1.0;
    two.adjacency(2, 3) = two.adjacency(3, 2) = 1.0;
    const std::vector<long long> ht = sp_histogram(two);
    REQUIRE(ht.size() == 2);
    CHECK(ht[1] == 2);
}

TEST_CASE("the shortest-path kernel has a closed form on K4 vs K4 minus an edge") {
    Dataset ds;
    ds.graphs.push_back(complete_graph(4));
    Graph k4e = complete_graph(4);
    k4e.adjacency(0, 1) = k4e.adjacency(1, 0) = 0.0;
    ds.graphs.push_back(k4e);
    Graph empty;
    empty.adjacency = Matrix(3, 3);
    ds.graphs.push_back(empty);
    Graph empty2;
    empty2.adjacency = Matrix(2, 2);
    ds.graphs.push_back(empty2);

    const Matrix k = shortest_path_kernel(ds);
    for (std::size_t i = 0; i < 4; ++i) CHECK(k(i, i) == 1.0);
    // Histograms (0,6) and (0,5,1): dot 30, norms 6 and sqrt(26).
    CHECK(std::abs(k(0, 1) - 5.0 / std::sqrt(26.0)) < 1e-12);
    CHECK(k(1, 0) == k(0, 1));
    // Edgeless graphs match only each other.
    CHECK(k(2, 3) == 1.0);
    CHECK(k(0, 2) == 0.0);
    CHECK(k(1, 3) == 0.0);

    CHECK_THROWS_AS(shortest_path_kernel(Dataset{}), std::invalid_argument);
}

TEST_SUITE_END();
