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
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gbsbin/encoding.hpp"
#include "gbsbin/features.hpp"
#include "gbsbin/graphio.hpp"
#include "gbsbin/probability.hpp"

using namespace gbsbin;
namespace fs = std::filesystem;

namespace {

Dataset small_dataset(std::size_t graphs, std::size_t vertices, unsigned seed_base) {
    Dataset ds;
    ds.name = "synthetic";
    ds.num_classes = 2;
    ds.original_labels = {0, 1};
    for (std::size_t i = 0; i < graphs; ++i) {
        Graph g = erdos_renyi(vertices, 0.5 + 0.1 * static_cast<double>(i % 3),
                              seed_base + static_cast<unsigned>(i));
        g.id = static_cast<int>(i);
        g.label = static_cast<int>(i % 2);
        ds.graphs.push_back(std::move(g));
    }
    return ds;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "gbsbin-features-test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE_BEGIN("features");

TEST_CASE("feature names enumerate the outcome space") {
    const std::vector<std::string> mu = feature_names(Scheme::kMu, 6);
    REQUIRE(mu.size() == 7);
    CHECK(mu.front() == "mu_0");
    CHECK(mu.back() == "mu_6");

    const std::vector<std::string> nu = feature_names(Scheme::kNu, 6);
    REQUIRE(nu.size() == 32);
    CHECK(nu.front() == "nu_00000");
    CHECK(nu[1] == "nu_00001");
    CHECK(nu.back() == "nu_11111");

    const std::vector<std::string> nu_plus = feature_names(Scheme::kNuPlus, 6);
    REQUIRE(nu_plus.size() == 31);
    CHECK(nu_plus.front() == "nu_00001");
}

TEST_CASE("scheme names round-trip and reject unknowns") {
    for (Scheme s : {Scheme::kMu, Scheme::kNu, Scheme::kNuPlus})
        CHECK(scheme_from_name(scheme_name(s)) == s);
    CHECK_THROWS_AS(scheme_from_name("kappa"), std::invalid_argument);
    CHECK(scheme_outcome_count(Scheme::kMu, 6) == 7);
    CHECK(scheme_outcome_count(Scheme::kNu, 6) == 32);
    CHECK(scheme_outcome_count(Scheme::kNuPlus, 6) == 32);
}

TEST_CASE("exact featurization reproduces the per-graph distributions") {
    const Dataset ds = small_dataset(4, 6, 900);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    cfg.mode = FeatureMode::kExact;
    cfg.nbar = 5.0;
    const FeatureMatrix f = featurize(ds, cfg);
    REQUIRE(f.size() == 4);
    REQUIRE(f.dimension() == 32);
    CHECK(f.skipped == 0);

    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(f.graph_ids[i] == ds.graphs[i].id);
        CHECK(f.labels[i] == ds.graphs[i].label);
        const std::vector<double> nu = exact_nu_distribution(encode(ds.graphs[i], 5.0));
        for (std::size_t k = 0; k < 32; ++k) CHECK(std::abs(f.rows[i][k] - nu[k]) < 1e-12);
    }

    FeaturizeConfig mu_cfg;
    mu_cfg.scheme = Scheme::kMu;
    mu_cfg.max_clicks = 4;
    const FeatureMatrix fm = featurize(ds, mu_cfg);
    REQUIRE(fm.dimension() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
        const std::vector<double> mu = exact_mu_distribution(encode(ds.graphs[i], 5.0), 4);
        for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(fm.rows[i][k] - mu[k]) < 1e-12);
    }
}

TEST_CASE("nu_plus drops exactly the vacuum column") {
    const Dataset ds = small_dataset(3, 6, 905);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    const FeatureMatrix full = featurize(ds, cfg);
    cfg.scheme = Scheme::kNuPlus;
    const FeatureMatrix plus = featurize(ds, cfg);
    REQUIRE(plus.dimension() == 31);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 31; ++k) CHECK(plus.rows[i][k] == full.rows[i][k + 1]);
}

TEST_CASE("an edgeless graph featurizes to the vacuum row") {
    Dataset ds = small_dataset(2, 6, 910);
    ds.graphs[1].adjacency = Matrix(6, 6);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    const FeatureMatrix f = featurize(ds, cfg);
    REQUIRE(f.size() == 2);
    CHECK(f.rows[1][0] == 1.0);
    for (std::size_t k = 1; k < 32; ++k) CHECK(f.rows[1][k] == 0.0);

    cfg.scheme = Scheme::kNuPlus;
    const FeatureMatrix fp = featurize(ds, cfg);
    for (std::size_t k = 0; k < 31; ++k) CHECK(fp.rows[1][k] == 0.0);

    cfg.scheme = Scheme::kMu;
    const FeatureMatrix fm = featurize(ds, cfg);
    CHECK(fm.rows[1][0] == 1.0);
}

TEST_CASE("sampled featurization is deterministic and order-independent") {
    Dataset ds = small_dataset(3, 6, 920);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    cfg.mode = FeatureMode::kSampled;
    cfg.samples = 400;
    cfg.seed = 5;

    const FeatureMatrix a = featurize(ds, cfg);
    const FeatureMatrix b = featurize(ds, cfg);
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.rows[i] == b.rows[i]);

    cfg.seed = 6;
    const FeatureMatrix c = featurize(ds, cfg);
    bool differs = false;
    for (std::size_t i = 0; i < 3; ++i) differs = differs || a.rows[i] != c.rows[i];
    CHECK(differs);

    // Reversing the dataset must not change any row: each graph is seeded
    // by id, not by position.
    cfg.seed = 5;
    Dataset reversed = ds;
    std::reverse(reversed.graphs.begin(), reversed.graphs.end());
    const FeatureMatrix r = featurize(reversed, cfg);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto pos = static_cast<std::size_t>(
            std::find(r.graph_ids.begin(), r.graph_ids.end(), a.graph_ids[i]) -
            r.graph_ids.begin());
        REQUIRE(pos < r.size());
        CHECK(r.rows[pos] == a.rows[i]);
    }
}

TEST_CASE("worker count does not change sampled output") {
    Dataset ds = small_dataset(4, 6, 930);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    cfg.mode = FeatureMode::kSampled;
    cfg.samples = 300;
    cfg.seed = 9;
    cfg.workers = 1;
    const FeatureMatrix serial = featurize(ds, cfg);
    cfg.workers = 3;
    const FeatureMatrix parallel = featurize(ds, cfg);
    for (std::size_t i = 0; i < 4; ++i) CHECK(serial.rows[i] == parallel.rows[i]);
}

TEST_CASE("the default sample budget tracks the reconstruction bound") {
    Dataset ds = small_dataset(1, 6, 940);
    ds.graphs.resize(1);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    cfg.mode = FeatureMode::kSampled;
    cfg.samples = 0;  // derive 14881 from sample_size(32, 0.06, 0.01)
    cfg.seed = 12;
    const FeatureMatrix f = featurize(ds, cfg);

    const std::vector<double> nu = exact_nu_distribution(encode(ds.graphs[0], 5.0));
    double l1 = 0.0;
    for (std::size_t k = 0; k < 32; ++k) l1 += std::abs(f.rows[0][k] - nu[k]);
    CHECK(l1 <= 0.06);
}

TEST_CASE("featurize rejects an empty dataset") {
    CHECK_THROWS_AS(featurize(Dataset{}, FeaturizeConfig{}), std::invalid_argument);
}

TEST_CASE("feature CSV files round-trip exactly") {
    const Dataset ds = small_dataset(3, 6, 950);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    const FeatureMatrix f = featurize(ds, cfg);

    TempDir dir;
    const fs::path csv = dir.path / "features.csv";
    write_feature_csv(csv, f);
    const FeatureMatrix back = read_feature_csv(csv);
    CHECK(back.names == f.names);
    CHECK(back.graph_ids == f.graph_ids);
    CHECK(back.labels == f.labels);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.rows[i] == f.rows[i]);
}

TEST_CASE("feature CSV parsing rejects malformed input") {
    TempDir dir;
    const fs::path bad_header = dir.path / "h.csv";
    {
        std::ofstream out(bad_header);
        out << "id,label,nu_00000\n0,1,0.5\n";
    }
    CHECK_THROWS_AS(read_feature_csv(bad_header), std::runtime_error);

    const fs::path bad_value = dir.path / "v.csv";
    {
        std::ofstream out(bad_value);
        out << "graph_id,label,nu_00000\n0,1,zero\n";
    }
    CHECK_THROWS_AS(read_feature_csv(bad_value), std::runtime_error);

    const fs::path short_row = dir.path / "s.csv";
    {
        std::ofstream out(short_row);
        out << "graph_id,label,nu_00000,nu_00001\n0,1,0.5\n";
    }
    CHECK_THROWS_AS(read_feature_csv(short_row), std::runtime_error);

    CHECK_THROWS_AS(read_feature_csv(dir.path / "absent.csv"), std::runtime_error);
}

TEST_CASE("pca recovers the direction of a rank-one cloud") {
    FeatureMatrix f;
    f.names = {"x", "y", "z"};
    // Points on the line (t, 2t, 0): one direction carries all variance.
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) f.rows.push_back({t, 2.0 * t, 3.0});
    const PcaResult p = pca(f, 2);
    REQUIRE(p.components.rows() == 2);
    REQUIRE(p.components.cols() == 3);
    CHECK_FALSE(p.degenerate);

    const double s = std::sqrt(5.0);
    CHECK(std::abs(p.components(0, 0) - 1.0 / s) < 1e-10);
    CHECK(std::abs(p.components(0, 1) - 2.0 / s) < 1e-10);
    CHECK(std::abs(p.components(0, 2)) < 1e-10);
    CHECK(p.explained_variance[0] > p.explained_variance[1] - 1e-15);
    CHECK(std::abs(p.explained_variance[1]) < 1e-10);

    // Constant columns carry no weight in the leading component.
    CHECK(std::abs(p.components(0, 2)) < 1e-12);
}

TEST_CASE("pca components are orthonormal with positive lead weights") {
    const Dataset ds = small_dataset(6, 6, 960);
    FeaturizeConfig cfg;
    cfg.scheme = Scheme::kNu;
    const FeatureMatrix f = featurize(ds, cfg);
    const PcaResult p = pca(f, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        double peak = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            double dot = 0.0;
            for (std::size_t d = 0; d < f.dimension(); ++d)
                dot += p.components(i, d) * p.components(j, d);
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
        for (std::size_t d = 0; d < f.dimension(); ++d)
            if (std::abs(p.components(i, d)) > std::abs(peak)) peak = p.components(i, d);
        CHECK(peak > 0.0);
    }
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(p.explained_variance[i] <= p.explained_variance[i - 1] + 1e-15);
}

TEST_CASE("pca flags a zero-variance cloud as degenerate") {
    FeatureMatrix f;
    f.names = {"x", "y"};
    for (int i = 0; i < 4; ++i) f.rows.push_back({1.0, 2.0});
    const PcaResult p = pca(f, 1);
    CHECK(p.degenerate);
    CHECK(p.explained_variance[0] == 0.0);
}

TEST_CASE("pca validates its arguments") {
    FeatureMatrix f;
    f.names = {"x", "y"};
    f.rows.push_back({1.0, 2.0});
    CHECK_THROWS_AS(pca(f, 1), std::invalid_argument);  // one row
    f.rows.push_back({2.0, 1.0});
    CHECK_THROWS_AS(pca(f, 3), std::invalid_argument);  // k > D
    CHECK_THROWS_AS(pca(f, 0), std::invalid_argument);
}

TEST_SUITE_END();
