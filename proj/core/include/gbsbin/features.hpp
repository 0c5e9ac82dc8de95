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

#ifndef GBSBIN_FEATURES_HPP
#define GBSBIN_FEATURES_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gbsbin/graphio.hpp"
#include "gbsbin/matrix.hpp"

namespace gbsbin {

// Feature grouping: click counts (mu), first-five-mode patterns (nu),
// or nu with the vacuum pattern dropped (nu_plus).
enum class Scheme { kMu, kNu, kNuPlus };

enum class FeatureMode { kExact, kSampled };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

// Outcomes the underlying estimator distinguishes: max_clicks + 1 for mu,
// 32 for both nu variants (nu_plus drops a column only after counting).
std::size_t scheme_outcome_count(Scheme scheme, int max_clicks);

// Column labels: mu_0..mu_N, or nu_00000..nu_11111 with mode 0 leftmost.
std::vector<std::string> feature_names(Scheme scheme, int max_clicks);

struct FeaturizeConfig {
    Scheme scheme = Scheme::kNu;
    FeatureMode mode = FeatureMode::kExact;
    double nbar = 5.0;
    int max_clicks = 6;
    // 0 means: derive from scheme_outcome_count via sample_size(|Omega|,
    // 0.06, 0.01).
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct FeatureMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<int> graph_ids;
    std::vector<int> labels;
    std::vector<std::string> names;
    std::string dataset;
    Scheme scheme = Scheme::kNu;
    FeatureMode mode = FeatureMode::kExact;
    std::size_t skipped = 0;

    std::size_t size() const { return rows.size(); }
    std::size_t dimension() const { return names.size(); }
};

/**
 * One feature vector per graph.  Sampled mode seeds graph g with
 * cfg.seed XOR g.id, so results do not depend on dataset order.  Graphs
 * whose featurization fails are skipped with a warning and counted in
 * `skipped`; row order follows dataset order.  cfg.workers > 1 spreads
 * graphs across threads, with identical output.
 */
FeatureMatrix featurize(const Dataset& ds, const FeaturizeConfig& cfg);

struct PcaResult {
    Matrix components;                      // k x D, rows orthonormal
    std::vector<double> explained_variance;  // descending
    bool degenerate = false;                 // all-zero variance input
};

/**
 * Principal components of the mean-centered rows: top-k eigenvectors of
 * the sample covariance, eigenvalues descending.  Each component is
 * signed so its largest-magnitude weight is positive.
 */
PcaResult pca(const FeatureMatrix& f, std::size_t k);

// CSV round trip: header "graph_id,label,<names...>", one row per graph,
// values printed with %.17g so rewrites are byte-stable.
void write_feature_csv(const std::filesystem::path& path, const FeatureMatrix& f);
FeatureMatrix read_feature_csv(const std::filesystem::path& path);

}  // namespace gbsbin

#endif  // GBSBIN_FEATURES_HPP
