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

#include "gbsbin/features.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gbsbin/combinatorics.hpp"
#include "gbsbin/encoding.hpp"
#include "gbsbin/linalg.hpp"
#include "gbsbin/probability.hpp"
#include "gbsbin/sampling.hpp"

namespace gbsbin {

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::kMu: return "mu";
        case Scheme::kNu: return "nu";
        case Scheme::kNuPlus: return "nu_plus";
    }
    throw std::logic_error("scheme_name: unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "mu") return Scheme::kMu;
    if (name == "nu") return Scheme::kNu;
    if (name == "nu_plus") return Scheme::kNuPlus;
    throw std::invalid_argument("unknown feature scheme: " + name);
}

std::size_t scheme_outcome_count(Scheme scheme, int max_clicks) {
    if (scheme == Scheme::kMu) {
        if (max_clicks < 0) throw std::invalid_argument("negative click cap");
        return static_cast<std::size_t>(max_clicks) + 1;
    }
    return 32;
}

std::vector<std::string> feature_names(Scheme scheme, int max_clicks) {
    std::vector<std::string> names;
    if (scheme == Scheme::kMu) {
        for (int i = 0; i <= max_clicks; ++i) names.push_back("mu_" + std::to_string(i));
        return names;
    }
    for (std::size_t index = scheme == Scheme::kNuPlus ? 1 : 0; index < 32; ++index) {
        std::string pattern(5, '0');
        for (std::size_t j = 0; j < 5; ++j)
            if ((index >> (4 - j)) & 1u) pattern[j] = '1';
        names.push_back("nu_" + pattern);
    }
    return names;
}

namespace {

std::vector<double> featurize_one(const Graph& g, const FeaturizeConfig& cfg,
                                  std::size_t samples) {
    const std::size_t dim = scheme_outcome_count(cfg.scheme, cfg.max_clicks);
    if (g.edge_count() == 0) {
        // Edgeless graphs encode to the vacuum state; no rescaling constant
        // reaches a positive mean photon number, but every detector stays
        // silent, so the feature vector is known outright.
        std::vector<double> row(dim, 0.0);
        row[0] = 1.0;
        if (cfg.scheme == Scheme::kNuPlus) return std::vector<double>(31, 0.0);
        return row;
    }

    const GaussianEncoding enc = encode(g, cfg.nbar);
    std::vector<double> row;
    if (cfg.mode == FeatureMode::kExact) {
        row = cfg.scheme == Scheme::kMu ? exact_mu_distribution(enc, cfg.max_clicks)
                                        : exact_nu_distribution(enc);
    } else {
        const std::uint64_t seed = cfg.seed ^ static_cast<std::uint64_t>(g.id);
        const SampleBatch batch = sample_binary(enc, samples, seed);
        row = cfg.scheme == Scheme::kMu ? empirical_mu(batch, cfg.max_clicks)
                                        : empirical_nu(batch);
    }
    if (cfg.scheme == Scheme::kNuPlus) row.erase(row.begin());
    return row;
}

}  // namespace

FeatureMatrix featurize(const Dataset& ds, const FeaturizeConfig& cfg) {
    if (ds.graphs.empty()) throw std::invalid_argument("featurize: empty dataset");
    const std::size_t samples =
        cfg.samples > 0
            ? cfg.samples
            : static_cast<std::size_t>(sample_size(
                  static_cast<long long>(scheme_outcome_count(cfg.scheme, cfg.max_clicks)),
                  0.06, 0.01));

    struct Slot {
        std::vector<double> row;
        std::string error;
        bool failed = false;
    };
    std::vector<Slot> slots(ds.graphs.size());

    const auto work = [&](std::size_t i) {
        try {
            slots[i].row = featurize_one(ds.graphs[i], cfg, samples);
        } catch (const std::exception& e) {
            slots[i].failed = true;
            slots[i].error = e.what();
        }
    };

    const int workers = std::max(1, cfg.workers);
    if (workers == 1 || ds.graphs.size() < 2) {
        for (std::size_t i = 0; i < ds.graphs.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t n_threads =
            std::min<std::size_t>(static_cast<std::size_t>(workers), ds.graphs.size());
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < ds.graphs.size();
                     i = next.fetch_add(1))
                    work(i);
            });
        for (std::thread& t : pool) t.join();
    }

    FeatureMatrix f;
    f.dataset = ds.name;
    f.scheme = cfg.scheme;
    f.mode = cfg.mode;
    f.names = feature_names(cfg.scheme, cfg.max_clicks);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].failed) {
            std::cerr << "featurize: skipped graph " << ds.graphs[i].id << ": "
                      << slots[i].error << "\n";
            ++f.skipped;
            continue;
        }
        f.rows.push_back(std::move(slots[i].row));
        f.graph_ids.push_back(ds.graphs[i].id);
        f.labels.push_back(ds.graphs[i].label);
    }
    if (f.skipped > 0)
        std::cerr << "featurize: skipped " << f.skipped << " of " << ds.graphs.size()
                  << " graphs\n";
    if (f.rows.empty()) throw std::runtime_error("featurize: every graph failed");
    return f;
}

PcaResult pca(const FeatureMatrix& f, std::size_t k) {
    const std::size_t n = f.rows.size();
    if (n < 2) throw std::invalid_argument("pca: need at least two rows");
    const std::size_t dim = f.rows.front().size();
    if (k < 1 || k > dim) throw std::invalid_argument("pca: need 1 <= k <= columns");
    for (const auto& row : f.rows)
        if (row.size() != dim) throw std::invalid_argument("pca: ragged feature matrix");

    std::vector<double> mean(dim, 0.0);
    for (const auto& row : f.rows)
        for (std::size_t j = 0; j < dim; ++j) mean[j] += row[j];
    for (double& v : mean) v /= static_cast<double>(n);

    Matrix cov(dim, dim);
    for (const auto& row : f.rows)
        for (std::size_t a = 0; a < dim; ++a) {
            const double da = row[a] - mean[a];
            for (std::size_t b = a; b < dim; ++b)
                cov(a, b) += da * (row[b] - mean[b]);
        }
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            cov(a, b) /= static_cast<double>(n - 1);
            cov(b, a) = cov(a, b);
        }

    const EigResult eig = sym_eig(cov);
    PcaResult result;
    result.degenerate = cov.trace() < 1e-15;
    result.components = Matrix(k, dim);
    result.explained_variance.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        result.explained_variance[i] = std::max(0.0, eig.values[i]);
        std::size_t top = 0;
        for (std::size_t j = 1; j < dim; ++j)
            if (std::abs(eig.vectors(j, i)) > std::abs(eig.vectors(top, i))) top = j;
        const double sign = eig.vectors(top, i) < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < dim; ++j)
            result.components(i, j) = sign * eig.vectors(j, i);
    }
    return result;
}

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

void write_feature_csv(const std::filesystem::path& path, const FeatureMatrix& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "graph_id,label";
    for (const std::string& name : f.names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        out << f.graph_ids[i] << ',' << f.labels[i];
        for (double v : f.rows[i]) out << ',' << format_value(v);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

FeatureMatrix read_feature_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty feature file: " + path.string());
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "graph_id" || header[1] != "label")
        throw std::runtime_error("malformed feature header in " + path.string());

    FeatureMatrix f;
    f.names.assign(header.begin() + 2, header.end());
    f.dataset = path.stem().string();
    if (f.names.front().rfind("mu_", 0) == 0)
        f.scheme = Scheme::kMu;
    else
        f.scheme = f.names.front() == "nu_00000" ? Scheme::kNu : Scheme::kNuPlus;

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": wrong column count");
        try {
            f.graph_ids.push_back(std::stoi(fields[0]));
            f.labels.push_back(std::stoi(fields[1]));
            std::vector<double> row;
            row.reserve(fields.size() - 2);
            for (std::size_t j = 2; j < fields.size(); ++j) {
                std::size_t pos = 0;
                row.push_back(std::stod(fields[j], &pos));
                if (pos != fields[j].size()) throw std::invalid_argument(fields[j]);
            }
            f.rows.push_back(std::move(row));
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": malformed value");
        }
    }
    if (f.rows.empty()) throw std::runtime_error("no feature rows in " + path.string());
    return f;
}

}  // namespace gbsbin
