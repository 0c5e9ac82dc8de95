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
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbsbin/combinatorics.hpp"
#include "gbsbin/encoding.hpp"
#include "gbsbin/features.hpp"
#include "gbsbin/graphio.hpp"
#include "gbsbin/learn.hpp"
#include "gbsbin/matfun.hpp"
#include "gbsbin/matrix.hpp"
#include "gbsbin/probability.hpp"
#include "gbsbin/sampling.hpp"

#include "sha1.hpp"

namespace {

using namespace gbsbin;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Bad input from the user; mapped to exit code 2 (internal failures exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double parse_double(const std::string& token) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + token + "'");
    }
    if (used != token.size()) throw UsageError("not a number: '" + token + "'");
    return v;
}

long long parse_integer(const std::string& token) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw UsageError("not an integer: '" + token + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::size_t end = comma == std::string::npos ? s.size() : comma;
        out.push_back(s.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

/**
 * Run record for artifact-producing subcommands.  Written next to the
 * outputs on success and on failure alike; a failed run names the stage
 * that broke so reruns can start from the diagnostic.
 */
class Manifest {
  public:
    Manifest(std::string command, fs::path out_dir)
        : path_(std::move(out_dir)), command_(std::move(command)) {
        path_ /= "manifest.json";
        doc_["command"] = command_;
        doc_["status"] = "ok";
        doc_["config"] = ordered_json::object();
        doc_["inputs"] = ordered_json::object();
        doc_["outputs"] = ordered_json::object();
    }

    ordered_json& config() { return doc_["config"]; }
    ordered_json& doc() { return doc_; }

    void add_input(const fs::path& file) {
        doc_["inputs"][file.generic_string()] = tools::Sha1::of_file(file);
    }
    void add_output(const fs::path& file) {
        doc_["outputs"][file.filename().generic_string()] = tools::Sha1::of_file(file);
    }

    void fail(const std::string& stage, const std::string& what) {
        doc_["status"] = "failed";
        doc_["failed_stage"] = stage;
        doc_["error"] = what;
    }

    void write() const {
        std::ofstream out(path_);
        out << doc_.dump(2) << '\n';
    }

  private:
    fs::path path_;
    std::string command_;
    ordered_json doc_;
};

/// Dataset files the TUDataset loader consumes, sorted for stable hashing.
std::vector<fs::path> tudataset_files(const fs::path& dir) {
    static const char* suffixes[] = {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"};
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        for (const char* suffix : suffixes)
            if (name.size() > std::strlen(suffix) &&
                name.compare(name.size() - std::strlen(suffix), std::string::npos, suffix) == 0)
                files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

// ---------------------------------------------------------------------------
// probs: probability of one click pattern, with optional diagnostics.

struct ProbsOpts {
    std::string graph;
    std::string pattern;
    double nbar = 5.0;
    int pnr_cutoff = -1;
    std::string dump_encoding;
    std::size_t sample_count = 0;
    std::uint64_t seed = 1;
    std::string samples_out;
};

int run_probs(const ProbsOpts& o) {
    Graph g;
    try {
        g = load_edge_list(o.graph);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    BinaryEvent b;
    try {
        b = BinaryEvent::from_string(o.pattern);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (b.modes() != g.vertices())
        throw UsageError("pattern has " + std::to_string(b.modes()) + " modes but the graph has " +
                         std::to_string(g.vertices()) + " vertices");

    GaussianEncoding enc;
    try {
        enc = encode(g, o.nbar);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::cout << "p(" << o.pattern << ") = " << fmt(binary_probability(enc, b)) << '\n';

    if (!o.dump_encoding.empty()) {
        ordered_json doc;
        doc["modes"] = enc.modes();
        doc["nbar"] = enc.nbar;
        doc["c"] = enc.c;
        doc["det_q"] = enc.det_q;
        doc["lambdas"] = enc.lambdas;
        doc["squeezing"] = enc.r;
        doc["o"] = matrix_json(enc.o);
        doc["q"] = matrix_json(enc.q);
        std::ofstream out(o.dump_encoding);
        if (!out) throw std::runtime_error("cannot write " + o.dump_encoding);
        out << doc.dump(2) << '\n';
    }

    if (o.pnr_cutoff >= 0) {
        IdentityCheck chk;
        try {
            chk = verify_binary_pnr_identity(enc, b, o.pnr_cutoff);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << "photon-number partial sum at cutoff " << o.pnr_cutoff << ": "
                  << fmt(chk.partial_sum) << " over " << chk.terms << " events\n"
                  << "gap (threshold probability minus partial sum): " << fmt(chk.gap, "%.6g")
                  << '\n';
    }

    if (o.sample_count > 0) {
        const SampleBatch batch = sample_binary(enc, o.sample_count, o.seed);
        std::ostream* sink = &std::cout;
        std::ofstream file;
        if (!o.samples_out.empty()) {
            file.open(o.samples_out);
            if (!file) throw std::runtime_error("cannot write " + o.samples_out);
            sink = &file;
        }
        for (const BinaryEvent& ev : batch.samples) *sink << ev.to_string() << '\n';
        if (!o.samples_out.empty())
            std::cout << "wrote " << o.sample_count << " samples to " << o.samples_out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// features: dataset -> per-graph feature vectors, CSV + manifest.

struct FeaturesOpts {
    std::string dataset;
    std::string out;
    std::string scheme = "nu";
    std::string mode = "exact";
    double nbar = 5.0;
    int max_clicks = 6;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    std::uint64_t min_vertices = 6;
    std::uint64_t max_vertices = 25;
    std::string dump_dataset;
};

int run_features(const FeaturesOpts& o) {
    if (!fs::is_directory(o.dataset))
        throw UsageError("dataset directory not found: " + o.dataset);

    FeaturizeConfig cfg;
    try {
        cfg.scheme = scheme_from_name(o.scheme);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (o.mode == "exact")
        cfg.mode = FeatureMode::kExact;
    else if (o.mode == "sampled")
        cfg.mode = FeatureMode::kSampled;
    else
        throw UsageError("mode must be 'exact' or 'sampled', got '" + o.mode + "'");
    cfg.nbar = o.nbar;
    cfg.max_clicks = o.max_clicks;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.workers = o.workers;

    fs::create_directories(o.out);
    Manifest man("features", o.out);
    auto& config = man.config();
    config["dataset"] = o.dataset;
    config["scheme"] = o.scheme;
    config["mode"] = o.mode;
    config["nbar"] = o.nbar;
    config["max_clicks"] = o.max_clicks;
    if (cfg.mode == FeatureMode::kSampled) {
        const std::size_t effective =
            cfg.samples > 0 ? cfg.samples
                            : static_cast<std::size_t>(sample_size(
                                  static_cast<long long>(
                                      scheme_outcome_count(cfg.scheme, cfg.max_clicks)),
                                  0.06, 0.01));
        config["samples"] = effective;
        config["seed"] = o.seed;
    }
    config["workers"] = o.workers;
    config["min_vertices"] = o.min_vertices;
    config["max_vertices"] = o.max_vertices;

    std::string stage = "load";
    try {
        for (const fs::path& file : tudataset_files(o.dataset)) man.add_input(file);
        Dataset ds = load_tudataset(o.dataset);

        stage = "preprocess";
        ds = preprocess(ds, o.min_vertices, o.max_vertices);
        std::cout << "dataset " << ds.name << ": " << ds.graphs.size() << " graphs, "
                  << ds.num_classes << " classes after preprocessing\n";

        if (!o.dump_dataset.empty()) {
            stage = "dump-dataset";
            ordered_json doc;
            doc["name"] = ds.name;
            doc["num_classes"] = ds.num_classes;
            doc["original_labels"] = ds.original_labels;
            doc["graphs"] = ordered_json::array();
            for (const Graph& g : ds.graphs) {
                ordered_json item;
                item["id"] = g.id;
                item["label"] = g.label;
                item["adjacency"] = matrix_json(g.adjacency);
                doc["graphs"].push_back(std::move(item));
            }
            std::ofstream dump(o.dump_dataset);
            if (!dump) throw std::runtime_error("cannot write " + o.dump_dataset);
            dump << doc.dump(2) << '\n';
            man.add_output(o.dump_dataset);
        }

        stage = "featurize";
        const FeatureMatrix fm = featurize(ds, cfg);

        stage = "write-features";
        const fs::path csv = fs::path(o.out) / "features.csv";
        write_feature_csv(csv, fm);
        man.add_output(csv);
        man.doc()["skipped_graphs"] = fm.skipped;
        man.write();

        std::cout << "wrote " << csv.generic_string() << ": " << fm.size() << " rows x "
                  << fm.dimension() << " features";
        if (fm.skipped > 0) std::cout << " (" << fm.skipped << " graphs skipped)";
        std::cout << '\n';
        return 0;
    } catch (const std::exception& e) {
        man.fail(stage, e.what());
        man.write();
        throw;
    }
}

// ---------------------------------------------------------------------------
// classify: kernel + repeated double cross-validation, JSON report.

struct ClassifyOpts {
    std::string features;
    std::string kernel = "rbf";
    std::string dataset;
    std::string out;
    std::string gamma = "auto";
    std::string c_grid;
    int repeats = 10;
    int folds = 10;
    std::uint64_t seed = 1;
    std::uint64_t min_vertices = 6;
    std::uint64_t max_vertices = 25;
};

int run_classify(const ClassifyOpts& o) {
    if (o.kernel != "rbf" && o.kernel != "sp")
        throw UsageError("kernel must be 'rbf' or 'sp', got '" + o.kernel + "'");
    if (o.kernel == "rbf" && o.features.empty())
        throw UsageError("the rbf kernel needs --features");
    if (o.kernel == "sp" && o.dataset.empty())
        throw UsageError("the sp kernel needs --dataset");

    std::vector<double> c_grid = default_c_grid();
    if (!o.c_grid.empty()) {
        c_grid.clear();
        for (const std::string& token : split_commas(o.c_grid)) c_grid.push_back(parse_double(token));
        if (c_grid.empty()) throw UsageError("empty C grid");
    }
    double gamma_value = 0.0;
    const bool gamma_auto = o.gamma == "auto";
    if (!gamma_auto) gamma_value = parse_double(o.gamma);

    fs::create_directories(o.out);
    Manifest man("classify", o.out);
    auto& config = man.config();
    config["kernel"] = o.kernel;
    if (o.kernel == "rbf") config["features"] = o.features;
    if (o.kernel == "sp") {
        config["dataset"] = o.dataset;
        config["min_vertices"] = o.min_vertices;
        config["max_vertices"] = o.max_vertices;
    }
    config["gamma"] = o.gamma;
    config["c_grid"] = c_grid;
    config["repeats"] = o.repeats;
    config["folds"] = o.folds;
    config["seed"] = o.seed;

    std::string stage = "load";
    try {
        Matrix kernel;
        std::vector<int> labels;
        if (o.kernel == "rbf") {
            man.add_input(o.features);
            const FeatureMatrix fm = read_feature_csv(o.features);
            labels = fm.labels;
            stage = "kernel";
            if (gamma_auto) gamma_value = rbf_auto_gamma(fm.rows);
            kernel = rbf_kernel(fm.rows, gamma_value);
        } else {
            if (!fs::is_directory(o.dataset))
                throw UsageError("dataset directory not found: " + o.dataset);
            for (const fs::path& file : tudataset_files(o.dataset)) man.add_input(file);
            Dataset ds = load_tudataset(o.dataset);
            ds = preprocess(ds, o.min_vertices, o.max_vertices);
            for (const Graph& g : ds.graphs) labels.push_back(g.label);
            stage = "kernel";
            kernel = shortest_path_kernel(ds);
        }

        stage = "cross-validate";
        const CvReport report = double_cv(kernel, labels, c_grid, o.repeats, o.folds, o.seed);

        stage = "write-report";
        ordered_json doc;
        doc["kernel"] = o.kernel;
        if (o.kernel == "rbf") {
            doc["features"] = o.features;
            doc["gamma_mode"] = gamma_auto ? "auto" : "fixed";
            doc["gamma"] = gamma_value;
        } else {
            doc["dataset"] = o.dataset;
        }
        doc["c_grid"] = c_grid;
        doc["repeats"] = report.repeats;
        doc["folds"] = report.folds;
        doc["seed"] = report.seed;
        doc["stratified"] = report.stratified;
        doc["convergence_failures"] = report.convergence_failures;
        doc["repeat_accuracies"] = report.repeat_accuracies;
        doc["chosen_c"] = report.chosen_c;
        doc["mean"] = report.mean;
        doc["std"] = report.stddev;
        const fs::path json_path = fs::path(o.out) / "report.json";
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path.string());
        out << doc.dump(2) << '\n';
        man.add_output(json_path);
        man.write();

        std::cout << "repeat  accuracy (%)\n";
        for (std::size_t r = 0; r < report.repeat_accuracies.size(); ++r)
            std::cout << std::setw(6) << r + 1 << "  " << std::setw(12) << std::fixed
                      << std::setprecision(2) << report.repeat_accuracies[r] << '\n';
        std::cout.unsetf(std::ios::fixed);
        std::cout << "mean " << fmt(report.mean, "%.2f") << ", std " << fmt(report.stddev, "%.2f")
                  << " over " << report.repeats << " repeats ("
                  << (report.stratified ? "stratified" : "unstratified") << " folds, "
                  << report.convergence_failures << " convergence failures)\n"
                  << "wrote " << json_path.generic_string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        man.fail(stage, e.what());
        man.write();
        throw;
    }
}

// ---------------------------------------------------------------------------
// pca: principal components of a feature CSV, weights CSV (components x
// features) + explained variance.

struct PcaOpts {
    std::string features;
    int components = 2;
    std::string out;
};

int run_pca(const PcaOpts& o) {
    if (o.components < 1) throw UsageError("component count must be positive");

    fs::create_directories(o.out);
    Manifest man("pca", o.out);
    auto& config = man.config();
    config["features"] = o.features;
    config["components"] = o.components;

    std::string stage = "load";
    try {
        man.add_input(o.features);
        const FeatureMatrix fm = read_feature_csv(o.features);

        stage = "pca";
        const PcaResult res = pca(fm, static_cast<std::size_t>(o.components));

        stage = "write-weights";
        const fs::path csv = fs::path(o.out) / "pca_weights.csv";
        std::ofstream out(csv);
        if (!out) throw std::runtime_error("cannot write " + csv.string());
        out << "component,explained_variance";
        for (const std::string& name : fm.names) out << ',' << name;
        out << '\n';
        for (std::size_t k = 0; k < res.components.rows(); ++k) {
            out << k + 1 << ',' << fmt(res.explained_variance[k], "%.17g");
            for (std::size_t j = 0; j < res.components.cols(); ++j)
                out << ',' << fmt(res.components(k, j), "%.17g");
            out << '\n';
        }
        out.close();
        man.add_output(csv);
        man.doc()["degenerate"] = res.degenerate;
        man.write();

        // Dominant first-component weights, largest magnitude first.
        std::vector<std::size_t> order(fm.dimension());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(res.components(0, a)) > std::abs(res.components(0, b));
        });
        std::cout << "first component, top weights:\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(5, order.size()); ++i)
            std::cout << "  " << fm.names[order[i]] << "  "
                      << fmt(res.components(0, order[i]), "%.6g") << '\n';
        if (res.degenerate) std::cout << "warning: zero-variance input, components arbitrary\n";
        std::cout << "wrote " << csv.generic_string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        man.fail(stage, e.what());
        man.write();
        throw;
    }
}

// ---------------------------------------------------------------------------
// samplesize: additive-error sample count, single value or grid table.

struct SampleSizeOpts {
    std::string omega;
    std::string epsilon;
    std::string delta;
};

int run_samplesize(const SampleSizeOpts& o) {
    std::vector<long long> omegas;
    std::vector<double> epsilons, deltas;
    for (const std::string& token : split_commas(o.omega)) omegas.push_back(parse_integer(token));
    for (const std::string& token : split_commas(o.epsilon)) epsilons.push_back(parse_double(token));
    for (const std::string& token : split_commas(o.delta)) deltas.push_back(parse_double(token));

    try {
        if (omegas.size() == 1 && epsilons.size() == 1 && deltas.size() == 1) {
            std::cout << sample_size(omegas[0], epsilons[0], deltas[0]) << '\n';
            return 0;
        }
        std::cout << std::setw(8) << "omega" << std::setw(10) << "epsilon" << std::setw(10)
                  << "delta" << std::setw(12) << "samples" << '\n';
        for (long long omega : omegas)
            for (double epsilon : epsilons)
                for (double delta : deltas)
                    std::cout << std::setw(8) << omega << std::setw(10) << fmt(epsilon, "%g")
                              << std::setw(10) << fmt(delta, "%g") << std::setw(12)
                              << sample_size(omega, epsilon, delta) << '\n';
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: self-contained identity and counting checks, [PASS]/[FAIL] lines.

int run_verify() {
    int failures = 0;
    const auto check = [&failures](const std::string& name, bool ok,
                                   const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << '\n';
        if (!ok) ++failures;
    };

    {
        const GrowthCheckReport rep = verify_composition_growth(4, 64);
        check("weak compositions outgrow n^n for 4 <= M <= 64", rep.ok(),
              rep.ok() ? "" : std::to_string(rep.violations.size()) + " violations");
    }
    for (unsigned k : {2u, 3u, 4u}) {
        const BinomialRatioReport rep = verify_binomial_ratio(k, 10000);
        check("C(n," + std::to_string(k) + ")/n^" + std::to_string(k) +
                  " within 1% of 1/k! at n = 10^4 and monotone",
              rep.ok(), "ratio " + fmt(rep.ratio_at_top) + " vs " + fmt(rep.target));
    }
    check("binary event count for 25 modes equals 2^25",
          count_binary_events(25) == BigInt(1) << 25);
    check("integer partitions of 9 number 30", count_partitions_exact(9, 9) == 30);
    {
        const BigInt exact = count_partitions_with_parts(80, 40);
        check("partitions of 80 into 40 parts number 37338", exact == 37338);
        const double approx = partitions_asymptotic(80, 40);
        const double ratio = approx / 37338.0;
        check("asymptotic partition estimate within 25% at n = 80, m = 40",
              ratio > 0.75 && ratio < 1.25, "ratio " + fmt(ratio));
    }

    // Single-edge graph: every constant below has a closed form.
    Matrix edge(2, 2);
    edge(0, 1) = edge(1, 0) = 1.0;
    const GaussianEncoding enc = encode(edge, 5.0);
    check("single-edge rescaling constant c^2 = 5/7", std::abs(enc.c * enc.c - 5.0 / 7.0) < 1e-9,
          "c^2 = " + fmt(enc.c * enc.c));
    {
        const std::vector<double> dist = exact_binary_distribution(enc);
        const double expected[] = {2.0 / 7.0, 0.0, 0.0, 5.0 / 7.0};
        double err = 0.0;
        for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(dist[i] - expected[i]));
        check("single-edge click distribution is (2/7, 0, 0, 5/7)", err < 1e-9,
              "max error " + fmt(err));
    }
    {
        double err = 0.0;
        for (int k = 0; k <= 10; ++k) {
            PnrEvent n;
            n.counts = {k, k};
            const double expected = (2.0 / 7.0) * std::pow(5.0 / 7.0, k);
            err = std::max(err, std::abs(pnr_probability(enc, n) - expected));
        }
        check("single-edge photon numbers follow (2/7)(5/7)^k", err < 1e-9,
              "max error " + fmt(err));
    }
    {
        PnrEvent odd;
        odd.counts = {2, 1};
        check("odd photon totals carry zero probability", pnr_probability(enc, odd) == 0.0);
    }
    {
        const BinaryEvent full = BinaryEvent::from_string("11");
        bool monotone = true, nonnegative = true;
        double prev = 2.0;
        IdentityCheck chk;
        for (int cutoff : {4, 8, 12, 16, 20}) {
            chk = verify_binary_pnr_identity(enc, full, cutoff);
            nonnegative = nonnegative && chk.gap >= -1e-9;
            monotone = monotone && chk.gap <= prev + 1e-12;
            prev = chk.gap;
        }
        const double analytic = std::pow(5.0 / 7.0, 11);  // geometric tail past 10 pairs
        check("click probability bounds its photon-number partial sums", nonnegative && monotone);
        check("partial-sum gap at cutoff 20 matches the geometric tail",
              std::abs(chk.gap - analytic) < 1e-9 * analytic,
              "gap " + fmt(chk.gap) + " vs " + fmt(analytic));
    }

    check("sample_size(32, 0.06, 0.01) = 14881", sample_size(32, 0.06, 0.01) == 14881);
    check("sample_size(7, 0.06, 0.01) = 5254", sample_size(7, 0.06, 0.01) == 5254);

    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Binary Gaussian boson sampling pipeline: encode graphs as Gaussian states, "
        "compute or sample click statistics, build feature vectors, classify."};
    app.set_version_flag("--version", "gbsbin 0.1.0");
    app.require_subcommand(1);
    // One INI file can hold the whole experiment, one [section] per
    // subcommand; command-line flags always win over file values.
    app.set_config("--config", "", "INI file with one [section] per subcommand; flags win");

    ProbsOpts probs;
    CLI::App* probs_cmd =
        app.add_subcommand("probs", "Probability of one binary click pattern on a graph");
    probs_cmd->fallthrough();
    probs_cmd->add_option("graph", probs.graph, "Edge-list graph file")->required();
    probs_cmd->add_option("pattern", probs.pattern, "Click pattern, e.g. 0110 (leftmost = mode 1)")
        ->required();
    probs_cmd->add_option("--nbar", probs.nbar, "Target mean photon number")
        ->capture_default_str();
    probs_cmd->add_option("--pnr", probs.pnr_cutoff,
                          "Also print the photon-number partial sum up to this total");
    probs_cmd->add_option("--dump-encoding", probs.dump_encoding,
                          "Write the Gaussian encoding as JSON to this file");
    probs_cmd->add_option("--sample-count", probs.sample_count,
                          "Draw this many detector samples from the encoding");
    probs_cmd->add_option("--seed", probs.seed, "Sampler seed")->capture_default_str();
    probs_cmd->add_option("--samples-out", probs.samples_out,
                          "Write samples here (default: stdout), one 0/1 line per event");

    FeaturesOpts features;
    CLI::App* features_cmd =
        app.add_subcommand("features", "Featurize a TUDataset directory into a CSV");
    features_cmd->fallthrough();
    features_cmd->add_option("--dataset", features.dataset, "TUDataset directory")->required();
    features_cmd->add_option("--out", features.out, "Output directory")->required();
    features_cmd->add_option("--scheme", features.scheme, "Feature scheme: mu, nu, or nu_plus")
        ->capture_default_str();
    features_cmd->add_option("--mode", features.mode, "exact or sampled")->capture_default_str();
    features_cmd->add_option("--nbar", features.nbar, "Target mean photon number per graph")
        ->capture_default_str();
    features_cmd->add_option("--max-clicks", features.max_clicks, "Click cap N for mu features")
        ->capture_default_str();
    features_cmd->add_option("--samples", features.samples,
                             "Samples per graph (0 = derive from the scheme's outcome count)")
        ->capture_default_str();
    features_cmd->add_option("--seed", features.seed, "Global sampling seed")
        ->capture_default_str();
    features_cmd->add_option("--workers", features.workers, "Worker threads for featurization")
        ->envname("GBSBIN_WORKERS")
        ->capture_default_str();
    features_cmd->add_option("--min-vertices", features.min_vertices, "Keep graphs with at least this many vertices")
        ->capture_default_str();
    features_cmd->add_option("--max-vertices", features.max_vertices, "Keep graphs with at most this many vertices")
        ->capture_default_str();
    features_cmd->add_option("--dump-dataset", features.dump_dataset,
                             "Write the preprocessed dataset as JSON to this file");

    ClassifyOpts classify;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Repeated double cross-validation of a kernel SVM over features");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--features", classify.features, "Feature CSV (rbf kernel input)");
    classify_cmd->add_option("--kernel", classify.kernel, "rbf or sp (shortest-path baseline)")
        ->capture_default_str();
    classify_cmd->add_option("--dataset", classify.dataset, "TUDataset directory (sp kernel input)");
    classify_cmd->add_option("--out", classify.out, "Output directory")->required();
    classify_cmd->add_option("--gamma", classify.gamma, "RBF bandwidth, or 'auto'")
        ->capture_default_str();
    classify_cmd->add_option("--c-grid", classify.c_grid,
                             "Comma-separated SVM C grid (default 1e-4..1e3 by decades)");
    classify_cmd->add_option("--repeats", classify.repeats, "Cross-validation repeats")
        ->capture_default_str();
    classify_cmd->add_option("--folds", classify.folds, "Folds per repeat")->capture_default_str();
    classify_cmd->add_option("--seed", classify.seed, "Fold-assignment seed")
        ->capture_default_str();
    classify_cmd->add_option("--min-vertices", classify.min_vertices,
                             "Preprocessing lower vertex bound (sp kernel)")
        ->capture_default_str();
    classify_cmd->add_option("--max-vertices", classify.max_vertices,
                             "Preprocessing upper vertex bound (sp kernel)")
        ->capture_default_str();

    PcaOpts pca_opts;
    CLI::App* pca_cmd =
        app.add_subcommand("pca", "Principal components of a feature CSV (components x features)");
    pca_cmd->fallthrough();
    pca_cmd->add_option("--features", pca_opts.features, "Feature CSV")->required();
    pca_cmd->add_option("-k,--components", pca_opts.components, "Number of components")
        ->capture_default_str();
    pca_cmd->add_option("--out", pca_opts.out, "Output directory")->required();

    SampleSizeOpts samplesize;
    CLI::App* samplesize_cmd = app.add_subcommand(
        "samplesize", "Samples needed for additive error epsilon with confidence 1 - delta");
    samplesize_cmd->fallthrough();
    samplesize_cmd->add_option("omega", samplesize.omega, "Outcome count |Omega| (comma list ok)")
        ->required();
    samplesize_cmd->add_option("epsilon", samplesize.epsilon, "L1 error bound (comma list ok)")
        ->required();
    samplesize_cmd->add_option("delta", samplesize.delta, "Failure probability (comma list ok)")
        ->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the built-in identity and counting checks");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(probs_cmd)) return run_probs(probs);
        if (app.got_subcommand(features_cmd)) return run_features(features);
        if (app.got_subcommand(classify_cmd)) return run_classify(classify);
        if (app.got_subcommand(pca_cmd)) return run_pca(pca_opts);
        if (app.got_subcommand(samplesize_cmd)) return run_samplesize(samplesize);
        if (app.got_subcommand(verify_cmd)) return run_verify();
    } catch (const UsageError& e) {
        std::cerr << "gbsbin: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gbsbin: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
