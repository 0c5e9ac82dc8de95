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

#include "gbsbin/graphio.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gbsbin/rng.hpp"

namespace gbsbin {

namespace fs = std::filesystem;

std::size_t Graph::edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < adjacency.rows(); ++i)
        for (std::size_t j = i + 1; j < adjacency.cols(); ++j)
            if (adjacency(i, j) != 0.0) ++e;
    return e;
}

double Dataset::average_vertices() const {
    if (graphs.empty()) return 0.0;
    double s = 0.0;
    for (const Graph& g : graphs) s += static_cast<double>(g.vertices());
    return s / static_cast<double>(graphs.size());
}

namespace {

std::vector<long long> read_integer_lines(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::vector<long long> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Strip whitespace; blank trailing lines are tolerated.
        std::string t;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                     ": expected an integer, got '" + line + "'");
        }
        if (pos != t.size())
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                     ": trailing characters in '" + line + "'");
        out.push_back(v);
    }
    return out;
}

std::pair<long long, long long> parse_edge_line(const std::string& line, const fs::path& file,
                                                std::size_t lineno) {
    std::string t = line;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream ss(t);
    long long a, b;
    if (!(ss >> a >> b))
        throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                 ": expected an edge pair, got '" + line + "'");
    std::string rest;
    if (ss >> rest)
        throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                 ": trailing characters in '" + line + "'");
    return {a, b};
}

}  // namespace

Dataset load_tudataset(const fs::path& dir) {
    if (!fs::is_directory(dir))
        throw std::runtime_error("dataset directory not found: " + dir.string());

    // The file prefix is discovered from the one *_A.txt in the directory.
    std::string prefix;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        const std::string tail = "_A.txt";
        if (name.size() > tail.size() &&
            name.compare(name.size() - tail.size(), tail.size(), tail) == 0) {
            prefix = name.substr(0, name.size() - tail.size());
            break;
        }
    }
    if (prefix.empty())
        throw std::runtime_error("no *_A.txt edge file in " + dir.string());

    const fs::path edges_file = dir / (prefix + "_A.txt");
    const fs::path indicator_file = dir / (prefix + "_graph_indicator.txt");
    const fs::path labels_file = dir / (prefix + "_graph_labels.txt");

    const std::vector<long long> indicator = read_integer_lines(indicator_file);
    const std::vector<long long> raw_labels = read_integer_lines(labels_file);
    if (indicator.empty()) throw std::runtime_error("empty graph indicator file");

    const long long num_graphs = *std::max_element(indicator.begin(), indicator.end());
    if (num_graphs < 1 || static_cast<std::size_t>(num_graphs) != raw_labels.size())
        throw std::runtime_error("graph indicator and label files disagree on graph count");

    // Node -> (graph, local index), both derived from the indicator order.
    std::vector<std::size_t> node_graph(indicator.size()), node_local(indicator.size());
    std::vector<std::size_t> graph_size(static_cast<std::size_t>(num_graphs), 0);
    for (std::size_t node = 0; node < indicator.size(); ++node) {
        const long long g = indicator[node];
        if (g < 1 || g > num_graphs)
            throw std::runtime_error("graph indicator id out of range at node " +
                                     std::to_string(node + 1));
        node_graph[node] = static_cast<std::size_t>(g - 1);
        node_local[node] = graph_size[node_graph[node]]++;
    }

    Dataset ds;
    ds.name = prefix;
    ds.graphs.reserve(static_cast<std::size_t>(num_graphs));
    for (std::size_t g = 0; g < static_cast<std::size_t>(num_graphs); ++g) {
        Graph graph;
        if (graph_size[g] == 0)
            throw std::runtime_error("graph " + std::to_string(g + 1) + " has no nodes");
        graph.adjacency = Matrix(graph_size[g], graph_size[g]);
        graph.id = static_cast<int>(g);
        ds.graphs.push_back(std::move(graph));
    }

    std::ifstream in(edges_file);
    if (!in) throw std::runtime_error("cannot open " + edges_file.string());
    std::string line;
    std::size_t lineno = 0, self_loops = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        const auto [a, b] = parse_edge_line(line, edges_file, lineno);
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > indicator.size() ||
            static_cast<std::size_t>(b) > indicator.size())
            throw std::runtime_error(edges_file.string() + ":" + std::to_string(lineno) +
                                     ": edge references unknown node");
        const std::size_t u = static_cast<std::size_t>(a - 1);
        const std::size_t v = static_cast<std::size_t>(b - 1);
        if (node_graph[u] != node_graph[v])
            throw std::runtime_error(edges_file.string() + ":" + std::to_string(lineno) +
                                     ": edge joins nodes of different graphs");
        if (u == v) {
            ++self_loops;  // dropped: graphs here carry no self-loops
            continue;
        }
        Matrix& adj = ds.graphs[node_graph[u]].adjacency;
        adj(node_local[u], node_local[v]) = 1.0;
        adj(node_local[v], node_local[u]) = 1.0;  // symmetrize; duplicates collapse
    }
    if (self_loops > 0)
        std::cerr << "load_tudataset: dropped " << self_loops << " self-loop entries\n";

    // Remap labels to contiguous 0-based ids in first-seen order.
    std::map<long long, int> remap;
    for (std::size_t g = 0; g < raw_labels.size(); ++g) {
        auto it = remap.find(raw_labels[g]);
        if (it == remap.end()) {
            it = remap.emplace(raw_labels[g], static_cast<int>(ds.original_labels.size())).first;
            ds.original_labels.push_back(raw_labels[g]);
        }
        ds.graphs[g].label = it->second;
    }
    ds.num_classes = static_cast<int>(ds.original_labels.size());
    return ds;
}

Dataset preprocess(const Dataset& ds, std::size_t min_vertices, std::size_t max_vertices,
                   bool binarize) {
    Dataset out;
    out.name = ds.name;
    out.num_classes = ds.num_classes;
    out.original_labels = ds.original_labels;
    for (const Graph& g : ds.graphs) {
        if (g.vertices() < min_vertices || g.vertices() > max_vertices) continue;
        Graph copy = g;
        if (binarize) {
            for (std::size_t i = 0; i < copy.adjacency.rows(); ++i)
                for (std::size_t j = 0; j < copy.adjacency.cols(); ++j)
                    copy.adjacency(i, j) = copy.adjacency(i, j) != 0.0 ? 1.0 : 0.0;
        }
        out.graphs.push_back(std::move(copy));
    }
    if (out.graphs.empty())
        throw std::runtime_error("preprocess: no graph within [" + std::to_string(min_vertices) +
                                 ", " + std::to_string(max_vertices) + "] vertices");
    return out;
}

Graph erdos_renyi(std::size_t m, double p, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("erdos_renyi: need at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p outside [0, 1]");
    Graph g;
    g.adjacency = Matrix(m, m);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (rng.next_double() < p) {
                g.adjacency(i, j) = 1.0;
                g.adjacency(j, i) = 1.0;
            }
    return g;
}

Graph load_edge_list(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string line;
    std::size_t lineno = 0;
    long long m = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = line;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream ss(t);
        std::string first;
        if (!(ss >> first)) continue;
        if (first[0] == '#') continue;
        if (m < 0) {
            try {
                m = std::stoll(first);
            } catch (const std::exception&) {
                m = 0;
            }
            if (m < 1)
                throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                         ": expected the vertex count");
            g.adjacency = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            continue;
        }
        long long a = 0, b = 0;
        double w = 1.0;
        try {
            a = std::stoll(first);
        } catch (const std::exception&) {
            a = 0;
        }
        if (!(ss >> b)) b = 0;
        ss >> w;
        if (a < 1 || b < 1 || a > m || b > m)
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                     ": edge endpoint out of range");
        if (a == b)
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                     ": self-loops are not allowed");
        g.adjacency(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = w;
        g.adjacency(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = w;
    }
    if (m < 1) throw std::runtime_error(file.string() + ": empty graph file");
    return g;
}

}  // namespace gbsbin
