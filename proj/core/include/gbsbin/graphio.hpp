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

#ifndef GBSBIN_GRAPHIO_HPP
#define GBSBIN_GRAPHIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gbsbin/matrix.hpp"

namespace gbsbin {

/// Undirected graph as a symmetric weighted adjacency matrix with a class
/// label. Invariants: symmetry, zero diagonal (no self-loops), M >= 1.
struct Graph {
    Matrix adjacency;
    int label = 0;
    int id = 0;  ///< position in the dataset as loaded; stable across filtering

    std::size_t vertices() const { return adjacency.rows(); }
    std::size_t edge_count() const;
};

struct Dataset {
    std::vector<Graph> graphs;
    std::string name;
    int num_classes = 0;
    /// Original label value for each remapped class id (first-seen order).
    std::vector<long long> original_labels;

    std::size_t size() const { return graphs.size(); }
    double average_vertices() const;
};

/**
 * @brief Loads a dataset in the TUDataset plain-text layout.
 *
 * The directory must contain `<name>_A.txt` (1-indexed "i, j" edge pairs),
 * `<name>_graph_indicator.txt` (graph id per node) and
 * `<name>_graph_labels.txt` (label per graph); `<name>` is discovered from
 * the `_A.txt` file. Edges are symmetrized, duplicate edges collapse, and
 * self-loop entries are dropped with a warning. Labels are remapped to
 * contiguous 0-based ids in first-seen order.
 *
 * @throws std::runtime_error on missing files or malformed content
 */
Dataset load_tudataset(const std::filesystem::path& dir);

/**
 * @brief Drops graphs outside [min_vertices, max_vertices] and optionally
 * binarizes edge weights (any nonzero weight becomes 1). Order and graph
 * ids are preserved.
 *
 * @throws std::runtime_error when no graph survives the filter
 */
Dataset preprocess(const Dataset& ds, std::size_t min_vertices = 6,
                   std::size_t max_vertices = 25, bool binarize = true);

/// Erdos-Renyi G(M, p) graph, deterministic per seed.
/// @throws std::invalid_argument for p outside [0, 1] or M < 1
Graph erdos_renyi(std::size_t m, double p, std::uint64_t seed);

/**
 * @brief Loads a single graph from a plain edge-list file: the first
 * non-comment line is the vertex count, each following line one edge
 * "i j [weight]" with 1-based endpoints. Lines starting with '#' are
 * ignored.
 */
Graph load_edge_list(const std::filesystem::path& file);

}  // namespace gbsbin

#endif
