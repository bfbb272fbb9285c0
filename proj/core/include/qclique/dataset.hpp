// Copyright 2026 The qclique Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Balanced clique datasets and their line-delimited JSON file format.
 *
 * File layout, one JSON object per line:
 *
 *     {"format":"qclique-dataset","version":1,"n_nodes":6,"k":4,"seed":1,
 *      "size":3000,"edge_prob_range":[0.3,0.9]}
 *     {"n_nodes":6,"edges":[[0,1],[0,3]],"label":[1,-1,...],"edge_prob":0.41}
 *     ...
 *
 * The first line is the header, every following line one item. Edge pairs
 * are (low, high) and sorted. Doubles are written in shortest round-trip
 * form, so write followed by read reproduces the dataset exactly.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qclique/graph.hpp"

namespace qclique {

struct EdgeProbRange {
    double low = 0.3;
    double high = 0.9;

    friend bool operator==(const EdgeProbRange &,
                           const EdgeProbRange &) = default;
};

struct DatasetItem {
    Graph graph;
    LabelVector label;
    double edge_prob = 0.0;

    friend bool operator==(const DatasetItem &, const DatasetItem &) = default;
};

struct Dataset {
    std::size_t n_nodes = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    EdgeProbRange edge_prob_range;
    std::vector<DatasetItem> items;

    [[nodiscard]] std::size_t clique_count() const;
    [[nodiscard]] std::size_t blank_count() const {
        return items.size() - clique_count();
    }

    friend bool operator==(const Dataset &, const Dataset &) = default;
};

/**
 * Draws labelled graphs one at a time. Each draw samples an edge probability
 * uniformly from the range, an Erdos-Renyi graph at that probability and its
 * clique label.
 */
class ItemSampler {
  public:
    ItemSampler(std::size_t n_nodes, std::size_t k, EdgeProbRange range,
                std::uint64_t seed);

    DatasetItem draw();

    /// Rejection-samples until `clique_items` clique-bearing and
    /// `blank_items` blank items are collected, in draw order. Throws
    /// GenerationError after (clique_items + blank_items) * 1000 draws.
    std::vector<DatasetItem> draw_balanced(std::size_t clique_items,
                                           std::size_t blank_items);

  private:
    std::size_t n_nodes_;
    std::size_t k_;
    EdgeProbRange range_;
    Rng rng_;
};

/// `size - size / 2` clique-bearing items and `size / 2` blank ones.
Dataset build_dataset(std::size_t n_nodes, std::size_t k, std::size_t size,
                      EdgeProbRange range, std::uint64_t seed);

void write_dataset(std::ostream &out, const Dataset &dataset);
Dataset read_dataset(std::istream &in);

void save_dataset(const std::filesystem::path &path, const Dataset &dataset);
Dataset load_dataset(const std::filesystem::path &path);

} // namespace qclique
