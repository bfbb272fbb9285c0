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
 * Undirected simple graphs, exact k-clique enumeration and clique labels.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace qclique {

using Rng = std::mt19937_64;
using Edge = std::pair<std::size_t, std::size_t>;
using NodeSet = std::vector<std::size_t>;

/// Graphs are capped at 32 nodes so adjacency rows fit a 32-bit mask.
inline constexpr std::size_t kMaxNodes = 32;

class Graph {
  public:
    /// Edgeless graph. Throws ConfigurationError unless 1 <= n <= 32.
    explicit Graph(std::size_t n_nodes);

    /// Edges are stored as (min, max) pairs in lexicographic order. Self
    /// loops, duplicates and out-of-range nodes throw ConfigurationError.
    Graph(std::size_t n_nodes, std::span<const Edge> edges);

    [[nodiscard]] std::size_t n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] std::size_t n_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const noexcept;
    [[nodiscard]] std::uint32_t neighbours(std::size_t i) const noexcept {
        return adjacency_[i];
    }
    [[nodiscard]] bool is_clique(std::span<const std::size_t> nodes) const;

    /// Relabels node i as perm[i].
    [[nodiscard]] Graph permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_nodes_ == b.n_nodes_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t n_nodes_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> adjacency_;
};

/// Per-node targets in {-1, +1}; +1 marks membership in the labelled clique.
class LabelVector {
  public:
    LabelVector() = default;
    /// Throws ConfigurationError if any entry is not -1 or +1.
    explicit LabelVector(std::vector<int> values);

    static LabelVector blank(std::size_t n_nodes);
    static LabelVector from_clique(std::size_t n_nodes,
                                   std::span<const std::size_t> clique);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] const std::vector<int> &values() const noexcept {
        return values_;
    }
    [[nodiscard]] bool has_clique() const noexcept;
    [[nodiscard]] NodeSet positives() const;
    [[nodiscard]] LabelVector permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const LabelVector &, const LabelVector &) = default;

  private:
    std::vector<int> values_;
};

/// Every possible edge included independently with probability edge_prob.
Graph gen_er_graph(std::size_t n_nodes, double edge_prob, Rng &rng);

/// All k-subsets whose induced subgraph is complete, in lexicographic order.
std::vector<NodeSet> find_k_cliques(const Graph &graph, std::size_t k);

/**
 * Marks one k-clique, drawn uniformly from find_k_cliques, with +1 and the
 * remaining nodes with -1. Graphs without a k-clique get the all -1 label.
 */
LabelVector make_label(const Graph &graph, std::size_t k, Rng &rng);

/// True when label is all -1 and graph has no k-clique, or label marks
/// exactly k nodes that form a clique.
bool label_is_valid(const Graph &graph, const LabelVector &label,
                    std::size_t k);

/// Uniformly random permutation of 0..n-1.
std::vector<std::size_t> random_permutation(std::size_t n, Rng &rng);

} // namespace qclique
