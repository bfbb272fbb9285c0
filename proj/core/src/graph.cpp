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

#include "qclique/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qclique/errors.hpp"

namespace qclique {

Graph::Graph(std::size_t n_nodes)
    : n_nodes_(n_nodes), adjacency_(n_nodes, 0U) {
    if (n_nodes < 1 || n_nodes > kMaxNodes) {
        throw ConfigurationError("graph needs 1.." + std::to_string(kMaxNodes) +
                                 " nodes, got " + std::to_string(n_nodes));
    }
}

Graph::Graph(std::size_t n_nodes, std::span<const Edge> edges)
    : Graph(n_nodes) {
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i >= n_nodes || j >= n_nodes) {
            throw ConfigurationError("edge (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") out of range");
        }
        if (i == j) {
            throw ConfigurationError("self loop on node " + std::to_string(i));
        }
        if (has_edge(i, j)) {
            throw ConfigurationError("duplicate edge (" + std::to_string(i) +
                                     ", " + std::to_string(j) + ")");
        }
        adjacency_[i] |= 1U << j;
        adjacency_[j] |= 1U << i;
        edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(std::size_t i, std::size_t j) const noexcept {
    return i < n_nodes_ && j < n_nodes_ && ((adjacency_[i] >> j) & 1U) != 0;
}

bool Graph::is_clique(std::span<const std::size_t> nodes) const {
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (!has_edge(nodes[a], nodes[b])) {
                return false;
            }
        }
    }
    return true;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_nodes_) {
        throw UsageError("permutation length does not match node count");
    }
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [i, j] : edges_) {
        mapped.emplace_back(perm[i], perm[j]);
    }
    return {n_nodes_, mapped};
}

LabelVector::LabelVector(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_) {
        if (v != 1 && v != -1) {
            throw ConfigurationError("label entries must be -1 or +1, got " +
                                     std::to_string(v));
        }
    }
}

LabelVector LabelVector::blank(std::size_t n_nodes) {
    return LabelVector(std::vector<int>(n_nodes, -1));
}

LabelVector LabelVector::from_clique(std::size_t n_nodes,
                                     std::span<const std::size_t> clique) {
    std::vector<int> values(n_nodes, -1);
    for (auto node : clique) {
        values.at(node) = 1;
    }
    return LabelVector(std::move(values));
}

bool LabelVector::has_clique() const noexcept {
    return std::find(values_.begin(), values_.end(), 1) != values_.end();
}

NodeSet LabelVector::positives() const {
    NodeSet out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 1) {
            out.push_back(i);
        }
    }
    return out;
}

LabelVector LabelVector::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != values_.size()) {
        throw UsageError("permutation length does not match label length");
    }
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out[perm[i]] = values_[i];
    }
    return LabelVector(std::move(out));
}

Graph gen_er_graph(std::size_t n_nodes, double edge_prob, Rng &rng) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw ConfigurationError("edge probability must lie in [0, 1], got " +
                                 std::to_string(edge_prob));
    }
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n_nodes; ++i) {
        for (std::size_t j = i + 1; j < n_nodes; ++j) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return {n_nodes, edges};
}

namespace {

// Extends `chosen` by nodes >= next that are adjacent to all of `chosen`
// (their common neighbourhood is `candidates`), in increasing order.
void extend_cliques(const Graph &graph, std::size_t k, std::size_t next,
                    std::uint32_t candidates, NodeSet &chosen,
                    std::vector<NodeSet> &out) {
    if (chosen.size() == k) {
        out.push_back(chosen);
        return;
    }
    const std::size_t n = graph.n_nodes();
    for (std::size_t v = next; v + (k - chosen.size()) <= n; ++v) {
        if (((candidates >> v) & 1U) == 0) {
            continue;
        }
        chosen.push_back(v);
        extend_cliques(graph, k, v + 1, candidates & graph.neighbours(v),
                       chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<NodeSet> find_k_cliques(const Graph &graph, std::size_t k) {
    if (k < 1 || k > graph.n_nodes()) {
        throw ConfigurationError("clique size must lie in 1.." +
                                 std::to_string(graph.n_nodes()));
    }
    std::vector<NodeSet> out;
    NodeSet chosen;
    chosen.reserve(k);
    const std::uint32_t all =
        graph.n_nodes() == 32 ? ~0U : ((1U << graph.n_nodes()) - 1U);
    extend_cliques(graph, k, 0, all, chosen, out);
    return out;
}

LabelVector make_label(const Graph &graph, std::size_t k, Rng &rng) {
    const auto cliques = find_k_cliques(graph, k);
    if (cliques.empty()) {
        return LabelVector::blank(graph.n_nodes());
    }
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    return LabelVector::from_clique(graph.n_nodes(), cliques[pick(rng)]);
}

bool label_is_valid(const Graph &graph, const LabelVector &label,
                    std::size_t k) {
    if (label.size() != graph.n_nodes()) {
        return false;
    }
    if (!label.has_clique()) {
        return find_k_cliques(graph, k).empty();
    }
    const auto nodes = label.positives();
    return nodes.size() == k && graph.is_clique(nodes);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng &rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace qclique
