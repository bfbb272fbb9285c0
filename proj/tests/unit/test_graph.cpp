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

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "oracles.hpp"
#include "qclique/errors.hpp"
#include "qclique/graph.hpp"

using namespace qclique;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return {n, edges};
}

Graph path4() { return {4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}}; }

} // namespace

TEST_CASE("graph invariants", "[graph]") {
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), ConfigurationError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), ConfigurationError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), ConfigurationError);
    CHECK_THROWS_AS(Graph(0), ConfigurationError);
    const Graph g(4, std::vector<Edge>{{3, 1}, {0, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("gen_er_graph", "[graph]") {
    Rng rng(1);
    CHECK(gen_er_graph(6, 0.0, rng).n_edges() == 0);
    CHECK(gen_er_graph(6, 1.0, rng).n_edges() == 15);
    CHECK_THROWS_AS(gen_er_graph(6, 1.5, rng), ConfigurationError);
    CHECK_THROWS_AS(gen_er_graph(6, -0.1, rng), ConfigurationError);

    SECTION("mean edge count is binomial") {
        double total = 0.0;
        const int samples = 10000;
        for (int i = 0; i < samples; ++i) {
            total += static_cast<double>(gen_er_graph(6, 0.5, rng).n_edges());
        }
        CHECK(std::abs(total / samples - 7.5) < 0.2);
    }
}

TEST_CASE("find_k_cliques", "[graph]") {
    CHECK(find_k_cliques(complete(4), 4) == std::vector<NodeSet>{{0, 1, 2, 3}});
    CHECK(find_k_cliques(path4(), 3).empty());

    SECTION("six-node example against brute force") {
        const Graph g(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3},
                                           {2, 3}, {0, 3}, {4, 5}});
        const auto expected = testing::naive_k_cliques(g, 4);
        REQUIRE(expected == std::vector<NodeSet>{{0, 1, 2, 3}});
        CHECK(find_k_cliques(g, 4) == expected);
    }
    SECTION("lexicographic order") {
        const auto cliques = find_k_cliques(complete(5), 3);
        CHECK(cliques.size() == 10);
        CHECK(std::is_sorted(cliques.begin(), cliques.end()));
        CHECK(cliques.front() == NodeSet{0, 1, 2});
        CHECK(cliques.back() == NodeSet{2, 3, 4});
    }
    SECTION("clique size bounds") {
        CHECK_THROWS_AS(find_k_cliques(path4(), 0), ConfigurationError);
        CHECK_THROWS_AS(find_k_cliques(path4(), 5), ConfigurationError);
        CHECK(find_k_cliques(path4(), 1).size() == 4);
    }
}

TEST_CASE("find_k_cliques equals naive enumeration", "[graph][property]") {
    Rng rng(404);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = size(rng);
        const auto g = gen_er_graph(n, prob(rng), rng);
        std::uniform_int_distribution<std::size_t> kdist(1, n);
        const std::size_t k = kdist(rng);
        CHECK(find_k_cliques(g, k) == testing::naive_k_cliques(g, k));
    }
}

TEST_CASE("make_label", "[graph]") {
    Rng rng(9);
    CHECK(make_label(complete(4), 4, rng).values() == std::vector<int>{1, 1, 1, 1});
    CHECK(make_label(path4(), 3, rng).values() == std::vector<int>(4, -1));

    SECTION("uniform over the available cliques") {
        std::vector<Edge> edges;
        for (std::size_t base : {0, 4}) {
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = i + 1; j < 4; ++j) {
                    edges.emplace_back(base + i, base + j);
                }
            }
        }
        const Graph g(8, edges);
        std::map<NodeSet, int> counts;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            Rng r(seed);
            ++counts[make_label(g, 4, r).positives()];
        }
        REQUIRE(counts.size() == 2);
        CHECK(std::abs(counts[{0, 1, 2, 3}] - 500) <= 50);
        CHECK(std::abs(counts[{4, 5, 6, 7}] - 500) <= 50);
    }
}

TEST_CASE("labels", "[graph]") {
    CHECK_THROWS_AS(LabelVector({1, 0, -1}), ConfigurationError);
    const auto label = LabelVector::from_clique(5, NodeSet{1, 3});
    CHECK(label.values() == std::vector<int>{-1, 1, -1, 1, -1});
    CHECK(label.has_clique());
    CHECK_FALSE(LabelVector::blank(3).has_clique());

    const Graph tri(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(label_is_valid(tri, LabelVector::from_clique(4, NodeSet{0, 1, 2}), 3));
    CHECK_FALSE(label_is_valid(tri, LabelVector::from_clique(4, NodeSet{0, 1, 3}), 3));
    CHECK_FALSE(label_is_valid(tri, LabelVector::blank(4), 3));
    CHECK(label_is_valid(path4(), LabelVector::blank(4), 3));
}

TEST_CASE("relabelling a graph and its label keeps the item valid", "[graph][property]") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = gen_er_graph(6, 0.7, rng);
        const auto label = make_label(g, 4, rng);
        const auto perm = random_permutation(6, rng);
        const auto pg = g.permuted(perm);
        const auto pl = label.permuted(perm);
        CHECK(pg.n_edges() == g.n_edges());
        CHECK(label_is_valid(pg, pl, 4));
        CHECK(find_k_cliques(pg, 4).size() == find_k_cliques(g, 4).size());
    }
}
