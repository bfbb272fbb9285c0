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

#include <numbers>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qclique/ansatz.hpp"
#include "qclique/bound_circuit.hpp"
#include "qclique/embedding.hpp"
#include "qclique/errors.hpp"

using namespace qclique;
using Catch::Approx;

namespace {

std::vector<std::pair<std::size_t, std::size_t>>
rzz_pairs(const CircuitTemplate &c, std::size_t cls) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::RZZ && c.class_of()[g.param_slots[0]] == cls) {
            out.emplace_back(g.qubits[0], g.qubits[1]);
        }
    }
    return out;
}

std::set<std::size_t> classes_in(const CircuitTemplate &c, std::size_t first,
                                 std::size_t last) {
    std::set<std::size_t> out;
    for (std::size_t i = first; i < last; ++i) {
        const auto &g = c.gates()[i];
        for (std::size_t k = 0; k < g.num_params(); ++k) {
            out.insert(c.class_of()[g.param_slots[k]]);
        }
    }
    return out;
}

std::vector<std::size_t> cyclic_shift(std::size_t n, std::size_t by) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = (i + by) % n;
    }
    return perm;
}

} // namespace

TEST_CASE("permutation-invariant template", "[ansatz]") {
    SECTION("120 parameters at six qubits and 40 repetitions") {
        const auto c = build_permutation_invariant(6, 40);
        CHECK(c.n_params() == 120);
        CHECK(c.gates().size() == 40 * (2 * 6 + 15));
    }
    SECTION("smallest layer") {
        const auto c = build_permutation_invariant(2, 1);
        CHECK(c.n_params() == 3);
        const std::vector<Gate> expected{Gate::rx(0, 0), Gate::rx(1, 1),
                                         Gate::ry(0, 2), Gate::ry(1, 3),
                                         Gate::rzz(0, 1, 4)};
        CHECK(std::vector<Gate>(c.gates().begin(), c.gates().end()) == expected);
        CHECK(std::vector<std::size_t>(c.class_of().begin(), c.class_of().end()) ==
              std::vector<std::size_t>{0, 0, 1, 1, 2});
    }
    SECTION("eight qubits: 44 gates per layer") {
        const auto c = build_permutation_invariant(8, 40);
        CHECK(c.n_params() == 120);
        CHECK(c.gates().size() / 40 == 2 * 8 + 8 * 7 / 2);
        CHECK(c.gates().size() / 40 == 44);
    }
    SECTION("each repetition touches exactly three classes") {
        const auto c = build_permutation_invariant(5, 4);
        const std::size_t per_layer = 2 * 5 + 10;
        for (std::size_t r = 0; r < 4; ++r) {
            CHECK(classes_in(c, r * per_layer, (r + 1) * per_layer).size() == 3);
        }
        CHECK(rzz_pairs(c, 2).size() == 10);
    }
    SECTION("too small") {
        CHECK_THROWS_AS(build_permutation_invariant(1, 1), ConfigurationError);
        CHECK_THROWS_AS(build_permutation_invariant(4, 0), ConfigurationError);
    }
}

TEST_CASE("cyclic-invariant template", "[ansatz]") {
    SECTION("120 parameters at six qubits and 30 repetitions") {
        CHECK(build_cyclic_invariant(6, 30).n_params() == 120);
    }
    SECTION("orbit pairs at six qubits") {
        const auto c = build_cyclic_invariant(6, 1);
        using P = std::vector<std::pair<std::size_t, std::size_t>>;
        CHECK(rzz_pairs(c, 2) == P{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        CHECK(rzz_pairs(c, 3) == P{{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}});
        CHECK(classes_in(c, 0, c.gates().size()).size() == 4);
    }
    SECTION("eight qubits: 32 gates per layer") {
        const auto c = build_cyclic_invariant(8, 30);
        CHECK(c.n_params() == 120);
        CHECK(c.gates().size() / 30 == 32);
    }
    SECTION("orbits degenerate below five qubits") {
        CHECK_THROWS_AS(build_cyclic_invariant(4, 1), ConfigurationError);
        CHECK_NOTHROW(build_cyclic_invariant(5, 1));
    }
}

TEST_CASE("strongly-entangling template", "[ansatz]") {
    CHECK(build_strongly_entangling(6, 3).n_params() == 108);
    CHECK(build_strongly_entangling(8, 3).n_params() == 144);
    SECTION("minimum size golden circuit") {
        const auto c = build_strongly_entangling(3, 1);
        CHECK(c.n_params() == 18);
        std::vector<Gate> expected;
        std::size_t slot = 0;
        for (std::size_t stride = 1; stride <= 2; ++stride) {
            for (std::size_t q = 0; q < 3; ++q, slot += 3) {
                expected.push_back(Gate::u3(q, slot, slot + 1, slot + 2));
            }
            for (std::size_t q = 0; q < 3; ++q) {
                expected.push_back(Gate::cnot(q, (q + stride) % 3));
            }
        }
        CHECK(std::vector<Gate>(c.gates().begin(), c.gates().end()) == expected);
        // No sharing: every slot has its own class.
        for (std::size_t s = 0; s < c.n_slots(); ++s) {
            CHECK(c.class_of()[s] == s);
        }
    }
    CHECK_THROWS_AS(build_strongly_entangling(2, 1), ConfigurationError);
}

TEST_CASE("parameter-count ledger", "[ansatz][property]") {
    for (std::size_t n = 5; n <= 10; ++n) {
        for (std::size_t reps : {1, 3, 7}) {
            CHECK(build_permutation_invariant(n, reps).n_params() == 3 * reps);
            CHECK(build_cyclic_invariant(n, reps).n_params() == 4 * reps);
            CHECK(build_strongly_entangling(n, reps).n_params() == reps * 2 * n * 3);
            CHECK(build_permutation_invariant(n, reps).gates().size() ==
                  reps * (2 * n + n * (n - 1) / 2));
            CHECK(build_cyclic_invariant(n, reps).gates().size() == reps * 4 * n);
        }
    }
}

TEST_CASE("template validation", "[ansatz]") {
    SECTION("unreferenced class") {
        CHECK_THROWS_AS(CircuitTemplate(1, {Gate::rx(0, 0)}, {0}, 2),
                        ConfigurationError);
    }
    SECTION("slot without class") {
        CHECK_THROWS_AS(CircuitTemplate(1, {Gate::rx(0, 1)}, {0}, 1),
                        ConfigurationError);
    }
    SECTION("qubit out of range") {
        CHECK_THROWS_AS(CircuitTemplate(1, {Gate::rx(1, 0)}, {0}, 1),
                        ConfigurationError);
    }
}

TEST_CASE("evaluate", "[ansatz]") {
    SECTION("zero parameters leave only the entanglers") {
        Rng rng(8);
        const auto input = embed_graph(gen_er_graph(6, 0.5, rng));
        const auto perm = build_permutation_invariant(6, 2);
        const std::vector<double> zeros(perm.n_params(), 0.0);
        CHECK(testing::max_abs_diff(evaluate(perm, zeros, input), input) < 1e-14);

        const auto se = build_strongly_entangling(6, 1);
        const std::vector<double> z2(se.n_params(), 0.0);
        auto expected = input;
        for (const auto &g : se.gates()) {
            if (g.kind == GateKind::CNOT) {
                apply_gate(expected, g, {});
            }
        }
        CHECK(testing::max_abs_diff(evaluate(se, z2, input), expected) < 1e-14);
    }
    SECTION("RX(pi) layer flips both qubits") {
        const auto c = build_permutation_invariant(2, 1);
        const std::vector<double> p{std::numbers::pi, 0.0, 0.0};
        const auto z = expectations_z(evaluate(c, p, zero_state(2)));
        CHECK(z[0] == Approx(-1.0));
        CHECK(z[1] == Approx(-1.0));
    }
    SECTION("permutation-invariant output on |0...0> is relabeling-invariant") {
        Rng rng(13);
        const auto c = build_permutation_invariant(6, 3);
        for (int trial = 0; trial < 10; ++trial) {
            const auto params = testing::random_params(c.n_params(), rng);
            const auto out = evaluate(c, params, zero_state(6));
            const auto perm = random_permutation(6, rng);
            const auto relabeled = testing::permute_qubits(out, perm);
            CHECK(testing::max_abs_diff(out, relabeled) < 1e-10);
            const auto z = expectations_z(out);
            const auto zr = expectations_z(relabeled);
            for (std::size_t i = 0; i < 6; ++i) {
                CHECK(std::abs(z[i] - zr[i]) < 1e-10);
            }
        }
    }
    SECTION("mismatched inputs") {
        const auto c = build_permutation_invariant(3, 1);
        CHECK_THROWS_AS(evaluate(c, std::vector<double>(2), zero_state(3)),
                        UsageError);
        CHECK_THROWS_AS(evaluate(c, std::vector<double>(3), zero_state(4)),
                        UsageError);
    }
}

TEST_CASE("bound circuit matches gate-by-gate evaluation", "[ansatz][property]") {
    Rng rng(4);
    for (auto kind : {AnsatzKind::PermutationInvariant, AnsatzKind::CyclicInvariant,
                      AnsatzKind::StronglyEntangling}) {
        for (std::size_t n : {5, 6, 8}) {
            const auto c = build_ansatz(kind, n, 3);
            const auto params = testing::random_params(c.n_params(), rng);
            const auto input = embed_graph(gen_er_graph(n, 0.5, rng));
            const BoundCircuit bound(c, params);
            // Rotations fuse across layers; the entangling template alternates
            // single-qubit gates with CNOTs and has nothing to merge.
            if (kind == AnsatzKind::StronglyEntangling) {
                CHECK(bound.fused_size() == c.gates().size());
            } else {
                CHECK(bound.fused_size() < c.gates().size());
            }
            CHECK(testing::max_abs_diff(bound.apply(input),
                                        evaluate(c, params, input)) < 1e-12);
        }
    }
    SECTION("hand-built template with every gate kind") {
        const CircuitTemplate c(
            3,
            {Gate::h(0), Gate::rz(1, 0), Gate::rx(1, 1), Gate::rzz(0, 2, 2),
             Gate::cz(1, 2), Gate::u3(2, 3, 4, 5), Gate::cnot(2, 0),
             Gate::ry(0, 6), Gate::rz(0, 7), Gate::rx(0, 8)},
            {0, 1, 2, 3, 4, 5, 1, 0, 2}, 6);
        const auto params = testing::random_params(6, rng);
        const auto input = testing::random_state(3, rng);
        CHECK(testing::max_abs_diff(BoundCircuit(c, params).apply(input),
                                    evaluate(c, params, input)) < 1e-12);
    }
}

TEST_CASE("permutation equivariance", "[ansatz][property]") {
    Rng rng(2024);
    const auto c = build_permutation_invariant(6, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto graph = gen_er_graph(6, 0.5, rng);
        const auto perm = random_permutation(6, rng);
        const auto params = testing::random_params(c.n_params(), rng);
        const auto z = expectations_z(evaluate(c, params, embed_graph(graph)));
        const auto zp =
            expectations_z(evaluate(c, params, embed_graph(graph.permuted(perm))));
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(std::abs(zp[perm[i]] - z[i]) < 1e-10);
        }
    }
}

TEST_CASE("cyclic equivariance holds for shifts only", "[ansatz][property]") {
    Rng rng(99);
    const auto c = build_cyclic_invariant(6, 4);
    double worst_transposition = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto graph = gen_er_graph(6, 0.5, rng);
        const auto params = testing::random_params(c.n_params(), rng);
        const auto z = expectations_z(evaluate(c, params, embed_graph(graph)));
        for (std::size_t by = 1; by < 6; ++by) {
            const auto perm = cyclic_shift(6, by);
            const auto zp = expectations_z(
                evaluate(c, params, embed_graph(graph.permuted(perm))));
            for (std::size_t i = 0; i < 6; ++i) {
                CHECK(std::abs(zp[perm[i]] - z[i]) < 1e-10);
            }
        }
        const std::vector<std::size_t> swap01{1, 0, 2, 3, 4, 5};
        const auto zt =
            expectations_z(evaluate(c, params, embed_graph(graph.permuted(swap01))));
        for (std::size_t i = 0; i < 6; ++i) {
            worst_transposition =
                std::max(worst_transposition, std::abs(zt[swap01[i]] - z[i]));
        }
    }
    CHECK(worst_transposition > 1e-3);
}

TEST_CASE("ansatz names", "[ansatz]") {
    CHECK(parse_ansatz("perm") == AnsatzKind::PermutationInvariant);
    CHECK(parse_ansatz("Cn") == AnsatzKind::CyclicInvariant);
    CHECK(parse_ansatz("standard") == AnsatzKind::StronglyEntangling);
    CHECK_FALSE(parse_ansatz("dense").has_value());
    CHECK(default_repetitions(AnsatzKind::PermutationInvariant) == 40);
    CHECK(default_repetitions(AnsatzKind::CyclicInvariant) == 30);
    CHECK(default_repetitions(AnsatzKind::StronglyEntangling) == 3);
}
