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

#include <benchmark/benchmark.h>

#include <vector>

#include "qclique/ansatz.hpp"
#include "qclique/bound_circuit.hpp"
#include "qclique/embedding.hpp"
#include "qclique/graph.hpp"
#include "qclique/gradient.hpp"
#include "qclique/training.hpp"

using namespace qclique;

namespace {

AnsatzKind kind_of(const benchmark::State &state) {
    return static_cast<AnsatzKind>(state.range(0));
}

std::vector<double> random_params(std::size_t n, Rng &rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<double> p(n);
    for (auto &x : p) {
        x = u(rng);
    }
    return p;
}

} // namespace

static void BM_Evaluate(benchmark::State &state) {
    const auto kind = kind_of(state);
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto circuit = build_ansatz(kind, n, default_repetitions(kind));
    Rng rng(7);
    const auto params = random_params(circuit.n_params(), rng);
    const auto input = embed_graph(gen_er_graph(n, 0.5, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(circuit, params, input));
    }
}
BENCHMARK(BM_Evaluate)->ArgsProduct({{0, 1, 2}, {6, 8}});

static void BM_StateJacobianAndMetric(benchmark::State &state) {
    const auto kind = kind_of(state);
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto circuit = build_ansatz(kind, n, default_repetitions(kind));
    Rng rng(7);
    const auto params = random_params(circuit.n_params(), rng);
    const auto input = embed_graph(gen_er_graph(n, 0.5, rng));
    for (auto _ : state) {
        const auto jac = state_jacobian(circuit, params, input);
        benchmark::DoNotOptimize(fubini_study_metric(jac));
    }
}
BENCHMARK(BM_StateJacobianAndMetric)->ArgsProduct({{0, 1, 2}, {6, 8}});

static void BM_StateJacobian(benchmark::State &state) {
    const auto kind = kind_of(state);
    const std::size_t n = 6;
    const auto circuit = build_ansatz(kind, n, default_repetitions(kind));
    Rng rng(7);
    const auto params = random_params(circuit.n_params(), rng);
    const auto input = embed_graph(gen_er_graph(n, 0.5, rng));
    const BoundCircuit bound(circuit, params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound.jacobian(input));
    }
}
BENCHMARK(BM_StateJacobian)->Arg(0)->Arg(1)->Arg(2);

static void BM_BoundApply(benchmark::State &state) {
    const auto kind = kind_of(state);
    const std::size_t n = 6;
    const auto circuit = build_ansatz(kind, n, default_repetitions(kind));
    Rng rng(7);
    const auto params = random_params(circuit.n_params(), rng);
    const auto input = embed_graph(gen_er_graph(n, 0.5, rng));
    const BoundCircuit bound(circuit, params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound.apply(input));
    }
}
BENCHMARK(BM_BoundApply)->Arg(0)->Arg(1)->Arg(2);

static void BM_QngStep(benchmark::State &state) {
    const auto kind = kind_of(state);
    const std::size_t n = 6;
    const auto circuit = build_ansatz(kind, n, default_repetitions(kind));
    Rng rng(11);
    const auto params = random_params(circuit.n_params(), rng);
    std::vector<TrainingSample> batch;
    for (int i = 0; i < 20; ++i) {
        auto g = gen_er_graph(n, 0.6, rng);
        auto label = make_label(g, 4, rng);
        batch.push_back({embed_graph(g), label});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(qng_step(circuit, params, batch, 0.1, 1e-3));
    }
}
BENCHMARK(BM_QngStep)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_FindKCliques(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const auto g = gen_er_graph(n, 0.6, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_k_cliques(g, n / 2 + 1));
    }
}
BENCHMARK(BM_FindKCliques)->Arg(6)->Arg(8)->Arg(10)->Arg(16);

BENCHMARK_MAIN();
