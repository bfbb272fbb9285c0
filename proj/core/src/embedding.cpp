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

#include "qclique/embedding.hpp"

namespace qclique {

Statevector embed_graph(const Graph &graph) {
    Statevector state(graph.n_nodes());
    for (std::size_t q = 0; q < graph.n_nodes(); ++q) {
        apply_gate(state, Gate::h(q), {});
    }
    for (auto [i, j] : graph.edges()) {
        apply_gate(state, Gate::cz(i, j), {});
    }
    return state;
}

} // namespace qclique
