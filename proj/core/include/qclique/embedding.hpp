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
 * Graph-state embedding: one qubit per node, H on every qubit, then one CZ
 * per edge. All CZ gates are diagonal, so their order does not matter.
 */
#pragma once

#include "qclique/graph.hpp"
#include "qclique/statevector.hpp"

namespace qclique {

Statevector embed_graph(const Graph &graph);

} // namespace qclique
