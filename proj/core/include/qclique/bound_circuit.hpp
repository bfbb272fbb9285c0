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
 * A template bound to one parameter vector and compiled for repeated use.
 *
 * Compilation fuses commuting diagonal gates and same-qubit rotations, so
 * applying a BoundCircuit is much cheaper than evaluate() when the same
 * parameters are run on many inputs (validation sweeps, batch gradients).
 * evaluate() stays the gate-by-gate reference; tests check both agree.
 */
#pragma once

#include <memory>
#include <span>

#include "qclique/ansatz.hpp"
#include "qclique/gradient.hpp"
#include "qclique/statevector.hpp"

namespace qclique {

namespace detail {
class ExecutionPlan;
}

class BoundCircuit {
  public:
    BoundCircuit(const CircuitTemplate &circuit, std::span<const double> params);
    ~BoundCircuit();
    BoundCircuit(BoundCircuit &&) noexcept;
    BoundCircuit &operator=(BoundCircuit &&) noexcept;

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    /// Number of fused operations after compilation.
    [[nodiscard]] std::size_t fused_size() const noexcept;

    [[nodiscard]] Statevector apply(const Statevector &input) const;

    /// Output state and its derivative with respect to every class.
    [[nodiscard]] StateJacobian jacobian(const Statevector &input) const;

  private:
    std::size_t n_qubits_;
    std::size_t n_params_;
    std::unique_ptr<detail::ExecutionPlan> plan_;
};

} // namespace qclique
