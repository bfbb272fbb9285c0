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

#include "qclique/bound_circuit.hpp"

#include <string>

#include "plan.hpp"
#include "qclique/errors.hpp"

namespace qclique {

BoundCircuit::BoundCircuit(const CircuitTemplate &circuit,
                           std::span<const double> params)
    : n_qubits_(circuit.n_qubits()), n_params_(circuit.n_params()) {
    const auto values = circuit.slot_values(params);
    plan_ = std::make_unique<detail::ExecutionPlan>(circuit, values);
}

BoundCircuit::~BoundCircuit() = default;
BoundCircuit::BoundCircuit(BoundCircuit &&) noexcept = default;
BoundCircuit &BoundCircuit::operator=(BoundCircuit &&) noexcept = default;

std::size_t BoundCircuit::fused_size() const noexcept { return plan_->size(); }

namespace {

void check_qubits(std::size_t expected, const Statevector &input) {
    if (input.n_qubits() != expected) {
        throw UsageError("input has " + std::to_string(input.n_qubits()) +
                         " qubits, circuit expects " + std::to_string(expected));
    }
}

} // namespace

Statevector BoundCircuit::apply(const Statevector &input) const {
    check_qubits(n_qubits_, input);
    Statevector out = input;
    plan_->run(out.amplitudes());
    return out;
}

StateJacobian BoundCircuit::jacobian(const Statevector &input) const {
    check_qubits(n_qubits_, input);
    const auto dim = static_cast<Eigen::Index>(input.dim());
    const auto ld = static_cast<Eigen::Index>(n_params_ + 1);
    ComplexMatrix block = ComplexMatrix::Zero(dim, ld);
    const auto amps = input.amplitudes();
    for (Eigen::Index b = 0; b < dim; ++b) {
        block(b, 0) = amps[static_cast<std::size_t>(b)];
    }
    plan_->run_with_derivatives(block.data(), static_cast<std::size_t>(ld));
    std::vector<Complex> out(input.dim());
    for (Eigen::Index b = 0; b < dim; ++b) {
        out[static_cast<std::size_t>(b)] = block(b, 0);
    }
    return {Statevector(n_qubits_, std::move(out)), block.rightCols(ld - 1)};
}

} // namespace qclique
