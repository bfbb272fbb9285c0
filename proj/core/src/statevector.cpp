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

#include "qclique/statevector.hpp"

#include <string>

#include "kernels.hpp"
#include "qclique/errors.hpp"

namespace qclique {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::RZZ:
        return "RZZ";
    case GateKind::CZ:
        return "CZ";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::H:
        return "H";
    case GateKind::U3:
        return "U3";
    }
    return "?";
}

namespace {

void check_size(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("statevector size must be 1.." +
                                 std::to_string(kMaxQubits) + " qubits, got " +
                                 std::to_string(n_qubits));
    }
}

} // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_size(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_size(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw UsageError("amplitude count " + std::to_string(amps_.size()) +
                         " does not match 2^" + std::to_string(n_qubits));
    }
}

double Statevector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

Statevector zero_state(std::size_t n_qubits) { return Statevector(n_qubits); }

void validate_gate(const Gate &gate, std::size_t n_qubits) {
    const std::size_t nq = gate.num_qubits();
    for (std::size_t i = 0; i < nq; ++i) {
        if (gate.qubits[i] >= n_qubits) {
            throw UsageError(std::string(gate_name(gate.kind)) + " qubit " +
                             std::to_string(gate.qubits[i]) +
                             " out of range for " + std::to_string(n_qubits) +
                             " qubits");
        }
    }
    if (nq == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw UsageError(std::string(gate_name(gate.kind)) +
                         " needs two distinct qubits");
    }
}

void apply_gate(Statevector &state, const Gate &gate,
                std::span<const double> params) {
    validate_gate(gate, state.n_qubits());
    std::array<double, 3> values{};
    for (std::size_t k = 0; k < gate.num_params(); ++k) {
        if (gate.param_slots[k] >= params.size()) {
            throw UsageError("parameter slot " +
                             std::to_string(gate.param_slots[k]) +
                             " beyond parameter array of length " +
                             std::to_string(params.size()));
        }
        values[k] = params[gate.param_slots[k]];
    }
    auto amps = state.amplitudes();
    detail::apply_resolved(amps.data(), amps.size(), 1, 1, gate, values);
}

double expectation_z(const Statevector &state, std::size_t qubit) {
    if (qubit >= state.n_qubits()) {
        throw UsageError("qubit " + std::to_string(qubit) +
                         " out of range for " +
                         std::to_string(state.n_qubits()) + " qubits");
    }
    double sum = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const double p = std::norm(amps[b]);
        sum += ((b >> qubit) & 1U) ? -p : p;
    }
    return sum;
}

} // namespace qclique
