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
 * Gate placements. A gate names its kind, the qubits it acts on and the
 * indices of the parameter values it reads.
 *
 * Rotation conventions:
 *   RX(t) = exp(-i t X / 2), RY(t) = exp(-i t Y / 2), RZ(t) = exp(-i t Z / 2),
 *   RZZ(t) = exp(-i t Z(x)Z / 2), U3(a, b, c) = RZ(c) RY(b) RZ(a).
 * For CNOT, qubits[0] is the control and qubits[1] the target.
 */
#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace qclique {

enum class GateKind { RX, RY, RZ, RZZ, CZ, CNOT, H, U3 };

/// Number of parameter slots read by a gate kind.
constexpr std::size_t param_count(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
        return 1;
    case GateKind::U3:
        return 3;
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::H:
        return 0;
    }
    return 0;
}

constexpr std::size_t qubit_count(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RZZ:
    case GateKind::CZ:
    case GateKind::CNOT:
        return 2;
    default:
        return 1;
    }
}

std::string_view gate_name(GateKind kind) noexcept;

struct Gate {
    GateKind kind{GateKind::H};
    std::array<std::size_t, 2> qubits{};
    std::array<std::size_t, 3> param_slots{};

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return qubit_count(kind);
    }
    [[nodiscard]] std::size_t num_params() const noexcept {
        return param_count(kind);
    }

    static Gate rx(std::size_t q, std::size_t slot) {
        return {GateKind::RX, {q, 0}, {slot, 0, 0}};
    }
    static Gate ry(std::size_t q, std::size_t slot) {
        return {GateKind::RY, {q, 0}, {slot, 0, 0}};
    }
    static Gate rz(std::size_t q, std::size_t slot) {
        return {GateKind::RZ, {q, 0}, {slot, 0, 0}};
    }
    static Gate rzz(std::size_t q0, std::size_t q1, std::size_t slot) {
        return {GateKind::RZZ, {q0, q1}, {slot, 0, 0}};
    }
    static Gate u3(std::size_t q, std::size_t slot_a, std::size_t slot_b,
                   std::size_t slot_c) {
        return {GateKind::U3, {q, 0}, {slot_a, slot_b, slot_c}};
    }
    static Gate cz(std::size_t q0, std::size_t q1) {
        return {GateKind::CZ, {q0, q1}, {}};
    }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, {}};
    }
    static Gate h(std::size_t q) { return {GateKind::H, {q, 0}, {}}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

} // namespace qclique
