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
 * Dense statevector and exact gate application.
 *
 * Basis state index b encodes qubit q in bit q, so qubit 0 is the
 * least-significant bit.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qclique/gate.hpp"

namespace qclique {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

class Statevector {
  public:
    /// |0...0> on n_qubits. Throws ConfigurationError outside [1, 24].
    explicit Statevector(std::size_t n_qubits);

    /// Takes ownership of amplitudes; their count must be 2^n_qubits.
    Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

[[nodiscard]] Statevector zero_state(std::size_t n_qubits);

/**
 * Applies gate in place. Parameter slot s of the gate reads params[s].
 * Throws UsageError for out-of-range or repeated qubits and for params too
 * short to cover the gate's slots.
 */
void apply_gate(Statevector &state, const Gate &gate,
                std::span<const double> params);

/// <psi| Z_qubit |psi>.
[[nodiscard]] double expectation_z(const Statevector &state, std::size_t qubit);

/// Checks qubit indices of gate against n_qubits; throws UsageError.
void validate_gate(const Gate &gate, std::size_t n_qubits);

} // namespace qclique
