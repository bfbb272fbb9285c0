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
 * Parameter-shared circuit templates.
 *
 * A template is an ordered gate list whose parameter slots are numbered
 * 0..n_slots-1 in gate order. Each slot belongs to a parameter class; all
 * slots of one class read the same trained value. Sharing a class across
 * every gate placement in a symmetry orbit is what makes a layer commute
 * with that symmetry group.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qclique/gate.hpp"
#include "qclique/statevector.hpp"

namespace qclique {

enum class AnsatzKind { PermutationInvariant, CyclicInvariant, StronglyEntangling };

/// Short CLI name: "perm", "cyclic" or "standard".
std::string_view ansatz_name(AnsatzKind kind) noexcept;

/// Tag used in accuracy file names: "Sn", "Cn" or "Entanglement".
std::string_view ansatz_file_tag(AnsatzKind kind) noexcept;

/// Accepts the CLI names plus the file tags.
std::optional<AnsatzKind> parse_ansatz(std::string_view name) noexcept;

/// Repetitions that bring each layer close to 120 trainable parameters.
std::size_t default_repetitions(AnsatzKind kind) noexcept;

class CircuitTemplate {
  public:
    /**
     * @param gates Gate list; gates[g].param_slots index into class_of.
     * @param class_of Parameter class of every slot.
     * @param n_params Number of classes. Each class must own at least one
     * slot.
     * Throws ConfigurationError on any inconsistency.
     */
    CircuitTemplate(std::size_t n_qubits, std::vector<Gate> gates,
                    std::vector<std::size_t> class_of, std::size_t n_params);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    [[nodiscard]] std::size_t n_slots() const noexcept {
        return class_of_.size();
    }
    [[nodiscard]] std::span<const Gate> gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::span<const std::size_t> class_of() const noexcept {
        return class_of_;
    }

    /// Per-slot values for a class-indexed parameter vector.
    [[nodiscard]] std::vector<double>
    slot_values(std::span<const double> params) const;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> class_of_;
    std::size_t n_params_;
};

/// RX(a) and RY(b) on every qubit, then RZZ(c) on every unordered pair.
CircuitTemplate build_permutation_invariant(std::size_t n_qubits,
                                            std::size_t repetitions);

/// RX(a), RY(b) on every qubit, RZZ(c) on the n distance-1 ring pairs and
/// RZZ(d) on the n distance-2 ring pairs. Needs n_qubits >= 5.
CircuitTemplate build_cyclic_invariant(std::size_t n_qubits,
                                       std::size_t repetitions);

/// Two sublayers per repetition, each a free U3 on every qubit followed by
/// a CNOT ring (control i, target i + r mod n) with r = 1 then r = 2.
CircuitTemplate build_strongly_entangling(std::size_t n_qubits,
                                          std::size_t repetitions);

CircuitTemplate build_ansatz(AnsatzKind kind, std::size_t n_qubits,
                             std::size_t repetitions);

/// Throws UsageError unless params and input match the template.
void check_inputs(const CircuitTemplate &circuit,
                  std::span<const double> params, const Statevector &input);

/// Applies every gate of the template to a copy of input.
Statevector evaluate(const CircuitTemplate &circuit,
                     std::span<const double> params, const Statevector &input);

/// Same as evaluate, with per-slot values instead of per-class params.
Statevector evaluate_slots(const CircuitTemplate &circuit,
                           std::span<const double> slot_values,
                           const Statevector &input);

/// <Z_i> for every qubit i.
std::vector<double> expectations_z(const Statevector &state);

} // namespace qclique
