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

#include "qclique/ansatz.hpp"

#include <string>

#include "kernels.hpp"
#include "qclique/errors.hpp"

namespace qclique {

std::string_view ansatz_name(AnsatzKind kind) noexcept {
    switch (kind) {
    case AnsatzKind::PermutationInvariant:
        return "perm";
    case AnsatzKind::CyclicInvariant:
        return "cyclic";
    case AnsatzKind::StronglyEntangling:
        return "standard";
    }
    return "?";
}

std::string_view ansatz_file_tag(AnsatzKind kind) noexcept {
    switch (kind) {
    case AnsatzKind::PermutationInvariant:
        return "Sn";
    case AnsatzKind::CyclicInvariant:
        return "Cn";
    case AnsatzKind::StronglyEntangling:
        return "Entanglement";
    }
    return "?";
}

std::optional<AnsatzKind> parse_ansatz(std::string_view name) noexcept {
    for (auto kind :
         {AnsatzKind::PermutationInvariant, AnsatzKind::CyclicInvariant,
          AnsatzKind::StronglyEntangling}) {
        if (name == ansatz_name(kind) || name == ansatz_file_tag(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

std::size_t default_repetitions(AnsatzKind kind) noexcept {
    switch (kind) {
    case AnsatzKind::PermutationInvariant:
        return 40;
    case AnsatzKind::CyclicInvariant:
        return 30;
    case AnsatzKind::StronglyEntangling:
        return 3;
    }
    return 1;
}

CircuitTemplate::CircuitTemplate(std::size_t n_qubits, std::vector<Gate> gates,
                                 std::vector<std::size_t> class_of,
                                 std::size_t n_params)
    : n_qubits_(n_qubits), gates_(std::move(gates)),
      class_of_(std::move(class_of)), n_params_(n_params) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw ConfigurationError("template qubit count out of range");
    }
    std::vector<bool> slot_used(class_of_.size(), false);
    for (const auto &g : gates_) {
        try {
            validate_gate(g, n_qubits_);
        } catch (const UsageError &e) {
            throw ConfigurationError(e.what());
        }
        for (std::size_t k = 0; k < g.num_params(); ++k) {
            const auto slot = g.param_slots[k];
            if (slot >= class_of_.size()) {
                throw ConfigurationError("gate slot " + std::to_string(slot) +
                                         " has no parameter class");
            }
            if (slot_used[slot]) {
                throw ConfigurationError("slot " + std::to_string(slot) +
                                         " used by more than one gate");
            }
            slot_used[slot] = true;
        }
    }
    std::vector<bool> class_used(n_params_, false);
    for (std::size_t s = 0; s < class_of_.size(); ++s) {
        if (!slot_used[s]) {
            throw ConfigurationError("slot " + std::to_string(s) +
                                     " not read by any gate");
        }
        if (class_of_[s] >= n_params_) {
            throw ConfigurationError("slot class index out of range");
        }
        class_used[class_of_[s]] = true;
    }
    for (std::size_t c = 0; c < n_params_; ++c) {
        if (!class_used[c]) {
            throw ConfigurationError("parameter class " + std::to_string(c) +
                                     " is not referenced by any gate");
        }
    }
}

std::vector<double>
CircuitTemplate::slot_values(std::span<const double> params) const {
    if (params.size() != n_params_) {
        throw UsageError("expected " + std::to_string(n_params_) +
                         " parameters, got " + std::to_string(params.size()));
    }
    std::vector<double> values(class_of_.size());
    for (std::size_t s = 0; s < class_of_.size(); ++s) {
        values[s] = params[class_of_[s]];
    }
    return values;
}

namespace {

// Accumulates gates and slot classes while a builder runs.
struct TemplateBuilder {
    std::vector<Gate> gates;
    std::vector<std::size_t> class_of;

    std::size_t slot(std::size_t cls) {
        class_of.push_back(cls);
        return class_of.size() - 1;
    }
};

void require_repetitions(std::size_t repetitions) {
    if (repetitions < 1) {
        throw ConfigurationError("repetitions must be at least 1");
    }
}

} // namespace

CircuitTemplate build_permutation_invariant(std::size_t n_qubits,
                                            std::size_t repetitions) {
    if (n_qubits < 2) {
        throw ConfigurationError(
            "permutation-invariant layer needs at least 2 qubits");
    }
    require_repetitions(repetitions);
    TemplateBuilder b;
    for (std::size_t r = 0; r < repetitions; ++r) {
        const std::size_t a = 3 * r;
        for (std::size_t q = 0; q < n_qubits; ++q) {
            b.gates.push_back(Gate::rx(q, b.slot(a)));
        }
        for (std::size_t q = 0; q < n_qubits; ++q) {
            b.gates.push_back(Gate::ry(q, b.slot(a + 1)));
        }
        for (std::size_t i = 0; i < n_qubits; ++i) {
            for (std::size_t j = i + 1; j < n_qubits; ++j) {
                b.gates.push_back(Gate::rzz(i, j, b.slot(a + 2)));
            }
        }
    }
    return {n_qubits, std::move(b.gates), std::move(b.class_of),
            3 * repetitions};
}

CircuitTemplate build_cyclic_invariant(std::size_t n_qubits,
                                       std::size_t repetitions) {
    // For n < 5 the distance-2 orbit either collapses onto itself (n = 4)
    // or coincides with the distance-1 orbit (n = 3).
    if (n_qubits < 5) {
        throw ConfigurationError(
            "cyclic-invariant layer needs at least 5 qubits, got " +
            std::to_string(n_qubits));
    }
    require_repetitions(repetitions);
    TemplateBuilder b;
    for (std::size_t r = 0; r < repetitions; ++r) {
        const std::size_t a = 4 * r;
        for (std::size_t q = 0; q < n_qubits; ++q) {
            b.gates.push_back(Gate::rx(q, b.slot(a)));
        }
        for (std::size_t q = 0; q < n_qubits; ++q) {
            b.gates.push_back(Gate::ry(q, b.slot(a + 1)));
        }
        for (std::size_t distance = 1; distance <= 2; ++distance) {
            for (std::size_t i = 0; i < n_qubits; ++i) {
                b.gates.push_back(Gate::rzz(i, (i + distance) % n_qubits,
                                            b.slot(a + 1 + distance)));
            }
        }
    }
    return {n_qubits, std::move(b.gates), std::move(b.class_of),
            4 * repetitions};
}

CircuitTemplate build_strongly_entangling(std::size_t n_qubits,
                                          std::size_t repetitions) {
    if (n_qubits < 3) {
        throw ConfigurationError(
            "strongly-entangling layer needs at least 3 qubits");
    }
    require_repetitions(repetitions);
    TemplateBuilder b;
    std::size_t next_class = 0;
    for (std::size_t r = 0; r < repetitions; ++r) {
        for (std::size_t stride = 1; stride <= 2; ++stride) {
            for (std::size_t q = 0; q < n_qubits; ++q) {
                const auto sa = b.slot(next_class++);
                const auto sb = b.slot(next_class++);
                const auto sc = b.slot(next_class++);
                b.gates.push_back(Gate::u3(q, sa, sb, sc));
            }
            for (std::size_t q = 0; q < n_qubits; ++q) {
                b.gates.push_back(Gate::cnot(q, (q + stride) % n_qubits));
            }
        }
    }
    return {n_qubits, std::move(b.gates), std::move(b.class_of), next_class};
}

CircuitTemplate build_ansatz(AnsatzKind kind, std::size_t n_qubits,
                             std::size_t repetitions) {
    switch (kind) {
    case AnsatzKind::PermutationInvariant:
        return build_permutation_invariant(n_qubits, repetitions);
    case AnsatzKind::CyclicInvariant:
        return build_cyclic_invariant(n_qubits, repetitions);
    case AnsatzKind::StronglyEntangling:
        return build_strongly_entangling(n_qubits, repetitions);
    }
    throw ConfigurationError("unknown ansatz kind");
}

void check_inputs(const CircuitTemplate &circuit,
                  std::span<const double> params, const Statevector &input) {
    if (params.size() != circuit.n_params()) {
        throw UsageError("expected " + std::to_string(circuit.n_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    if (input.n_qubits() != circuit.n_qubits()) {
        throw UsageError("input has " + std::to_string(input.n_qubits()) +
                         " qubits, template expects " +
                         std::to_string(circuit.n_qubits()));
    }
}

Statevector evaluate_slots(const CircuitTemplate &circuit,
                           std::span<const double> slot_values,
                           const Statevector &input) {
    if (slot_values.size() != circuit.n_slots()) {
        throw UsageError("slot value count does not match template");
    }
    if (input.n_qubits() != circuit.n_qubits()) {
        throw UsageError("input qubit count does not match template");
    }
    Statevector out = input;
    auto amps = out.amplitudes();
    for (const auto &g : circuit.gates()) {
        std::array<double, 3> values{};
        for (std::size_t k = 0; k < g.num_params(); ++k) {
            values[k] = slot_values[g.param_slots[k]];
        }
        detail::apply_resolved(amps.data(), amps.size(), 1, 1, g, values);
    }
    return out;
}

Statevector evaluate(const CircuitTemplate &circuit,
                     std::span<const double> params, const Statevector &input) {
    check_inputs(circuit, params, input);
    const auto values = circuit.slot_values(params);
    return evaluate_slots(circuit, values, input);
}

std::vector<double> expectations_z(const Statevector &state) {
    std::vector<double> z(state.n_qubits(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const double p = std::norm(amps[b]);
        for (std::size_t q = 0; q < z.size(); ++q) {
            z[q] += ((b >> q) & 1U) ? -p : p;
        }
    }
    return z;
}

} // namespace qclique
