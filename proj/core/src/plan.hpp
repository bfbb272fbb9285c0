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

// Fused execution of a template at fixed parameter values.
//
// Consecutive diagonal gates (RZ, RZZ, CZ) collapse into one phase vector.
// Single-qubit gates on the same qubit merge into one 2x2 unitary as long as
// nothing in between touches that qubit. For derivative sweeps every merged
// rotation leaves an insertion: after the fused op is applied, column
// `cls` receives (-i/2) M psi, where M is the rotation generator conjugated
// by the rest of the fused op (a diagonal weight vector for phase blocks).
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kernels.hpp"
#include "qclique/ansatz.hpp"

namespace qclique::detail {

struct FusedOp {
    enum class Kind { Unitary, Diagonal, Cnot };
    Kind kind = Kind::Unitary;
    std::size_t q0 = 0;
    std::size_t q1 = 0;
    Mat2 unitary{};
    std::vector<std::pair<std::size_t, Mat2>> generators;
    std::vector<Complex> phase;
    std::vector<std::pair<std::size_t, std::vector<double>>> weights;
};

class ExecutionPlan {
  public:
    ExecutionPlan(const CircuitTemplate &circuit,
                  std::span<const double> slot_values);

    /// Applies the circuit to one statevector in place.
    void run(std::span<Complex> amps) const;

    /// Row-major block with ld columns: column 0 the state, column 1 + c the
    /// derivative with respect to class c (zero on entry).
    void run_with_derivatives(Complex *block, std::size_t ld) const;

    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

  private:
    std::size_t dim_;
    std::vector<FusedOp> ops_;
};

} // namespace qclique::detail
