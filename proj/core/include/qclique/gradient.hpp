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
 * Exact derivatives of templated circuits.
 *
 * Two independent routes are provided. expectation_gradient uses the
 * two-point parameter-shift rule on every slot and sums slot contributions
 * into their class. state_jacobian propagates the derivative state of every
 * class alongside the state, inserting the rotation generator (-i/2 P) after
 * each parameterized gate; the metric and the training loss gradient are
 * built from it.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qclique/ansatz.hpp"
#include "qclique/statevector.hpp"

namespace qclique {

using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct StateJacobian {
    Statevector state;
    /// derivatives(b, c) = d<b|psi> / d params[c]; 2^n rows, n_params columns.
    ComplexMatrix derivatives;
};

StateJacobian state_jacobian(const CircuitTemplate &circuit,
                             std::span<const double> params,
                             const Statevector &input);

/// d<Z_qubit>/d params via parameter shift. Exact up to rounding.
std::vector<double> expectation_gradient(const CircuitTemplate &circuit,
                                         std::span<const double> params,
                                         const Statevector &input,
                                         std::size_t qubit);

/// Row i holds d<Z_i>/d params, computed from the Jacobian.
Eigen::MatrixXd expectation_jacobian(const StateJacobian &jac);

/// g_ij = Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>].
Eigen::MatrixXd fubini_study_metric(const StateJacobian &jac);

Eigen::MatrixXd fubini_study_metric(const CircuitTemplate &circuit,
                                    std::span<const double> params,
                                    const Statevector &input);

} // namespace qclique
