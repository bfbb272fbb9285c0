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

#include "qclique/gradient.hpp"

#include <numbers>
#include <string>

#include "qclique/bound_circuit.hpp"
#include "qclique/errors.hpp"

namespace qclique {

StateJacobian state_jacobian(const CircuitTemplate &circuit,
                             std::span<const double> params,
                             const Statevector &input) {
    check_inputs(circuit, params, input);
    return BoundCircuit(circuit, params).jacobian(input);
}

std::vector<double> expectation_gradient(const CircuitTemplate &circuit,
                                         std::span<const double> params,
                                         const Statevector &input,
                                         std::size_t qubit) {
    check_inputs(circuit, params, input);
    if (qubit >= circuit.n_qubits()) {
        throw UsageError("qubit " + std::to_string(qubit) + " out of range");
    }
    constexpr double shift = std::numbers::pi / 2;
    auto values = circuit.slot_values(params);
    const auto class_of = circuit.class_of();
    std::vector<double> grad(circuit.n_params(), 0.0);
    for (std::size_t s = 0; s < values.size(); ++s) {
        const double original = values[s];
        values[s] = original + shift;
        const double plus =
            expectation_z(evaluate_slots(circuit, values, input), qubit);
        values[s] = original - shift;
        const double minus =
            expectation_z(evaluate_slots(circuit, values, input), qubit);
        values[s] = original;
        grad[class_of[s]] += 0.5 * (plus - minus);
    }
    return grad;
}

Eigen::MatrixXd expectation_jacobian(const StateJacobian &jac) {
    const auto psi = jac.state.amplitudes();
    const auto n = static_cast<Eigen::Index>(jac.state.n_qubits());
    const auto n_params = jac.derivatives.cols();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n_params);
    // Re(conj(psi_b) d_c psi_b), then signed sums per qubit.
    Eigen::MatrixXd weighted(static_cast<Eigen::Index>(psi.size()), n_params);
    for (std::size_t b = 0; b < psi.size(); ++b) {
        const auto row = static_cast<Eigen::Index>(b);
        weighted.row(row) =
            (std::conj(psi[b]) * jac.derivatives.row(row)).real();
    }
    for (std::size_t b = 0; b < psi.size(); ++b) {
        const auto row = static_cast<Eigen::Index>(b);
        for (Eigen::Index q = 0; q < n; ++q) {
            if ((b >> q) & 1U) {
                out.row(q) -= weighted.row(row);
            } else {
                out.row(q) += weighted.row(row);
            }
        }
    }
    return 2.0 * out;
}

Eigen::MatrixXd fubini_study_metric(const StateJacobian &jac) {
    const auto psi_span = jac.state.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> psi(
        psi_span.data(), static_cast<Eigen::Index>(psi_span.size()));
    const auto &d = jac.derivatives;
    const auto rows = d.rows();
    const auto p = d.cols();
    // Re(A^H B) = Re(A)^T Re(B) + Im(A)^T Im(B), so stack real and
    // imaginary parts and take one real symmetric product.
    Eigen::MatrixXd stacked(2 * rows, p);
    stacked.topRows(rows) = d.real();
    stacked.bottomRows(rows) = d.imag();
    // a_i = <psi|d_i psi>
    const Eigen::RowVectorXcd a = psi.adjoint() * d;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p, p);
    auto lower = g.selfadjointView<Eigen::Lower>();
    lower.rankUpdate(stacked.transpose());
    lower.rankUpdate(a.real().transpose(), -1.0);
    lower.rankUpdate(a.imag().transpose(), -1.0);
    g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
    return g;
}

Eigen::MatrixXd fubini_study_metric(const CircuitTemplate &circuit,
                                    std::span<const double> params,
                                    const Statevector &input) {
    return fubini_study_metric(state_jacobian(circuit, params, input));
}

} // namespace qclique
