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

#include "plan.hpp"

#include <algorithm>
#include <cmath>

namespace qclique::detail {

namespace {

constexpr Mat2 kIdentity{Complex{1, 0}, Complex{}, Complex{}, Complex{1, 0}};
constexpr Mat2 kPauliX{Complex{}, Complex{1, 0}, Complex{1, 0}, Complex{}};
constexpr Mat2 kPauliY{Complex{}, Complex{0, -1}, Complex{0, 1}, Complex{}};
constexpr Mat2 kPauliZ{Complex{1, 0}, Complex{}, Complex{}, Complex{-1, 0}};

Mat2 adjoint(const Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

struct PendingUnitary {
    bool active = false;
    Mat2 unitary = kIdentity;
    std::vector<std::pair<std::size_t, Mat2>> generators;
};

class PlanBuilder {
  public:
    PlanBuilder(std::size_t n_qubits, std::size_t dim)
        : dim_(dim), pending_(n_qubits) {}

    void rotation(std::size_t q, const Mat2 &gate, const Mat2 *generator,
                  std::size_t cls) {
        if (diag_.kind == FusedOp::Kind::Diagonal && ((touched_ >> q) & 1U)) {
            emit_diagonal();
        }
        auto &p = pending_[q];
        const Mat2 gate_adj = adjoint(gate);
        for (auto &entry : p.generators) {
            entry.second = matmul(gate, matmul(entry.second, gate_adj));
        }
        if (generator != nullptr) {
            p.generators.emplace_back(cls, *generator);
        }
        p.unitary = matmul(gate, p.unitary);
        p.active = true;
    }

    // sign(b) = +1 or -1: the eigenvalue of the diagonal generator on row b.
    template <typename SignFn>
    void diagonal(std::size_t q0, std::size_t q1, double theta, std::size_t cls,
                  SignFn sign) {
        open_diagonal(q0, q1);
        const Complex minus = std::polar(1.0, -theta / 2);
        const Complex plus = std::polar(1.0, theta / 2);
        auto &w = weights_for(cls);
        for (std::size_t b = 0; b < dim_; ++b) {
            const double s = sign(b);
            diag_.phase[b] *= s > 0 ? minus : plus;
            w[b] += s;
        }
    }

    void cz(std::size_t q0, std::size_t q1) {
        open_diagonal(q0, q1);
        const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
        for (std::size_t b = 0; b < dim_; ++b) {
            if ((b & mask) == mask) {
                diag_.phase[b] = -diag_.phase[b];
            }
        }
    }

    void cnot(std::size_t control, std::size_t target) {
        if (diag_.kind == FusedOp::Kind::Diagonal &&
            (((touched_ >> control) | (touched_ >> target)) & 1U)) {
            emit_diagonal();
        }
        emit_unitary(control);
        emit_unitary(target);
        FusedOp op;
        op.kind = FusedOp::Kind::Cnot;
        op.q0 = control;
        op.q1 = target;
        ops_.push_back(std::move(op));
    }

    std::vector<FusedOp> finish() && {
        emit_diagonal();
        for (std::size_t q = 0; q < pending_.size(); ++q) {
            emit_unitary(q);
        }
        return std::move(ops_);
    }

  private:
    void open_diagonal(std::size_t q0, std::size_t q1) {
        emit_unitary(q0);
        emit_unitary(q1);
        if (diag_.kind != FusedOp::Kind::Diagonal) {
            diag_.kind = FusedOp::Kind::Diagonal;
            diag_.phase.assign(dim_, Complex{1, 0});
            diag_.weights.clear();
            touched_ = 0;
        }
        touched_ |= (std::size_t{1} << q0) | (std::size_t{1} << q1);
    }

    std::vector<double> &weights_for(std::size_t cls) {
        for (auto &entry : diag_.weights) {
            if (entry.first == cls) {
                return entry.second;
            }
        }
        diag_.weights.emplace_back(cls, std::vector<double>(dim_, 0.0));
        return diag_.weights.back().second;
    }

    void emit_diagonal() {
        if (diag_.kind == FusedOp::Kind::Diagonal) {
            ops_.push_back(std::move(diag_));
            diag_ = FusedOp{};
            touched_ = 0;
        }
    }

    void emit_unitary(std::size_t q) {
        auto &p = pending_[q];
        if (!p.active) {
            return;
        }
        FusedOp op;
        op.kind = FusedOp::Kind::Unitary;
        op.q0 = q;
        op.unitary = p.unitary;
        op.generators = std::move(p.generators);
        ops_.push_back(std::move(op));
        p = PendingUnitary{};
    }

    std::size_t dim_;
    std::vector<PendingUnitary> pending_;
    // kind == Unitary means "no diagonal block open".
    FusedOp diag_;
    std::size_t touched_ = 0;
    std::vector<FusedOp> ops_;
};

} // namespace

ExecutionPlan::ExecutionPlan(const CircuitTemplate &circuit,
                             std::span<const double> slot_values)
    : dim_(std::size_t{1} << circuit.n_qubits()) {
    PlanBuilder builder(circuit.n_qubits(), dim_);
    const auto class_of = circuit.class_of();
    for (const auto &g : circuit.gates()) {
        const auto &s = g.param_slots;
        const std::size_t q = g.qubits[0];
        switch (g.kind) {
        case GateKind::RX:
            builder.rotation(q, rx_matrix(slot_values[s[0]]), &kPauliX,
                             class_of[s[0]]);
            break;
        case GateKind::RY:
            builder.rotation(q, ry_matrix(slot_values[s[0]]), &kPauliY,
                             class_of[s[0]]);
            break;
        case GateKind::U3:
            builder.rotation(q, rz_matrix(slot_values[s[0]]), &kPauliZ,
                             class_of[s[0]]);
            builder.rotation(q, ry_matrix(slot_values[s[1]]), &kPauliY,
                             class_of[s[1]]);
            builder.rotation(q, rz_matrix(slot_values[s[2]]), &kPauliZ,
                             class_of[s[2]]);
            break;
        case GateKind::H:
            builder.rotation(q, h_matrix(), nullptr, 0);
            break;
        case GateKind::RZ:
            builder.diagonal(q, q, slot_values[s[0]], class_of[s[0]],
                             [q](std::size_t b) {
                                 return ((b >> q) & 1U) ? -1.0 : 1.0;
                             });
            break;
        case GateKind::RZZ: {
            const std::size_t q1 = g.qubits[1];
            builder.diagonal(q, q1, slot_values[s[0]], class_of[s[0]],
                             [q, q1](std::size_t b) {
                                 return (((b >> q) ^ (b >> q1)) & 1U) ? -1.0
                                                                      : 1.0;
                             });
            break;
        }
        case GateKind::CZ:
            builder.cz(q, g.qubits[1]);
            break;
        case GateKind::CNOT:
            builder.cnot(q, g.qubits[1]);
            break;
        }
    }
    ops_ = std::move(builder).finish();
}

void ExecutionPlan::run(std::span<Complex> amps) const {
    Complex *data = amps.data();
    for (const auto &op : ops_) {
        switch (op.kind) {
        case FusedOp::Kind::Unitary: {
            const std::size_t stride = std::size_t{1} << op.q0;
            const Mat2 &m = op.unitary;
            for (std::size_t base = 0; base < dim_; base += 2 * stride) {
                for (std::size_t j = base; j < base + stride; ++j) {
                    const Complex a0 = data[j];
                    const Complex a1 = data[j + stride];
                    data[j] = m[0] * a0 + m[1] * a1;
                    data[j + stride] = m[2] * a0 + m[3] * a1;
                }
            }
            break;
        }
        case FusedOp::Kind::Diagonal:
            for (std::size_t b = 0; b < dim_; ++b) {
                data[b] *= op.phase[b];
            }
            break;
        case FusedOp::Kind::Cnot:
            apply_cnot(data, dim_, 1, 1, op.q0, op.q1);
            break;
        }
    }
}

void ExecutionPlan::run_with_derivatives(Complex *block, std::size_t ld) const {
    const Complex half_i{0.0, -0.5};
    std::size_t active = 1;
    for (const auto &op : ops_) {
        switch (op.kind) {
        case FusedOp::Kind::Unitary: {
            apply_1q(block, dim_, ld, active, op.q0, op.unitary);
            const std::size_t stride = std::size_t{1} << op.q0;
            for (const auto &[cls, m] : op.generators) {
                const std::size_t col = cls + 1;
                active = std::max(active, col + 1);
                for (std::size_t base = 0; base < dim_; base += 2 * stride) {
                    for (std::size_t j = base; j < base + stride; ++j) {
                        const Complex a0 = block[j * ld];
                        const Complex a1 = block[(j + stride) * ld];
                        block[j * ld + col] += half_i * (m[0] * a0 + m[1] * a1);
                        block[(j + stride) * ld + col] +=
                            half_i * (m[2] * a0 + m[3] * a1);
                    }
                }
            }
            break;
        }
        case FusedOp::Kind::Diagonal:
            for (std::size_t b = 0; b < dim_; ++b) {
                const Complex p = op.phase[b];
                Complex *row = block + b * ld;
                for (std::size_t c = 0; c < active; ++c) {
                    row[c] *= p;
                }
            }
            for (const auto &[cls, w] : op.weights) {
                const std::size_t col = cls + 1;
                active = std::max(active, col + 1);
                for (std::size_t b = 0; b < dim_; ++b) {
                    block[b * ld + col] += half_i * w[b] * block[b * ld];
                }
            }
            break;
        case FusedOp::Kind::Cnot:
            apply_cnot(block, dim_, ld, active, op.q0, op.q1);
            break;
        }
    }
}

} // namespace qclique::detail
