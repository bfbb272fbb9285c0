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

// Gate kernels over a row-major block of amplitudes: row b holds `cols`
// amplitudes of basis state b, rows are `ld` elements apart. A plain
// statevector is the ld == cols == 1 case. Applying the same gate to many
// columns at once is how the Jacobian sweep propagates derivative states.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

#include "qclique/gate.hpp"

namespace qclique::detail {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>; // row-major 2x2

inline Mat2 rx_matrix(double t) {
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
}

inline Mat2 ry_matrix(double t) {
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

inline Mat2 rz_matrix(double t) {
    return {std::polar(1.0, -t / 2), Complex{}, Complex{},
            std::polar(1.0, t / 2)};
}

inline Mat2 h_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
}

inline Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// RZ(c) RY(b) RZ(a)
inline Mat2 u3_matrix(double a, double b, double c) {
    return matmul(rz_matrix(c), matmul(ry_matrix(b), rz_matrix(a)));
}

inline void apply_1q(Complex *data, std::size_t dim, std::size_t ld,
                     std::size_t cols, std::size_t q, const Mat2 &m) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            Complex *r0 = data + j * ld;
            Complex *r1 = data + (j + stride) * ld;
            for (std::size_t c = 0; c < cols; ++c) {
                const Complex a0 = r0[c];
                const Complex a1 = r1[c];
                r0[c] = m[0] * a0 + m[1] * a1;
                r1[c] = m[2] * a0 + m[3] * a1;
            }
        }
    }
}

/// Multiplies rows with bit q clear by p0 and rows with it set by p1.
inline void apply_diag_1q(Complex *data, std::size_t dim, std::size_t ld,
                          std::size_t cols, std::size_t q, Complex p0,
                          Complex p1) {
    for (std::size_t b = 0; b < dim; ++b) {
        const Complex p = ((b >> q) & 1U) ? p1 : p0;
        Complex *r = data + b * ld;
        for (std::size_t c = 0; c < cols; ++c) {
            r[c] *= p;
        }
    }
}

/// Multiplies rows by `even` when bits q0, q1 agree and by `odd` otherwise.
inline void apply_parity_phase(Complex *data, std::size_t dim, std::size_t ld,
                               std::size_t cols, std::size_t q0,
                               std::size_t q1, Complex even, Complex odd) {
    for (std::size_t b = 0; b < dim; ++b) {
        const bool parity = (((b >> q0) ^ (b >> q1)) & 1U) != 0;
        const Complex p = parity ? odd : even;
        Complex *r = data + b * ld;
        for (std::size_t c = 0; c < cols; ++c) {
            r[c] *= p;
        }
    }
}

inline void apply_cz(Complex *data, std::size_t dim, std::size_t ld,
                     std::size_t cols, std::size_t q0, std::size_t q1) {
    const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b & mask) == mask) {
            Complex *r = data + b * ld;
            for (std::size_t c = 0; c < cols; ++c) {
                r[c] = -r[c];
            }
        }
    }
}

inline void apply_cnot(Complex *data, std::size_t dim, std::size_t ld,
                       std::size_t cols, std::size_t control,
                       std::size_t target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            Complex *r0 = data + b * ld;
            Complex *r1 = data + (b | tbit) * ld;
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(r0[c], r1[c]);
            }
        }
    }
}

/// Applies a gate whose parameter values are already resolved:
/// values[k] is the value of the gate's k-th parameter slot.
inline void apply_resolved(Complex *data, std::size_t dim, std::size_t ld,
                           std::size_t cols, const Gate &g,
                           const std::array<double, 3> &values) {
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
    case GateKind::RX:
        apply_1q(data, dim, ld, cols, q, rx_matrix(values[0]));
        break;
    case GateKind::RY:
        apply_1q(data, dim, ld, cols, q, ry_matrix(values[0]));
        break;
    case GateKind::RZ:
        apply_diag_1q(data, dim, ld, cols, q, std::polar(1.0, -values[0] / 2),
                      std::polar(1.0, values[0] / 2));
        break;
    case GateKind::RZZ:
        apply_parity_phase(data, dim, ld, cols, q, g.qubits[1],
                           std::polar(1.0, -values[0] / 2),
                           std::polar(1.0, values[0] / 2));
        break;
    case GateKind::U3:
        apply_1q(data, dim, ld, cols, q,
                 u3_matrix(values[0], values[1], values[2]));
        break;
    case GateKind::CZ:
        apply_cz(data, dim, ld, cols, q, g.qubits[1]);
        break;
    case GateKind::CNOT:
        apply_cnot(data, dim, ld, cols, q, g.qubits[1]);
        break;
    case GateKind::H:
        apply_1q(data, dim, ld, cols, q, h_matrix());
        break;
    }
}

} // namespace qclique::detail
