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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qclique/errors.hpp"
#include "qclique/statevector.hpp"

using namespace qclique;
using Catch::Approx;

namespace {

constexpr double pi = std::numbers::pi;

Statevector basis_state(std::size_t n, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return {n, std::move(amps)};
}

void require_amps(const Statevector &s, const std::vector<Complex> &expected,
                  double tol = 1e-12) {
    REQUIRE(s.dim() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        INFO("amplitude " << i);
        CHECK(std::abs(s[i] - expected[i]) < tol);
    }
}

// Dense 2^n x 2^n operator for a 2x2 matrix on one qubit, built from
// explicit index arithmetic.
Eigen::MatrixXcd embed_1q(std::size_t n, std::size_t q,
                          const Eigen::Matrix2cd &m) {
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~(std::size_t{1} << q)) != (col & ~(std::size_t{1} << q))) {
                continue;
            }
            out(row, col) = m((row >> q) & 1U, (col >> q) & 1U);
        }
    }
    return out;
}

Eigen::VectorXcd as_vector(const Statevector &s) {
    Eigen::VectorXcd v(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(i) = s[i];
    }
    return v;
}

} // namespace

TEST_CASE("zero_state", "[statevector]") {
    SECTION("one qubit") { require_amps(zero_state(1), {1.0, 0.0}); }
    SECTION("two qubits") { require_amps(zero_state(2), {1.0, 0.0, 0.0, 0.0}); }
    SECTION("six qubits") {
        const auto s = zero_state(6);
        CHECK(s.dim() == 64);
        CHECK(s.norm_squared() == Approx(1.0));
    }
    SECTION("size limits") {
        CHECK_THROWS_AS(zero_state(0), ConfigurationError);
        CHECK_THROWS_AS(zero_state(25), ConfigurationError);
        CHECK_NOTHROW(zero_state(kMaxQubits));
    }
    SECTION("amplitude count must match") {
        CHECK_THROWS_AS(Statevector(2, std::vector<Complex>(3)), UsageError);
    }
}

TEST_CASE("apply_gate definitions", "[statevector]") {
    const std::vector<double> none;
    SECTION("CZ flips the sign of |11> only") {
        auto s = basis_state(2, 3);
        apply_gate(s, Gate::cz(0, 1), none);
        require_amps(s, {0.0, 0.0, 0.0, -1.0});
        auto t = basis_state(2, 1); // qubit 0 set: |10> in q0-first notation
        apply_gate(t, Gate::cz(0, 1), none);
        require_amps(t, {0.0, 1.0, 0.0, 0.0});
    }
    SECTION("RZZ phases follow Z(x)Z eigenvalues") {
        const double theta = 0.731;
        const std::vector<double> p{theta};
        auto s = zero_state(2);
        apply_gate(s, Gate::rzz(0, 1, 0), p);
        require_amps(s, {std::polar(1.0, -theta / 2), 0.0, 0.0, 0.0});
        auto t = basis_state(2, 1);
        apply_gate(t, Gate::rzz(0, 1, 0), p);
        require_amps(t, {0.0, std::polar(1.0, theta / 2), 0.0, 0.0});
    }
    SECTION("RX(pi)|0> = -i|1>") {
        auto s = zero_state(1);
        const std::vector<double> p{pi};
        apply_gate(s, Gate::rx(0, 0), p);
        require_amps(s, {0.0, Complex{0, -1}});
    }
    SECTION("U3 with zero angles is the identity") {
        Rng rng(3);
        auto s = testing::random_state(3, rng);
        const auto before = s;
        const std::vector<double> p{0.0, 0.0, 0.0};
        apply_gate(s, Gate::u3(1, 0, 1, 2), p);
        CHECK(testing::max_abs_diff(s, before) < 1e-15);
    }
    SECTION("CNOT maps |control=1,target=0> to |11>") {
        auto s = basis_state(2, 1);
        apply_gate(s, Gate::cnot(0, 1), none);
        require_amps(s, {0.0, 0.0, 0.0, 1.0});
    }
    SECTION("H|0> is |+>") {
        auto s = zero_state(1);
        apply_gate(s, Gate::h(0), none);
        const double r = 1.0 / std::sqrt(2.0);
        require_amps(s, {r, r});
    }
}

TEST_CASE("single-qubit gates match dense operators", "[statevector]") {
    Rng rng(21);
    const double a = 0.4;
    const double b = -1.3;
    const double c = 2.2;
    const Complex i{0, 1};
    auto rot = [&](const Eigen::Matrix2cd &pauli, double t) {
        return Eigen::Matrix2cd(std::cos(t / 2) * Eigen::Matrix2cd::Identity() -
                                i * std::sin(t / 2) * pauli);
    };
    Eigen::Matrix2cd x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    const std::vector<double> p{a, b, c};
    for (std::size_t q = 0; q < 3; ++q) {
        const auto start = testing::random_state(3, rng);
        struct Case {
            Gate gate;
            Eigen::Matrix2cd matrix;
        };
        const std::vector<Case> cases{
            {Gate::rx(q, 0), rot(x, a)},
            {Gate::ry(q, 1), rot(y, b)},
            {Gate::rz(q, 2), rot(z, c)},
            {Gate::u3(q, 0, 1, 2), rot(z, c) * rot(y, b) * rot(z, a)},
        };
        for (const auto &cs : cases) {
            auto s = start;
            apply_gate(s, cs.gate, p);
            const Eigen::VectorXcd expected = embed_1q(3, q, cs.matrix) *
                                              as_vector(start);
            CHECK((as_vector(s) - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("apply_gate rejects bad arguments", "[statevector]") {
    auto s = zero_state(2);
    const std::vector<double> p{0.1};
    CHECK_THROWS_AS(apply_gate(s, Gate::rx(2, 0), p), UsageError);
    CHECK_THROWS_AS(apply_gate(s, Gate::cz(1, 1), {}), UsageError);
    CHECK_THROWS_AS(apply_gate(s, Gate::rx(0, 1), p), UsageError);
    CHECK_THROWS_AS(expectation_z(s, 2), UsageError);
}

TEST_CASE("expectation_z", "[statevector]") {
    CHECK(expectation_z(zero_state(1), 0) == Approx(1.0));
    CHECK(expectation_z(basis_state(1, 1), 0) == Approx(-1.0));
    auto plus = zero_state(1);
    apply_gate(plus, Gate::h(0), {});
    CHECK(std::abs(expectation_z(plus, 0)) < 1e-15);
}

TEST_CASE("qubit 0 is the least-significant bit", "[statevector]") {
    auto s = zero_state(2);
    const std::vector<double> p{pi};
    apply_gate(s, Gate::rx(1, 0), p);
    CHECK(expectation_z(s, 1) == Approx(-1.0));
    CHECK(expectation_z(s, 0) == Approx(1.0));
    CHECK(std::abs(s[2]) == Approx(1.0));
}

namespace {

Gate random_gate(std::size_t n, Rng &rng) {
    std::uniform_int_distribution<std::size_t> kind(0, 7);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    const std::size_t q0 = qubit(rng);
    std::size_t q1 = qubit(rng);
    while (q1 == q0) {
        q1 = qubit(rng);
    }
    switch (kind(rng)) {
    case 0:
        return Gate::rx(q0, 0);
    case 1:
        return Gate::ry(q0, 0);
    case 2:
        return Gate::rz(q0, 0);
    case 3:
        return Gate::rzz(q0, q1, 0);
    case 4:
        return Gate::cz(q0, q1);
    case 5:
        return Gate::cnot(q0, q1);
    case 6:
        return Gate::h(q0);
    default:
        return Gate::u3(q0, 0, 1, 2);
    }
}

} // namespace

TEST_CASE("norm is preserved over long random sequences", "[statevector][property]") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = zero_state(6);
        for (int i = 0; i < 100; ++i) {
            const auto p = testing::random_params(3, rng);
            apply_gate(s, random_gate(6, rng), p);
        }
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
    }
}

TEST_CASE("gate followed by its inverse restores the state", "[statevector][property]") {
    Rng rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const auto start = testing::random_state(4, rng);
        const Gate g = random_gate(4, rng);
        if (g.kind == GateKind::H) {
            continue;
        }
        const auto p = testing::random_params(3, rng);
        auto s = start;
        apply_gate(s, g, p);
        if (g.kind == GateKind::U3) {
            // (RZ(c) RY(b) RZ(a))^-1 = RZ(-a) RY(-b) RZ(-c)
            const std::vector<double> inv{-p[2], -p[1], -p[0]};
            apply_gate(s, g, inv);
        } else {
            const std::vector<double> inv{-p[0], -p[1], -p[2]};
            apply_gate(s, g, inv);
        }
        INFO(gate_name(g.kind));
        CHECK(testing::max_abs_diff(s, start) < 1e-10);
    }
}

TEST_CASE("RZZ gates commute", "[statevector][property]") {
    Rng rng(77);
    std::uniform_int_distribution<std::size_t> qubit(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto start = testing::random_state(5, rng);
        std::size_t a = qubit(rng), b = qubit(rng), c = qubit(rng), d = qubit(rng);
        if (a == b || c == d) {
            continue;
        }
        const auto p = testing::random_params(2, rng);
        auto s1 = start;
        apply_gate(s1, Gate::rzz(a, b, 0), p);
        apply_gate(s1, Gate::rzz(c, d, 1), p);
        auto s2 = start;
        apply_gate(s2, Gate::rzz(c, d, 1), p);
        apply_gate(s2, Gate::rzz(a, b, 0), p);
        CHECK(testing::max_abs_diff(s1, s2) < 1e-12);
    }
}
