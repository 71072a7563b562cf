// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc1sim/qsim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "dqc1sim/errors.h"
#include "dqc1sim/numtheory.h"

using namespace dqc1sim;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix ket(std::size_t d, std::size_t i) {
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(d), 1);
    v(static_cast<Eigen::Index>(i), 0) = 1.0;
    return v;
}

Matrix plus_state() {
    Matrix m = Matrix::Constant(2, 2, 0.5);
    return m;
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(UnitarySpec, ModMulPermutation) {
    Matrix m = as_dense(UnitarySpec::mod_mul(2, 3));
    Matrix expect = Matrix::Zero(3, 3);
    expect(0, 0) = 1.0;
    expect(2, 1) = 1.0;
    expect(1, 2) = 1.0;
    EXPECT_EQ(max_abs_diff(m, expect), 0.0);
    EXPECT_EQ(kind_of([] { UnitarySpec::mod_mul(3, 15); }), ErrorKind::NotCoprime);
}

TEST(UnitarySpec, DiagonalAndScalarPhase) {
    Matrix d = as_dense(UnitarySpec::diagonal_phases({0.0, kPi}));
    EXPECT_NEAR(std::abs(d(0, 0) - Complex(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d(1, 1) - Complex(-1, 0)), 0.0, 1e-15);
    Matrix s = as_dense(UnitarySpec::scalar_phase(kPi, UnitarySpec::identity(2)));
    EXPECT_LT(max_abs_diff(s, -Matrix::Identity(2, 2)), 1e-15);
}

TEST(UnitarySpec, DenseRejectsNonUnitary) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = 0.1;
    EXPECT_EQ(kind_of([&] { UnitarySpec::dense(m); }), ErrorKind::NotUnitary);
    EXPECT_EQ(kind_of([] { as_dense(UnitarySpec::mod_mul(2, 101)); }), ErrorKind::DimTooLarge);
}

TEST(TraceOf, Examples) {
    EXPECT_EQ(trace_of(UnitarySpec::identity(8)), Complex(8, 0));
    EXPECT_EQ(trace_of(UnitarySpec::mod_mul(2, 15)), Complex(1, 0));
    EXPECT_NEAR(std::abs(trace_of(UnitarySpec::diagonal_phases({0.0, kPi}))), 0.0, 1e-15);
}

TEST(TraceOf, ModMulMatchesDenseFixedPoints) {
    for (u64 n : {15u, 21u, 33u, 35u}) {
        for (u64 a = 2; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            auto u = UnitarySpec::mod_mul(a, n);
            EXPECT_NEAR(std::abs(trace_of(u) - as_dense(u).trace()), 0.0, 1e-12);
        }
    }
}

TEST(Gates, SwapControlledPartialTrace) {
    Matrix v = swap_gate(2) * kron(ket(2, 0), ket(2, 1));
    EXPECT_EQ(max_abs_diff(v, kron(ket(2, 1), ket(2, 0))), 0.0);

    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    v = controlled(x) * kron(ket(2, 1), ket(2, 0));
    EXPECT_EQ(max_abs_diff(v, kron(ket(2, 1), ket(2, 1))), 0.0);

    std::mt19937_64 rng(3);
    Matrix ra = random_density(3, rng);
    Matrix rb = random_density(4, rng);
    Matrix ab = kron(ra, rb);
    EXPECT_LT(max_abs_diff(partial_trace(ab, 3, 4, Subsystem::B), ra), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(ab, 3, 4, Subsystem::A), rb), 1e-14);
}

TEST(DensityMatrix, Validation) {
    Matrix m = Matrix::Identity(2, 2);
    EXPECT_EQ(kind_of([&] { DensityMatrix::make(m); }), ErrorKind::NotDensityMatrix);
    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_EQ(kind_of([&] { DensityMatrix::make(neg); }), ErrorKind::NotDensityMatrix);
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(5));
    EXPECT_NEAR(std::abs(DensityMatrix::maximally_mixed(5).matrix().trace() - Complex(1, 0)), 0.0, 1e-15);
}

TEST(RandomGenerators, ProduceValidObjects) {
    std::mt19937_64 rng(11);
    for (std::size_t d = 1; d <= 6; d++) {
        EXPECT_LT(unitarity_error(random_unitary(d, rng)), 1e-12);
        EXPECT_NO_THROW(DensityMatrix::make(random_density(d, rng)));
        Matrix u = random_unitary(d, rng);
        Matrix rho = random_density_in_eigenbasis(u, rng);
        EXPECT_NO_THROW(DensityMatrix::make(rho));
        // diagonal in U's eigenbasis <=> commutes with U
        EXPECT_LT(max_abs_diff(u * rho, rho * u), 1e-12);
    }
}

TEST(TauBB, ScalarUnitaryLeavesControlPlus) {
    auto one = DensityMatrix::make(Matrix::Identity(1, 1));
    for (double theta : {0.0, 0.3, 1.7, kPi}) {
        auto tau = build_tau_bb(UnitarySpec::diagonal_phases({theta}), one, one);
        EXPECT_LT(max_abs_diff(control_reduced_state(tau), plus_state()), 1e-15);
    }
}

TEST(TauBB, TracelessUnitaryDecoheresControl) {
    auto mixed = DensityMatrix::maximally_mixed(2);
    auto tau = build_tau_bb(UnitarySpec::diagonal_phases({0.0, kPi}), mixed, mixed);
    Matrix half = Matrix::Identity(2, 2) * 0.5;
    EXPECT_LT(max_abs_diff(control_reduced_state(tau), half), 1e-15);
}

TEST(TauBB, MatchesBlockFormulaAtD3) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 10; k++) {
        Matrix u = random_unitary(3, rng);
        auto rho = DensityMatrix::make(random_density(3, rng));
        auto sigma = DensityMatrix::make(random_density(3, rng));
        auto tau = build_tau_bb(UnitarySpec::dense(u), rho, sigma);
        EXPECT_LT(max_abs_diff(tau.matrix(), tau_bb_block_formula(u, rho.matrix(), sigma.matrix())), 1e-12);
    }
}

TEST(TauBB, IndependentBlockAssembly) {
    // Block layout written out by hand: [U r U^ (x) s, U r (x) s U^; r U^ (x) U s, r (x) U s U^] / 2.
    std::mt19937_64 rng(5);
    Matrix u = random_unitary(2, rng);
    Matrix r = random_density(2, rng);
    Matrix s = random_density(2, rng);
    Matrix ud = u.adjoint();
    Matrix expect(8, 8);
    expect.block(0, 0, 4, 4) = kron(u * r * ud, s);
    expect.block(0, 4, 4, 4) = kron(u * r, s * ud);
    expect.block(4, 0, 4, 4) = kron(r * ud, u * s);
    expect.block(4, 4, 4, 4) = kron(r, u * s * ud);
    expect *= 0.5;
    auto tau = build_tau_bb(UnitarySpec::dense(u), DensityMatrix::make(r), DensityMatrix::make(s));
    EXPECT_LT(max_abs_diff(tau.matrix(), expect), 1e-12);
}

TEST(TauCtrl, IdentityKeepsControlPlus) {
    std::mt19937_64 rng(2);
    auto state = DensityMatrix::make(random_density(4, rng));
    auto tau = build_tau_ctrl(Matrix::Identity(4, 4), state);
    EXPECT_LT(max_abs_diff(control_reduced_state(tau), plus_state()), 1e-15);
}

TEST(TauCtrl, EqualsBlackBoxOnEigenbasisStates) {
    std::mt19937_64 rng(23);
    for (std::size_t d = 1; d <= 4; d++) {
        Matrix u = random_unitary(d, rng);
        auto rho = DensityMatrix::make(random_density_in_eigenbasis(u, rng));
        auto sigma = DensityMatrix::make(random_density_in_eigenbasis(u, rng));
        auto bb = build_tau_bb(UnitarySpec::dense(u), rho, sigma);
        auto ctrl = build_tau_ctrl(kron(u, u.adjoint()), DensityMatrix::make(kron(rho.matrix(), sigma.matrix())));
        EXPECT_LT(max_abs_diff(bb.matrix(), ctrl.matrix()), 1e-12);
    }
}

TEST(TauCtrl, DiffersOffEigenbasis) {
    std::mt19937_64 rng(29);
    Matrix u = random_unitary(2, rng);
    auto rho = DensityMatrix::make(random_density(2, rng));
    auto sigma = DensityMatrix::make(random_density(2, rng));
    auto bb = build_tau_bb(UnitarySpec::dense(u), rho, sigma);
    auto ctrl = build_tau_ctrl(kron(u, u.adjoint()), DensityMatrix::make(kron(rho.matrix(), sigma.matrix())));
    EXPECT_GT(max_abs_diff(bb.matrix(), ctrl.matrix()), 1e-3);
    // The control marginals still agree: both carry tr[U rho] tr[sigma U^dag].
    EXPECT_LT(max_abs_diff(control_reduced_state(bb), control_reduced_state(ctrl)), 1e-12);
}

TEST(ControlCoherence, Examples) {
    auto mixed15 = DensityMatrix::maximally_mixed(15);
    auto tau = build_tau_bb(UnitarySpec::mod_mul(2, 15), mixed15, mixed15);
    EXPECT_NEAR(std::abs(control_coherence(tau) - Complex(1.0 / 225.0, 0.0)), 0.0, 1e-12);

    auto mixed3 = DensityMatrix::maximally_mixed(3);
    tau = build_tau_bb(UnitarySpec::identity(3), mixed3, mixed3);
    EXPECT_NEAR(std::abs(control_coherence(tau) - Complex(1, 0)), 0.0, 1e-12);

    std::mt19937_64 rng(31);
    Matrix u = random_unitary(4, rng);
    Matrix r = random_density(4, rng);
    Matrix s = random_density(4, rng);
    tau = build_tau_bb(UnitarySpec::dense(u), DensityMatrix::make(r), DensityMatrix::make(s));
    Complex expect = (u * r).trace() * (s * u.adjoint()).trace();
    EXPECT_NEAR(std::abs(control_coherence(tau) - expect), 0.0, 1e-12);
}

TEST(TauBB, RejectsMismatchedDimensions) {
    auto r2 = DensityMatrix::maximally_mixed(2);
    auto r3 = DensityMatrix::maximally_mixed(3);
    EXPECT_EQ(kind_of([&] { build_tau_bb(UnitarySpec::identity(2), r2, r3); }), ErrorKind::DimMismatch);
    auto r50 = DensityMatrix::maximally_mixed(50);
    EXPECT_EQ(kind_of([&] { build_tau_bb(UnitarySpec::identity(50), r50, r50); }), ErrorKind::DimTooLarge);
}
