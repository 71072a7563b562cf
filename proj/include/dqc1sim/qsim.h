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

#ifndef DQC1SIM_QSIM_H
#define DQC1SIM_QSIM_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <variant>
#include <vector>

namespace dqc1sim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest dimension `as_dense` will materialize.
inline constexpr std::size_t kMaxDenseDim = 64;
/// Largest total operator dimension for tensor products and oracle states.
inline constexpr std::size_t kMaxOperatorDim = 4096;

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kDensityTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// A d-dimensional unitary in one of several structured representations.
class UnitarySpec {
   public:
    struct Dense {
        Matrix matrix;
    };
    /// |x> -> |a*x mod N> on an N-level register.
    struct ModMul {
        std::uint64_t a;
        std::uint64_t n;
    };
    struct DiagonalPhases {
        std::vector<double> phases;
    };
    /// e^{i theta} * base.
    struct ScalarPhase {
        double theta;
        std::shared_ptr<const UnitarySpec> base;
    };
    using Variant = std::variant<Dense, ModMul, DiagonalPhases, ScalarPhase>;

    /// Throws NotUnitary unless ||U^dag U - I||_max <= 1e-10.
    static UnitarySpec dense(Matrix matrix);
    static UnitarySpec mod_mul(std::uint64_t a, std::uint64_t n);
    static UnitarySpec diagonal_phases(std::vector<double> phases);
    static UnitarySpec identity(std::size_t dim);
    static UnitarySpec scalar_phase(double theta, UnitarySpec base);

    std::size_t dim() const;
    /// <x|U|x>.
    Complex diagonal(std::size_t x) const;

    const Variant &variant() const {
        return v_;
    }

   private:
    explicit UnitarySpec(Variant v) : v_(std::move(v)) {
    }
    Variant v_;
};

/// Explicit d x d matrix; ModMul(a, N) has a 1 at (a*x mod N, x).
Matrix as_dense(const UnitarySpec &u);
Complex trace_of(const UnitarySpec &u);

/// Hermitian, unit-trace, positive semidefinite operator. Validated on
/// construction; never mutated afterwards.
class DensityMatrix {
   public:
    /// Throws NotDensityMatrix on violation of Hermiticity (1e-12),
    /// trace (1e-12) or positivity (min eigenvalue >= -1e-10).
    static DensityMatrix make(Matrix entries);
    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix basis_state(std::size_t dim, std::size_t index);
    static DensityMatrix pure(const Vector &psi);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const Matrix &matrix() const {
        return m_;
    }

   private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    }
    Matrix m_;
};

Matrix dagger(const Matrix &m);
double max_abs_diff(const Matrix &a, const Matrix &b);
double unitarity_error(const Matrix &m);

Matrix kron(const Matrix &a, const Matrix &b);

enum class Subsystem { A, B };

/// Traces out `traced` from an operator on A (dim_a) ⊗ B (dim_b).
Matrix partial_trace(const Matrix &m, std::size_t dim_a, std::size_t dim_b, Subsystem traced);

/// block-diag(I, U): U acts when the control qubit is |1>.
Matrix controlled(const Matrix &u);

/// S|phi>|psi> = |psi>|phi> on C^d ⊗ C^d.
Matrix swap_gate(std::size_t d);

/// State of control ⊗ register1 ⊗ register2 after evolving
/// |+><+| ⊗ rho ⊗ sigma through cSWAP, (U ⊗ I) on register 1, cSWAP.
/// Every gate is built as an explicit matrix; nothing is taken from the
/// closed form.
DensityMatrix build_tau_bb(const UnitarySpec &u, const DensityMatrix &rho, const DensityMatrix &sigma);

/// Closed-form block matrix of the black-box circuit state:
///   1/2 [ U rho U^dag ⊗ sigma     U rho ⊗ sigma U^dag   ]
///       [ rho U^dag ⊗ U sigma     rho ⊗ U sigma U^dag   ]
Matrix tau_bb_block_formula(const Matrix &u, const Matrix &rho, const Matrix &sigma);

/// State of control ⊗ register after |+><+| ⊗ state evolves under the
/// DQC1 controlled gate for V. The |1> branch carries V^dag, which is the
/// orientation in which control_coherence reads out tr[V state]; the result
/// is 1/2 [[s, s V], [V^dag s, V^dag s V]].
DensityMatrix build_tau_ctrl(const Matrix &v, const DensityMatrix &state);

/// Reduced 2x2 state of the control qubit (first tensor factor).
Matrix control_reduced_state(const DensityMatrix &tau);

/// 2 <0| Tr_registers(tau) |1>.
Complex control_coherence(const DensityMatrix &tau);

/// Haar-random unitary via QR of a complex Ginibre matrix.
Matrix random_unitary(std::size_t d, std::mt19937_64 &rng);
/// Random full-rank density matrix G G^dag / tr(G G^dag).
Matrix random_density(std::size_t d, std::mt19937_64 &rng);
/// Random density matrix diagonal in the eigenbasis of the unitary `u`.
Matrix random_density_in_eigenbasis(const Matrix &u, std::mt19937_64 &rng);

}  // namespace dqc1sim

#endif
