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

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <string>

#include "dqc1sim/errors.h"
#include "dqc1sim/numtheory.h"

namespace dqc1sim {

namespace {

void require_operator_dim(std::size_t dim, const char *what) {
    if (dim > kMaxOperatorDim) {
        throw Error(ErrorKind::DimTooLarge, std::string(what) + " would have dimension " + std::to_string(dim) +
                                                " > " + std::to_string(kMaxOperatorDim));
    }
}

Matrix plus_projector() {
    Matrix p(2, 2);
    p.setConstant(Complex(0.5, 0.0));
    return p;
}

}  // namespace

UnitarySpec UnitarySpec::dense(Matrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorKind::DimMismatch, "unitary must be a non-empty square matrix");
    }
    double err = unitarity_error(matrix);
    if (!(err <= kUnitarityTol)) {
        throw Error(ErrorKind::NotUnitary, "||U^dag U - I||_max = " + std::to_string(err));
    }
    return UnitarySpec(Dense{std::move(matrix)});
}

UnitarySpec UnitarySpec::mod_mul(std::uint64_t a, std::uint64_t n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "ModMul modulus must be positive");
    }
    if (gcd(a % n, n) != 1) {
        throw Error(ErrorKind::NotCoprime,
                    "ModMul(" + std::to_string(a) + ", " + std::to_string(n) + ") is not a permutation");
    }
    return UnitarySpec(ModMul{a % n, n});
}

UnitarySpec UnitarySpec::diagonal_phases(std::vector<double> phases) {
    if (phases.empty()) {
        throw Error(ErrorKind::InvalidArgument, "DiagonalPhases needs at least one phase");
    }
    for (double p : phases) {
        if (!std::isfinite(p)) {
            throw Error(ErrorKind::InvalidArgument, "phase is not finite");
        }
    }
    return UnitarySpec(DiagonalPhases{std::move(phases)});
}

UnitarySpec UnitarySpec::identity(std::size_t dim) {
    return diagonal_phases(std::vector<double>(dim, 0.0));
}

UnitarySpec UnitarySpec::scalar_phase(double theta, UnitarySpec base) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorKind::InvalidArgument, "global phase is not finite");
    }
    return UnitarySpec(ScalarPhase{theta, std::make_shared<const UnitarySpec>(std::move(base))});
}

std::size_t UnitarySpec::dim() const {
    struct Visitor {
        std::size_t operator()(const Dense &d) const {
            return static_cast<std::size_t>(d.matrix.rows());
        }
        std::size_t operator()(const ModMul &m) const {
            return static_cast<std::size_t>(m.n);
        }
        std::size_t operator()(const DiagonalPhases &d) const {
            return d.phases.size();
        }
        std::size_t operator()(const ScalarPhase &s) const {
            return s.base->dim();
        }
    };
    return std::visit(Visitor{}, v_);
}

Complex UnitarySpec::diagonal(std::size_t x) const {
    struct Visitor {
        std::size_t x;
        Complex operator()(const Dense &d) const {
            return d.matrix(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x));
        }
        Complex operator()(const ModMul &m) const {
            return mul_mod(m.a, x, m.n) == x ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        }
        Complex operator()(const DiagonalPhases &d) const {
            return std::polar(1.0, d.phases[x]);
        }
        Complex operator()(const ScalarPhase &s) const {
            return std::polar(1.0, s.theta) * s.base->diagonal(x);
        }
    };
    return std::visit(Visitor{x}, v_);
}

Matrix as_dense(const UnitarySpec &u) {
    std::size_t d = u.dim();
    if (d > kMaxDenseDim) {
        throw Error(ErrorKind::DimTooLarge,
                    "refusing to densify a " + std::to_string(d) + "-dimensional unitary (limit " +
                        std::to_string(kMaxDenseDim) + ")");
    }
    struct Visitor {
        std::size_t d;
        Matrix operator()(const UnitarySpec::Dense &m) const {
            return m.matrix;
        }
        Matrix operator()(const UnitarySpec::ModMul &m) const {
            Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
            for (std::size_t x = 0; x < d; x++) {
                out(static_cast<Eigen::Index>(mul_mod(m.a, x, m.n)), static_cast<Eigen::Index>(x)) = 1.0;
            }
            return out;
        }
        Matrix operator()(const UnitarySpec::DiagonalPhases &m) const {
            Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
            for (std::size_t x = 0; x < d; x++) {
                out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = std::polar(1.0, m.phases[x]);
            }
            return out;
        }
        Matrix operator()(const UnitarySpec::ScalarPhase &m) const {
            return std::polar(1.0, m.theta) * as_dense(*m.base);
        }
    };
    return std::visit(Visitor{d}, u.variant());
}

Complex trace_of(const UnitarySpec &u) {
    if (const auto *m = std::get_if<UnitarySpec::ModMul>(&u.variant())) {
        // Fixed points of x -> a*x mod N.
        std::uint64_t fixed = 0;
        for (std::uint64_t x = 0; x < m->n; x++) {
            fixed += mul_mod(m->a, x, m->n) == x;
        }
        return Complex(static_cast<double>(fixed), 0.0);
    }
    Complex total = 0.0;
    for (std::size_t x = 0; x < u.dim(); x++) {
        total += u.diagonal(x);
    }
    return total;
}

DensityMatrix DensityMatrix::make(Matrix entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw Error(ErrorKind::NotDensityMatrix, "density matrix must be a non-empty square matrix");
    }
    double herm = max_abs_diff(entries, dagger(entries));
    if (!(herm <= kDensityTol)) {
        throw Error(ErrorKind::NotDensityMatrix, "not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    Complex tr = entries.trace();
    if (!(std::abs(tr - Complex(1.0, 0.0)) <= kDensityTol)) {
        throw Error(ErrorKind::NotDensityMatrix, "trace is " + std::to_string(tr.real()) + " + " +
                                                     std::to_string(tr.imag()) + "i, expected 1");
    }
    Matrix herm_part = (entries + dagger(entries)) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm_part, Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    if (!(min_eig >= -kPsdTol)) {
        throw Error(ErrorKind::NotDensityMatrix, "negative eigenvalue " + std::to_string(min_eig));
    }
    return DensityMatrix(std::move(entries));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    auto d = static_cast<Eigen::Index>(dim);
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
    auto d = static_cast<Eigen::Index>(dim);
    Matrix m = Matrix::Zero(d, d);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Vector &psi) {
    Vector unit = psi / psi.norm();
    return make(unit * unit.adjoint());
}

Matrix dagger(const Matrix &m) {
    return m.adjoint();
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimMismatch, "shape mismatch in comparison");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix &m) {
    Matrix id = Matrix::Identity(m.rows(), m.cols());
    return max_abs_diff(m.adjoint() * m, id);
}

Matrix kron(const Matrix &a, const Matrix &b) {
    require_operator_dim(static_cast<std::size_t>(a.rows() * b.rows()), "kron");
    require_operator_dim(static_cast<std::size_t>(a.cols() * b.cols()), "kron");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_trace(const Matrix &m, std::size_t dim_a, std::size_t dim_b, Subsystem traced) {
    auto da = static_cast<Eigen::Index>(dim_a);
    auto db = static_cast<Eigen::Index>(dim_b);
    if (m.rows() != da * db || m.cols() != da * db) {
        throw Error(ErrorKind::DimMismatch, "partial_trace: operator is not on A ⊗ B");
    }
    if (traced == Subsystem::B) {
        Matrix out = Matrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; i++) {
            for (Eigen::Index j = 0; j < da; j++) {
                out(i, j) = m.block(i * db, j * db, db, db).trace();
            }
        }
        return out;
    }
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index k = 0; k < da; k++) {
        out += m.block(k * db, k * db, db, db);
    }
    return out;
}

Matrix controlled(const Matrix &u) {
    if (u.rows() != u.cols()) {
        throw Error(ErrorKind::DimMismatch, "controlled: gate must be square");
    }
    require_operator_dim(static_cast<std::size_t>(2 * u.rows()), "controlled gate");
    Eigen::Index d = u.rows();
    Matrix out = Matrix::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d).setIdentity();
    out.bottomRightCorner(d, d) = u;
    return out;
}

Matrix swap_gate(std::size_t d) {
    require_operator_dim(d * d, "swap gate");
    auto n = static_cast<Eigen::Index>(d);
    Matrix s = Matrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            s(j * n + i, i * n + j) = 1.0;
        }
    }
    return s;
}

DensityMatrix build_tau_bb(const UnitarySpec &u, const DensityMatrix &rho, const DensityMatrix &sigma) {
    std::size_t d = u.dim();
    if (rho.dim() != d || sigma.dim() != d) {
        throw Error(ErrorKind::DimMismatch, "build_tau_bb: register dimensions must match U");
    }
    require_operator_dim(2 * d * d, "black-box DQC1 state");
    auto n = static_cast<Eigen::Index>(d);

    Matrix u_dense = as_dense(u);

    Matrix id2 = Matrix::Identity(2, 2);
    Matrix id_d = Matrix::Identity(n, n);
    Matrix cswap = controlled(swap_gate(d));
    Matrix u_on_first = kron(id2, kron(u_dense, id_d));
    Matrix circuit = cswap * u_on_first * cswap;

    Matrix initial = kron(plus_projector(), kron(rho.matrix(), sigma.matrix()));
    return DensityMatrix::make(circuit * initial * circuit.adjoint());
}

Matrix tau_bb_block_formula(const Matrix &u, const Matrix &rho, const Matrix &sigma) {
    Eigen::Index d = u.rows();
    Matrix ud = u.adjoint();
    Matrix out(2 * d * d, 2 * d * d);
    Eigen::Index b = d * d;
    out.block(0, 0, b, b) = kron(u * rho * ud, sigma);
    out.block(0, b, b, b) = kron(u * rho, sigma * ud);
    out.block(b, 0, b, b) = kron(rho * ud, u * sigma);
    out.block(b, b, b, b) = kron(rho, u * sigma * ud);
    return out * 0.5;
}

DensityMatrix build_tau_ctrl(const Matrix &v, const DensityMatrix &state) {
    if (v.rows() != v.cols() || static_cast<std::size_t>(v.rows()) != state.dim()) {
        throw Error(ErrorKind::DimMismatch, "build_tau_ctrl: V and register state dimensions differ");
    }
    require_operator_dim(2 * state.dim(), "controlled-V state");
    Matrix gate = controlled(v.adjoint());
    Matrix initial = kron(plus_projector(), state.matrix());
    return DensityMatrix::make(gate * initial * gate.adjoint());
}

Matrix control_reduced_state(const DensityMatrix &tau) {
    if (tau.dim() % 2 != 0) {
        throw Error(ErrorKind::DimMismatch, "state does not contain a control qubit");
    }
    return partial_trace(tau.matrix(), 2, tau.dim() / 2, Subsystem::B);
}

Complex control_coherence(const DensityMatrix &tau) {
    return 2.0 * control_reduced_state(tau)(0, 1);
}

Matrix random_unitary(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    auto n = static_cast<Eigen::Index>(d);
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index j = 0; j < n; j++) {
        Complex diag = r(j, j);
        double mag = std::abs(diag);
        if (mag > 0) {
            q.col(j) *= diag / mag;
        }
    }
    return q;
}

Matrix random_density(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    auto n = static_cast<Eigen::Index>(d);
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) * 0.5;
}

Matrix random_density_in_eigenbasis(const Matrix &u, std::mt19937_64 &rng) {
    // For a normal matrix the Schur form is diagonal and Q is an orthonormal
    // eigenbasis, which ComplexEigenSolver does not guarantee.
    Eigen::ComplexSchur<Matrix> schur(u);
    const Matrix &q = schur.matrixU();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd w(u.rows());
    for (Eigen::Index i = 0; i < w.size(); i++) {
        w(i) = unif(rng) + 1e-3;
    }
    w /= w.sum();
    Matrix rho = q * w.cast<Complex>().asDiagonal() * q.adjoint();
    return (rho + rho.adjoint()) * 0.5;
}

}  // namespace dqc1sim
