// Copyright 2026 The qsat Authors
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

#include "qsat/densesim.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "qubit " + std::to_string(q) + " outside [0, " + std::to_string(n) + ")");
    }
}

void check_pair(int i, int j, int n) {
    check_qubit(i, n);
    check_qubit(j, n);
    if (i == j) {
        throw Error(ErrorCode::IndexOutOfRange, "two-qubit operator needs distinct qubits, got " +
                                                    std::to_string(i) + " twice");
    }
}

void check_rows(Eigen::Index rows, int n) {
    if (n < 0 || n > kMaxStateQubits || rows != static_cast<Eigen::Index>(dimension(n))) {
        throw Error(ErrorCode::DimensionMismatch,
                    "operand has " + std::to_string(rows) + " rows, expected 2^" + std::to_string(n));
    }
}

// Local index k = 2*b_i + b_j maps to these offsets from a base index with both bits clear.
std::array<std::size_t, 4> pair_offsets(int i, int j, int n) {
    const std::size_t mi = qubit_mask(i, n);
    const std::size_t mj = qubit_mask(j, n);
    return {0, mj, mi, mi | mj};
}

// Insert bit b at the position owned by qubit q of an n-qubit index.
std::size_t insert_bit(std::size_t x, std::size_t b, int q, int n) {
    const int p = n - 1 - q;
    const std::size_t low = x & ((std::size_t{1} << p) - 1);
    return ((x >> p) << (p + 1)) | (b << p) | low;
}

}  // namespace

StateVector::StateVector(int n, Vector amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_rows(amps_.size(), n);
    const double norm = amps_.norm();
    if (std::abs(norm - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "state vector norm " + std::to_string(norm) + " != 1");
    }
}

StateVector StateVector::basis(int n, std::size_t index) {
    if (n < 0 || n > kMaxStateQubits || index >= dimension(n)) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension(n)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(n, std::move(v));
}

DensityMatrix::DensityMatrix(int n, Matrix rho) : n_(n), rho_(std::move(rho)) {
    if (n > kMaxDensityQubits) {
        throw Error(ErrorCode::CapacityExceeded,
                    "density matrices are limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    check_rows(rho_.rows(), n);
    if (rho_.cols() != rho_.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix is not square");
    }
    if (hermiticity_defect(rho_) > 1e-10) {
        throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    }
    const Complex tr = rho_.trace();
    if (std::abs(tr - Complex(1.0)) > 1e-10) {
        throw Error(ErrorCode::InvalidArgument, "density matrix trace " + std::to_string(tr.real()) + " != 1");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    return DensityMatrix(n, Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::basis(int n, std::size_t index) { return pure(StateVector::basis(n, index)); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

HermitianOp::HermitianOp(int n, Matrix a) : n_(n), a_(std::move(a)) {
    check_rows(a_.rows(), n);
    if (a_.cols() != a_.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "operator is not square");
    }
    if (hermiticity_defect(a_) > 1e-10) {
        throw Error(ErrorCode::NotHermitian,
                    "operator deviates from its adjoint by " + std::to_string(hermiticity_defect(a_)));
    }
}

HermitianOp HermitianOp::zero(int n) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    return HermitianOp(n, Matrix::Zero(d, d));
}

HermitianOp HermitianOp::identity(int n) {
    const auto d = static_cast<Eigen::Index>(dimension(n));
    return HermitianOp(n, Matrix::Identity(d, d));
}

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Matrix &m) { return max_abs(m - m.adjoint()); }

Matrix kron_embed(const Matrix4 &op4, int i, int j, int n) {
    check_pair(i, j, n);
    const auto d = static_cast<Eigen::Index>(dimension(n));
    Matrix out = Matrix::Identity(d, d);
    apply_two_qubit_left(out, op4, i, j, n);
    return out;
}

Matrix embed_single(const Matrix2 &op2, int q, int n) {
    check_qubit(q, n);
    const auto d = static_cast<Eigen::Index>(dimension(n));
    Matrix out = Matrix::Identity(d, d);
    apply_single_qubit_left(out, op2, q, n);
    return out;
}

Matrix product_operator(std::span<const Matrix2> units) {
    Matrix out = Matrix::Identity(1, 1);
    for (const Matrix2 &u : units) {
        Matrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = out(r, c) * u;
            }
        }
        out = std::move(next);
    }
    return out;
}

void apply_two_qubit_left(Matrix &m, const Matrix4 &op, int i, int j, int n) {
    check_pair(i, j, n);
    check_rows(m.rows(), n);
    const auto off = pair_offsets(i, j, n);
    const std::size_t both = off[3];
    const std::size_t d = dimension(n);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Complex *col = m.col(c).data();
        for (std::size_t r = 0; r < d; ++r) {
            if (r & both) continue;
            const Complex a0 = col[r + off[0]], a1 = col[r + off[1]], a2 = col[r + off[2]],
                          a3 = col[r + off[3]];
            for (int k = 0; k < 4; ++k) {
                col[r + off[k]] = op(k, 0) * a0 + op(k, 1) * a1 + op(k, 2) * a2 + op(k, 3) * a3;
            }
        }
    }
}

void apply_two_qubit_right(Matrix &m, const Matrix4 &op, int i, int j, int n) {
    check_pair(i, j, n);
    check_rows(m.cols(), n);
    const auto off = pair_offsets(i, j, n);
    const std::size_t both = off[3];
    const std::size_t d = dimension(n);
    Matrix gathered(m.rows(), 4);
    for (std::size_t c = 0; c < d; ++c) {
        if (c & both) continue;
        for (int l = 0; l < 4; ++l) gathered.col(l) = m.col(static_cast<Eigen::Index>(c + off[l]));
        for (int k = 0; k < 4; ++k) {
            m.col(static_cast<Eigen::Index>(c + off[k])) = gathered * op.col(k);
        }
    }
}

void apply_two_qubit(Vector &v, const Matrix4 &op, int i, int j, int n) {
    check_pair(i, j, n);
    check_rows(v.size(), n);
    const auto off = pair_offsets(i, j, n);
    const std::size_t both = off[3];
    const std::size_t d = dimension(n);
    for (std::size_t r = 0; r < d; ++r) {
        if (r & both) continue;
        const Vector4 a(v(r + off[0]), v(r + off[1]), v(r + off[2]), v(r + off[3]));
        const Vector4 b = op * a;
        for (int k = 0; k < 4; ++k) v(static_cast<Eigen::Index>(r + off[k])) = b(k);
    }
}

void apply_single_qubit(Vector &v, const Matrix2 &op, int q, int n) {
    check_qubit(q, n);
    check_rows(v.size(), n);
    const std::size_t mq = qubit_mask(q, n);
    const std::size_t d = dimension(n);
    for (std::size_t r = 0; r < d; ++r) {
        if (r & mq) continue;
        const Complex a0 = v(r), a1 = v(r | mq);
        v(r) = op(0, 0) * a0 + op(0, 1) * a1;
        v(r | mq) = op(1, 0) * a0 + op(1, 1) * a1;
    }
}

void apply_single_qubit_left(Matrix &m, const Matrix2 &op, int q, int n) {
    check_qubit(q, n);
    check_rows(m.rows(), n);
    const std::size_t mq = qubit_mask(q, n);
    const std::size_t d = dimension(n);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Complex *col = m.col(c).data();
        for (std::size_t r = 0; r < d; ++r) {
            if (r & mq) continue;
            const Complex a0 = col[r], a1 = col[r | mq];
            col[r] = op(0, 0) * a0 + op(0, 1) * a1;
            col[r | mq] = op(1, 0) * a0 + op(1, 1) * a1;
        }
    }
}

void apply_single_qubit_right(Matrix &m, const Matrix2 &op, int q, int n) {
    check_qubit(q, n);
    check_rows(m.cols(), n);
    const std::size_t mq = qubit_mask(q, n);
    const std::size_t d = dimension(n);
    for (std::size_t c = 0; c < d; ++c) {
        if (c & mq) continue;
        const auto c0 = static_cast<Eigen::Index>(c), c1 = static_cast<Eigen::Index>(c | mq);
        const Vector a0 = m.col(c0), a1 = m.col(c1);
        m.col(c0) = a0 * op(0, 0) + a1 * op(1, 0);
        m.col(c1) = a0 * op(0, 1) + a1 * op(1, 1);
    }
}

Matrix partial_trace(const Matrix &rho, int q, int n) {
    check_qubit(q, n);
    check_rows(rho.rows(), n);
    const std::size_t half = dimension(n - 1);
    Matrix out(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(half));
    for (std::size_t c = 0; c < half; ++c) {
        const std::size_t c0 = insert_bit(c, 0, q, n), c1 = insert_bit(c, 1, q, n);
        for (std::size_t r = 0; r < half; ++r) {
            out(r, c) = rho(insert_bit(r, 0, q, n), c0) + rho(insert_bit(r, 1, q, n), c1);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, int q) {
    const int n = rho.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "partial trace needs at least two qubits");
    }
    return DensityMatrix(n - 1, partial_trace(rho.matrix(), q, n));
}

Matrix embed_maximally_mixed(const Matrix &reduced, int q, int n) {
    check_qubit(q, n);
    check_rows(reduced.rows(), n - 1);
    const std::size_t half = dimension(n - 1);
    const auto d = static_cast<Eigen::Index>(dimension(n));
    Matrix out = Matrix::Zero(d, d);
    for (std::size_t c = 0; c < half; ++c) {
        for (std::size_t r = 0; r < half; ++r) {
            const Complex v = 0.5 * reduced(r, c);
            out(insert_bit(r, 0, q, n), insert_bit(c, 0, q, n)) = v;
            out(insert_bit(r, 1, q, n), insert_bit(c, 1, q, n)) = v;
        }
    }
    return out;
}

EigenDecomposition hermitian_eig(const HermitianOp &a) {
    // The solver reads one triangle only; symmetrize so both contribute.
    const Matrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NotHermitian, "eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Complex trace_product(const Matrix &a, const Matrix &rho) {
    if (a.rows() != rho.cols() || a.cols() != rho.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "trace of product with mismatched shapes");
    }
    return a.cwiseProduct(rho.transpose()).sum();
}

namespace {

double checked_real(Complex z) {
    if (std::abs(z.imag()) > 1e-8) {
        throw Error(ErrorCode::NonRealExpectation,
                    "expectation has imaginary part " + std::to_string(z.imag()));
    }
    return z.real();
}

}  // namespace

double expectation(const HermitianOp &a, const DensityMatrix &rho) {
    if (a.dim() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
    return checked_real(trace_product(a.matrix(), rho.matrix()));
}

double expectation(const HermitianOp &a, const StateVector &psi) {
    if (a.dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
    return checked_real(psi.amplitudes().dot(a.matrix() * psi.amplitudes()));
}

bool is_unitary(const Matrix2 &u, double tol) {
    return max_abs(u.adjoint() * u - Matrix2::Identity()) <= tol;
}

}  // namespace qsat
