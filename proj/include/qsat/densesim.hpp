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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qsat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector4 = Eigen::Vector4cd;
using RealVector = Eigen::VectorXd;

// Dense storage limits. Density matrices are 4^n complex entries, state vectors 2^n.
inline constexpr int kMaxDensityQubits = 12;
inline constexpr int kMaxStateQubits = 20;

// Qubit 0 is the most significant bit of a basis-state index.
inline std::size_t dimension(int n) { return std::size_t{1} << n; }
inline std::size_t qubit_mask(int qubit, int n) { return std::size_t{1} << (n - 1 - qubit); }

/// Pure state on n qubits. Unit norm (1e-9) is checked on construction.
class StateVector {
  public:
    StateVector(int n, Vector amplitudes);

    static StateVector basis(int n, std::size_t index);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Vector &amplitudes() const { return amps_; }

  private:
    int n_;
    Vector amps_;
};

/// Mixed state on n qubits. Construction checks Hermiticity (1e-10) and unit trace
/// (1e-10); positivity is the caller's responsibility and can be checked with
/// `min_eigenvalue`.
class DensityMatrix {
  public:
    DensityMatrix(int n, Matrix rho);

    static DensityMatrix maximally_mixed(int n);
    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix basis(int n, std::size_t index);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
    const Matrix &matrix() const { return rho_; }

    double trace() const { return rho_.trace().real(); }
    double min_eigenvalue() const;

  private:
    int n_;
    Matrix rho_;
};

/// Hermitian operator on n qubits, ‖A − A†‖_max ≤ 1e-10.
class HermitianOp {
  public:
    HermitianOp(int n, Matrix a);

    static HermitianOp zero(int n);
    static HermitianOp identity(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(a_.rows()); }
    const Matrix &matrix() const { return a_; }

  private:
    int n_;
    Matrix a_;
};

struct EigenDecomposition {
    RealVector values;  // ascending
    Matrix vectors;     // columns are orthonormal eigenvectors
};

double max_abs(const Matrix &m);
double hermiticity_defect(const Matrix &m);

/// op4 on qubits (i, j), identity elsewhere. i is the left tensor factor.
Matrix kron_embed(const Matrix4 &op4, int i, int j, int n);
Matrix embed_single(const Matrix2 &op2, int q, int n);

/// ⊗_q units[q], with units[0] acting on qubit 0.
Matrix product_operator(std::span<const Matrix2> units);

// In-place qubit-local kernels. `left` computes (op ⊗ I)·m, `right` computes m·(op ⊗ I).
void apply_two_qubit_left(Matrix &m, const Matrix4 &op, int i, int j, int n);
void apply_two_qubit_right(Matrix &m, const Matrix4 &op, int i, int j, int n);
void apply_two_qubit(Vector &v, const Matrix4 &op, int i, int j, int n);
void apply_single_qubit(Vector &v, const Matrix2 &op, int q, int n);
void apply_single_qubit_left(Matrix &m, const Matrix2 &op, int q, int n);
void apply_single_qubit_right(Matrix &m, const Matrix2 &op, int q, int n);

/// tr_q of an operator on n qubits; the result acts on the remaining n−1 qubits
/// in their original order.
Matrix partial_trace(const Matrix &rho, int q, int n);
DensityMatrix partial_trace(const DensityMatrix &rho, int q);

/// Inverse placement of `partial_trace`: (I_q / 2) ⊗ reduced with the identity
/// factor re-inserted at position q.
Matrix embed_maximally_mixed(const Matrix &reduced, int q, int n);

EigenDecomposition hermitian_eig(const HermitianOp &a);

/// tr[A ρ] for any square A; no Hermiticity assumption.
Complex trace_product(const Matrix &a, const Matrix &rho);

double expectation(const HermitianOp &a, const DensityMatrix &rho);
double expectation(const HermitianOp &a, const StateVector &psi);

bool is_unitary(const Matrix2 &u, double tol);

}  // namespace qsat
