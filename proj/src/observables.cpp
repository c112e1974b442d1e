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

#include "qsat/observables.hpp"

#include <bit>
#include <string>

#include "qsat/errors.hpp"

namespace qsat {

namespace {

Matrix hidden(const Instance &inst, Matrix a) {
    if (!inst.planted_basis) return a;
    const Matrix v = product_operator(*inst.planted_basis);
    return v * a * v.adjoint();
}

Matrix spin_diagonal(int n, bool squared) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "total spin needs n >= 1");
    const std::size_t d = dimension(n);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t x = 0; x < d; ++x) {
        const double s = n - 2.0 * std::popcount(x);
        out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = squared ? s * s : s;
    }
    return out;
}

}  // namespace

HermitianOp build_total_spin(int n) { return HermitianOp(n, spin_diagonal(n, false)); }

HermitianOp build_total_spin_squared(int n) { return HermitianOp(n, spin_diagonal(n, true)); }

HermitianOp build_sigma_z(int q, int n) {
    Matrix2 z;
    z << 1.0, 0.0, 0.0, -1.0;
    return HermitianOp(n, embed_single(z, q, n));
}

HermitianOp build_hamiltonian(const Instance &inst) {
    const auto d = static_cast<Eigen::Index>(dimension(inst.n));
    Matrix h = Matrix::Zero(d, d);
    for (const Clause &c : inst.clauses) {
        // Accumulate Φ_α by applying it to the identity restricted to its block.
        Matrix phi = Matrix::Identity(d, d);
        apply_two_qubit_left(phi, c.projector(), c.i, c.j, inst.n);
        h += phi;
    }
    return HermitianOp(inst.n, std::move(h));
}

HermitianOp hidden_total_spin(const Instance &inst) {
    return HermitianOp(inst.n, hidden(inst, spin_diagonal(inst.n, false)));
}

HermitianOp hidden_total_spin_squared(const Instance &inst) {
    return HermitianOp(inst.n, hidden(inst, spin_diagonal(inst.n, true)));
}

HermitianOp hidden_sigma_z(const Instance &inst, int q) {
    return HermitianOp(inst.n, hidden(inst, build_sigma_z(q, inst.n).matrix()));
}

SpectralData spectral_data(const HermitianOp &h, double zero_tol) {
    const EigenDecomposition eig = hermitian_eig(h);
    SpectralData out;
    out.eigenvalues = eig.values;
    out.min_eigenvalue = eig.values(0);

    const Eigen::Index d = eig.values.size();
    Eigen::Index ground = 0;
    while (ground < d && eig.values(ground) < zero_tol) ++ground;
    if (ground == d) {
        throw Error(ErrorCode::DegenerateSpectrum, "no eigenvalue reaches " + std::to_string(zero_tol));
    }
    out.epsilon = eig.values(ground);
    out.ground_degeneracy = static_cast<int>(ground);
    const Matrix basis = eig.vectors.leftCols(ground);
    out.ground_projector = HermitianOp(h.num_qubits(), basis * basis.adjoint());
    return out;
}

HermitianOp projector_below(const HermitianOp &h, double threshold) {
    if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    const EigenDecomposition eig = hermitian_eig(h);
    Eigen::Index count = 0;
    while (count < eig.values.size() && eig.values(count) < threshold) ++count;
    const Matrix basis = eig.vectors.leftCols(count);
    return HermitianOp(h.num_qubits(), basis * basis.adjoint());
}

double low_energy_weight(const DensityMatrix &rho, const HermitianOp &h, double threshold) {
    return expectation(projector_below(h, threshold), rho);
}

}  // namespace qsat
