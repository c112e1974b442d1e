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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qsat/densesim.hpp"
#include "qsat/errors.hpp"
#include "qsat/rng.hpp"

namespace qsat {
namespace {

TEST(Embed, TwoQubitMatchesBruteForceForAllPairs) {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const Matrix4 op = oracle::random_matrix(4, rng);
                EXPECT_LT(oracle::max_abs(kron_embed(op, i, j, n) - oracle::embed_two(op, i, j, n)), 1e-14)
                    << "n=" << n << " pair " << i << "," << j;
            }
        }
    }
}

TEST(Embed, AdjacentPairIsKroneckerProduct) {
    std::mt19937_64 rng(3);
    const Matrix4 op = oracle::random_matrix(4, rng);
    const oracle::M expect = oracle::kron(oracle::kron(oracle::M::Identity(2, 2), op), oracle::M::Identity(2, 2));
    EXPECT_LT(oracle::max_abs(kron_embed(op, 1, 2, 4) - expect), 1e-14);
}

TEST(Embed, SingleQubitAndProductOperator) {
    std::mt19937_64 rng(5);
    std::vector<Matrix2> units;
    oracle::M expect = oracle::M::Identity(1, 1);
    for (int q = 0; q < 3; ++q) {
        units.push_back(oracle::random_matrix(2, rng));
        expect = oracle::kron(expect, units.back());
        EXPECT_LT(oracle::max_abs(embed_single(units.back(), q, 3) - oracle::embed_one(units.back(), q, 3)), 1e-14);
    }
    EXPECT_LT(oracle::max_abs(product_operator(units) - expect), 1e-12);
}

TEST(LocalKernels, AgreeWithFullMatrixProducts) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        const int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % (n - 1));
        if (j >= i) ++j;
        const Matrix4 op = oracle::random_matrix(4, rng);
        const Matrix2 u = oracle::random_matrix(2, rng);
        const oracle::M m = oracle::random_matrix(1 << n, rng);
        const oracle::M big = oracle::embed_two(op, i, j, n);
        const oracle::M one = oracle::embed_one(u, i, n);

        Matrix left = m, right = m;
        apply_two_qubit_left(left, op, i, j, n);
        apply_two_qubit_right(right, op, i, j, n);
        EXPECT_LT(oracle::max_abs(left - big * m), 1e-12);
        EXPECT_LT(oracle::max_abs(right - m * big), 1e-12);

        Matrix l1 = m, r1 = m;
        apply_single_qubit_left(l1, u, i, n);
        apply_single_qubit_right(r1, u, i, n);
        EXPECT_LT(oracle::max_abs(l1 - one * m), 1e-12);
        EXPECT_LT(oracle::max_abs(r1 - m * one), 1e-12);

        Vector v = m.col(0);
        Vector w = v;
        apply_two_qubit(v, op, i, j, n);
        apply_single_qubit(w, u, i, n);
        EXPECT_LT(oracle::max_abs(v - big * m.col(0)), 1e-12);
        EXPECT_LT(oracle::max_abs(w - one * m.col(0)), 1e-12);
    }
}

TEST(PartialTrace, MatchesIndexLoopAndTwirlIdentity) {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 4; ++n) {
        const oracle::M rho = oracle::random_density(n, rng);
        for (int q = 0; q < n; ++q) {
            const Matrix reduced = partial_trace(rho, q, n);
            EXPECT_LT(oracle::max_abs(reduced - oracle::partial_trace(rho, q, n)), 1e-14);
            EXPECT_LT(oracle::max_abs(embed_maximally_mixed(reduced, q, n) - oracle::pauli_twirl(rho, q, n)), 1e-14);
        }
    }
}

TEST(PartialTrace, ProductStateFactorizes) {
    Matrix2 a, b;
    a << 0.75, Complex(0, 0.25), Complex(0, -0.25), 0.25;
    b << 0.5, 0.5, 0.5, 0.5;
    const Matrix rho = oracle::kron(a, b);
    EXPECT_LT(oracle::max_abs(partial_trace(rho, 1, 2) - a), 1e-15);
    EXPECT_LT(oracle::max_abs(partial_trace(rho, 0, 2) - b), 1e-15);
}

TEST(StateVector, RejectsUnnormalizedAndWrongSize) {
    Vector v(4);
    v << 1, 1, 0, 0;
    EXPECT_THROW(StateVector(2, v), Error);
    EXPECT_THROW(StateVector(3, v.normalized()), Error);
    EXPECT_NO_THROW(StateVector(2, v.normalized()));
    const StateVector e = StateVector::basis(3, 5);
    EXPECT_EQ(e.amplitudes()(5), Complex(1, 0));
}

TEST(DensityMatrix, Validation) {
    Matrix m = Matrix::Identity(4, 4) / 4.0;
    EXPECT_NO_THROW(DensityMatrix(2, m));
    Matrix bad_trace = m * 2.0;
    EXPECT_THROW(DensityMatrix(2, bad_trace), Error);
    Matrix non_herm = m;
    non_herm(0, 1) = 0.1;
    try {
        DensityMatrix(2, non_herm);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
    try {
        DensityMatrix::maximally_mixed(kMaxDensityQubits + 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
    }
    EXPECT_NEAR(DensityMatrix::maximally_mixed(3).trace(), 1.0, 1e-15);
    EXPECT_NEAR(DensityMatrix::maximally_mixed(3).min_eigenvalue(), 0.125, 1e-14);
}

TEST(HermitianOp, RejectsNonHermitian) {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    EXPECT_THROW(HermitianOp(1, a), Error);
    a(1, 0) = 1.0;
    EXPECT_NO_THROW(HermitianOp(1, a));
}

TEST(Expectation, StateAndDensityAgree) {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 4;
        const StateVector psi(n, random_unit_vector(static_cast<Eigen::Index>(dimension(n)), rng));
        const oracle::M s = oracle::total_spin(n);
        const HermitianOp op(n, s);
        const double direct = (psi.amplitudes().adjoint() * s * psi.amplitudes())(0, 0).real();
        EXPECT_NEAR(expectation(op, psi), direct, 1e-12);
        EXPECT_NEAR(expectation(op, DensityMatrix::pure(psi)), direct, 1e-12);
    }
    EXPECT_THROW(expectation(HermitianOp::identity(2), DensityMatrix::maximally_mixed(3)), Error);
}

TEST(TraceProduct, MatchesExplicitTrace) {
    std::mt19937_64 rng(8);
    const oracle::M a = oracle::random_matrix(8, rng), b = oracle::random_matrix(8, rng);
    EXPECT_LT(std::abs(trace_product(a, b) - (a * b).trace()), 1e-11);
}

TEST(Eigen, DecompositionReconstructs) {
    Rng rng(9);
    for (int n = 1; n <= 4; ++n) {
        const DensityMatrix rho = random_density_matrix(n, rng);
        const EigenDecomposition ed = hermitian_eig(HermitianOp(n, rho.matrix()));
        const Matrix back = ed.vectors * ed.values.cast<Complex>().asDiagonal() * ed.vectors.adjoint();
        EXPECT_LT(max_abs(back - rho.matrix()), 1e-12);
        for (Eigen::Index k = 1; k < ed.values.size(); ++k) EXPECT_LE(ed.values(k - 1), ed.values(k));
        EXPECT_GE(ed.values(0), -1e-12);
    }
}

TEST(Unitary, Check) {
    Matrix2 h;
    h << 1, 1, 1, -1;
    EXPECT_FALSE(is_unitary(h, 1e-10));
    EXPECT_TRUE(is_unitary(h / std::sqrt(2.0), 1e-10));
}

TEST(RandomDensity, PropertiesHoldAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(seed % 4);
        const int rank = static_cast<int>(seed % 3);
        const DensityMatrix rho = random_density_matrix(n, rng, rank);
        EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
        EXPECT_GE(rho.min_eigenvalue(), -1e-12);
        EXPECT_LT(hermiticity_defect(rho.matrix()), 1e-14);
    }
}

}  // namespace
}  // namespace qsat
