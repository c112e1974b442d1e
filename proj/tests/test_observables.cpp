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

#include <bit>
#include <random>

#include "oracles.hpp"
#include "qsat/errors.hpp"
#include "qsat/instance.hpp"
#include "qsat/observables.hpp"
#include "qsat/serialize.hpp"
#include "qsat/trajectory.hpp"

namespace qsat {
namespace {

TEST(Spin, TotalSpinAndSquare) {
    for (int n = 1; n <= 5; ++n) {
        const oracle::M s = oracle::total_spin(n);
        EXPECT_LT(oracle::max_abs(build_total_spin(n).matrix() - s), 1e-15);
        EXPECT_LT(oracle::max_abs(build_total_spin_squared(n).matrix() - s * s), 1e-12);
        for (int q = 0; q < n; ++q)
            EXPECT_LT(oracle::max_abs(build_sigma_z(q, n).matrix() - oracle::embed_one(oracle::paulis()[3], q, n)), 1e-15);
    }
    // |0...0> carries S = n.
    EXPECT_NEAR(build_total_spin(3).matrix()(0, 0).real(), 3.0, 0);
    EXPECT_NEAR(build_total_spin(3).matrix()(7, 7).real(), -3.0, 0);
}

TEST(Hamiltonian, SumOfEmbeddedProjectors) {
    const Instance inst = generate_planted_extended(4, 6, 0.5, 3);
    oracle::M h = oracle::M::Zero(16, 16);
    for (const Clause &c : inst.clauses) h += oracle::embed_two(c.amps * c.amps.adjoint(), c.i, c.j, 4);
    EXPECT_LT(oracle::max_abs(build_hamiltonian(inst).matrix() - h), 1e-14);
}

TEST(Spectrum, SingletInstance) {
    const Instance inst = load_instance(QSAT_FIXTURES "/singlet.json");
    const SpectralData sd = spectral_data(build_hamiltonian(inst));
    EXPECT_NEAR(sd.min_eigenvalue, 0.0, 1e-14);
    EXPECT_NEAR(sd.epsilon, 1.0, 1e-14);
    EXPECT_EQ(sd.ground_degeneracy, 3);
    // Ground space: |00>, |11>, triplet; projector = I - singlet.
    oracle::M expect = oracle::M::Identity(4, 4);
    expect(1, 1) = expect(2, 2) = 0.5;
    expect(1, 2) = expect(2, 1) = 0.5;
    EXPECT_LT(oracle::max_abs(sd.ground_projector.matrix() - expect), 1e-12);
}

TEST(Spectrum, GroundProjectorProperties) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance inst = generate_planted_restricted(4, 3 + static_cast<int>(seed % 4), seed);
        const HermitianOp h = build_hamiltonian(inst);
        const SpectralData sd = spectral_data(h);
        const Matrix &p = sd.ground_projector.matrix();
        EXPECT_LT(max_abs(p * p - p), 1e-10);
        EXPECT_NEAR(p.trace().real(), sd.ground_degeneracy, 1e-10);
        EXPECT_LT(max_abs(h.matrix() * p), 1e-9);
        EXPECT_GE(sd.ground_degeneracy, 2);  // |0000> and |1111> both satisfy Type I clauses
        EXPECT_GT(sd.epsilon, kZeroTolerance);
    }
}

TEST(Spectrum, AllZeroHamiltonianIsDegenerate) {
    EXPECT_THROW(spectral_data(HermitianOp::zero(2)), Error);
}

TEST(LowEnergy, WeightBelowThreshold) {
    const Instance inst = load_instance(QSAT_FIXTURES "/singlet.json");
    const HermitianOp h = build_hamiltonian(inst);
    EXPECT_NEAR(low_energy_weight(DensityMatrix::maximally_mixed(2), h, 0.5), 0.75, 1e-12);
    EXPECT_NEAR(low_energy_weight(DensityMatrix::maximally_mixed(2), h, 2.0), 1.0, 1e-12);
    EXPECT_NEAR(projector_below(h, 0.5).matrix().trace().real(), 3.0, 1e-12);
}

TEST(Hidden, OperatorsAreConjugated) {
    Rng rng(6);
    Instance inst = generate_planted_restricted(3, 3, 1);
    std::vector<Matrix2> basis;
    for (int q = 0; q < 3; ++q) basis.push_back(haar_unitary(rng));
    inst = conjugate_instance(inst, basis);
    const oracle::M v = product_operator(*inst.planted_basis);
    const oracle::M s = oracle::total_spin(3);
    EXPECT_LT(oracle::max_abs(hidden_total_spin(inst).matrix() - v * s * v.adjoint()), 1e-12);
    EXPECT_LT(oracle::max_abs(hidden_total_spin_squared(inst).matrix() - v * s * s * v.adjoint()), 1e-11);
    EXPECT_LT(oracle::max_abs(hidden_sigma_z(inst, 2).matrix() -
                              v * oracle::embed_one(oracle::paulis()[3], 2, 3) * v.adjoint()),
              1e-12);
    // The planted state is the +n eigenvector of the hidden spin.
    EXPECT_NEAR(expectation(hidden_total_spin(inst), planted_state(inst)), 3.0, 1e-12);
}

}  // namespace
}  // namespace qsat
