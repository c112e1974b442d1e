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

#include "qsat/densesim.hpp"
#include "qsat/instance.hpp"

namespace qsat {

inline constexpr double kZeroTolerance = 1e-10;

/// Ŝ = Σ_q σz_q with σz|0⟩ = +|0⟩; diagonal with entry n − 2·popcount(x).
HermitianOp build_total_spin(int n);

/// Ŝ² = Σ_{q,r} σz_q σz_r.
HermitianOp build_total_spin_squared(int n);

/// σz on qubit q, everything else identity.
HermitianOp build_sigma_z(int q, int n);

/// H = Σ_α Φ_α.
HermitianOp build_hamiltonian(const Instance &inst);

// The same operators expressed in the instance's hidden (planted) basis,
// V·A·V† with V = ⊗_q v_q. Without a planted basis these are the plain versions.
HermitianOp hidden_total_spin(const Instance &inst);
HermitianOp hidden_total_spin_squared(const Instance &inst);
HermitianOp hidden_sigma_z(const Instance &inst, int q);

struct SpectralData {
    RealVector eigenvalues;  // ascending
    double min_eigenvalue = 0.0;
    double epsilon = 0.0;  // smallest eigenvalue ≥ zero_tol
    int ground_degeneracy = 0;
    HermitianOp ground_projector = HermitianOp::zero(0);
};

SpectralData spectral_data(const HermitianOp &h, double zero_tol = kZeroTolerance);

/// Projector onto eigenvectors of h with eigenvalue strictly below `threshold`.
HermitianOp projector_below(const HermitianOp &h, double threshold);

/// tr[Π ρ] with Π = projector_below(h, threshold).
double low_energy_weight(const DensityMatrix &rho, const HermitianOp &h, double threshold);

}  // namespace qsat
