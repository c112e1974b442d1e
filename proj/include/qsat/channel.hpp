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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsat/densesim.hpp"
#include "qsat/instance.hpp"
#include "qsat/observables.hpp"

namespace qsat {

/// Λ_q(m) = (I_q / 2) ⊗ tr_q[m]. Accepts any square operator.
Matrix twirl(const Matrix &m, int q, int n);
DensityMatrix twirl(const DensityMatrix &rho, int q);

/// T_α(m) = (1−Φ) m (1−Φ) + ½Λ_i(Φ m Φ) + ½Λ_j(Φ m Φ). Linear in m.
Matrix apply_clause_channel(const Matrix &m, const Clause &clause, int n);
DensityMatrix apply_clause_channel(const DensityMatrix &rho, const Clause &clause);

/// T(m) = (1/L) Σ_α T_α(m), summed in clause order.
Matrix apply_step_channel(const Matrix &m, const Instance &inst);
DensityMatrix apply_step_channel(const DensityMatrix &rho, const Instance &inst);

struct StepObservables {
    double tr_h = 0.0;
    double tr_s = 0.0;
    double tr_s2 = 0.0;
    double tr_pi0 = 0.0;
};

/// Operators tracked along an evolution; built once per instance.
struct TrackedOperators {
    HermitianOp h;
    HermitianOp s;
    HermitianOp s2;
    HermitianOp pi0;

    static TrackedOperators for_instance(const Instance &inst);
    StepObservables measure(const Matrix &rho) const;
};

struct EvolutionSeries {
    std::vector<StepObservables> steps;  // entry t describes ρ_t, t = 0..T
    std::map<int, DensityMatrix> snapshots;
};

struct EvolveOptions {
    std::vector<int> snapshot_steps;
    int resymmetrize_every = 100;
    double drift_limit = 1e-6;
};

EvolutionSeries evolve(const DensityMatrix &rho0, const Instance &inst, int steps,
                       const EvolveOptions &options = {});

/// CSV with header `t,trH,trS,trS2,trPi0`, 17 significant digits.
std::string series_to_csv(const EvolutionSeries &series);

struct DualResidual {
    int clause = 0;
    int sample = 0;
    ClauseForm form = ClauseForm::Arbitrary;  // in the hidden basis
    double residual_s = 0.0;
    double residual_s2 = 0.0;
    bool enforced = false;  // true for Type I / Type II, where the identity must hold
};

/// For each clause and sample state compares tr[A·T_α(ρ)] with tr[(A + δ_A)ρ] for
/// A ∈ {Ŝ, Ŝ²}. δ follows the hidden-basis clause form: Type I uses δ_Ŝ = 0,
/// δ_Ŝ² = 2Φ; Type II uses δ_Ŝ = Φ, δ_Ŝ² = −2Φ + 2Σ_{k≠i,j}σz_kΦ. Other forms are
/// reported against the Type I reference and left unenforced.
std::vector<DualResidual> dual_residuals(const Instance &inst, std::span<const DensityMatrix> samples);

}  // namespace qsat
