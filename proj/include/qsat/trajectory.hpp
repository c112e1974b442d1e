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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsat/densesim.hpp"
#include "qsat/instance.hpp"
#include "qsat/rng.hpp"

namespace qsat {

/// Haar-distributed single-qubit unitary: QR of a 2×2 complex Ginibre matrix with
/// the phases of R's diagonal moved into Q.
Matrix2 haar_unitary(Rng &rng);

/// Uniformly random computational basis state; the ensemble average is I/2^n.
StateVector sample_initial_state(int n, Rng &rng);

inline constexpr double kBranchNormFloor = 1e-14;

struct StepResult {
    StateVector state;
    int outcome = 0;  // 1 when the clause was found violated
    int clause = 0;
};

/// Measure a uniformly chosen clause. On outcome 1 the post-measurement state is
/// hit with a Haar unitary on one of the clause's qubits, chosen with probability ½.
StepResult trajectory_step(const StateVector &psi, const Instance &inst, Rng &rng);

struct TrajectoryRecord {
    std::int64_t n0 = 0;
    std::int64_t steps = 0;
    std::vector<std::uint8_t> outcomes;  // kept only on request
    std::optional<StateVector> final_state;
    std::uint64_t seed = 0;
};

struct TrajectoryOptions {
    bool keep_history = false;
    bool keep_final_state = false;
    // Called with (t, ψ_t) for t = 0..T, before step t is taken.
    std::function<void(std::int64_t, const StateVector &)> observer;
};

/// Start from `sample_initial_state`, take T steps, count zero outcomes.
/// The generator is `Rng(seed)`.
TrajectoryRecord run_trajectory(const Instance &inst, std::int64_t steps, std::uint64_t seed,
                                const TrajectoryOptions &options = {});

struct EnsembleOptions {
    int workers = 1;
    bool track_observables = false;
};

struct ObservableSeries {
    std::vector<double> mean;  // length T+1
    std::vector<double> sem;   // standard error of the mean
};

struct EnsembleStats {
    int trajectories = 0;
    std::int64_t steps = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::int64_t> n0;  // per trajectory, index order
    double mean_n0 = 0.0;
    double stddev_n0 = 0.0;
    std::vector<double> zero_frequency;  // length T
    // Filled when track_observables is set.
    ObservableSeries h, s, s2;
};

/// Trajectory k uses seed derive_seed(master_seed, k). Work is split into fixed
/// chunks reduced in index order, so the result never depends on `workers`.
EnsembleStats run_ensemble(const Instance &inst, std::int64_t steps, int trajectories,
                           std::uint64_t master_seed, const EnsembleOptions &options = {});

/// `trajectory_index,N0` rows.
std::string ensemble_to_csv(const EnsembleStats &stats);

}  // namespace qsat
