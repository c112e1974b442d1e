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

#include "qsat/trajectory.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <thread>

#include "qsat/errors.hpp"
#include "qsat/observables.hpp"

namespace qsat {

namespace {

constexpr int kChunkSize = 64;

struct Stepper {
    const Instance &inst;
    std::vector<Matrix4> projectors;

    explicit Stepper(const Instance &instance) : inst(instance) {
        if (inst.clauses.empty()) throw Error(ErrorCode::InvalidArgument, "instance has no clauses");
        projectors.reserve(inst.clauses.size());
        for (const Clause &c : inst.clauses) projectors.push_back(c.projector());
    }

    // Advances psi in place and returns {outcome, clause}.
    std::pair<int, int> step(Vector &psi, Rng &rng) const {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(projectors.size()) - 1);
        const int alpha = pick(rng);
        const Clause &c = inst.clauses[static_cast<std::size_t>(alpha)];

        Vector violated = psi;
        apply_two_qubit(violated, projectors[static_cast<std::size_t>(alpha)], c.i, c.j, inst.n);
        const double p1 = std::clamp(violated.squaredNorm(), 0.0, 1.0);
        int outcome = uniform01(rng) < p1 ? 1 : 0;

        Vector satisfied = psi - violated;
        double w1 = violated.squaredNorm();
        double w0 = satisfied.squaredNorm();
        // A branch below the floor only arises from rounding at a probability edge.
        if (outcome == 1 && w1 < kBranchNormFloor) outcome = 0;
        if (outcome == 0 && w0 < kBranchNormFloor) outcome = 1;
        if ((outcome == 1 ? w1 : w0) < kBranchNormFloor) {
            throw Error(ErrorCode::DegenerateBranch, "both measurement branches vanish");
        }

        if (outcome == 1) {
            psi = violated / std::sqrt(w1);
            const int target = uniform01(rng) < 0.5 ? c.i : c.j;
            apply_single_qubit(psi, haar_unitary(rng), target, inst.n);
            psi /= psi.norm();
        } else {
            psi = satisfied / std::sqrt(w0);
        }
        return {outcome, alpha};
    }
};

struct ChunkResult {
    std::vector<std::int64_t> n0;
    std::vector<std::int64_t> zeros;  // per step
    // sum and sum of squares per t for H, Ŝ, Ŝ².
    std::array<std::vector<double>, 3> sum;
    std::array<std::vector<double>, 3> sum_sq;
};

ObservableSeries finish(const std::vector<double> &sum, const std::vector<double> &sum_sq, int m) {
    ObservableSeries out;
    out.mean.resize(sum.size());
    out.sem.resize(sum.size());
    for (std::size_t t = 0; t < sum.size(); ++t) {
        const double mean = sum[t] / m;
        const double var = m > 1 ? std::max(0.0, (sum_sq[t] - m * mean * mean) / (m - 1)) : 0.0;
        out.mean[t] = mean;
        out.sem[t] = std::sqrt(var / m);
    }
    return out;
}

}  // namespace

Matrix2 haar_unitary(Rng &rng) {
    Vector2 a(standard_complex_gaussian(rng), standard_complex_gaussian(rng));
    Vector2 b(standard_complex_gaussian(rng), standard_complex_gaussian(rng));
    // Gram-Schmidt is QR with a positive real diagonal in R.
    a /= a.norm();
    b -= a.dot(b) * a;
    b -= a.dot(b) * a;
    b /= b.norm();
    Matrix2 u;
    u.col(0) = a;
    u.col(1) = b;
    return u;
}

StateVector sample_initial_state(int n, Rng &rng) {
    if (n < 1 || n > kMaxStateQubits) throw Error(ErrorCode::CapacityExceeded, "unsupported qubit count for a state vector");
    std::uniform_int_distribution<std::size_t> pick(0, dimension(n) - 1);
    return StateVector::basis(n, pick(rng));
}

StepResult trajectory_step(const StateVector &psi, const Instance &inst, Rng &rng) {
    if (psi.num_qubits() != inst.n) throw Error(ErrorCode::DimensionMismatch, "state and instance sizes differ");
    const Stepper stepper(inst);
    Vector v = psi.amplitudes();
    const auto [outcome, clause] = stepper.step(v, rng);
    return StepResult{StateVector(inst.n, std::move(v)), outcome, clause};
}

TrajectoryRecord run_trajectory(const Instance &inst, std::int64_t steps, std::uint64_t seed,
                                const TrajectoryOptions &options) {
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");
    if (inst.n > kMaxStateQubits) throw Error(ErrorCode::CapacityExceeded, "too many qubits for a state vector");
    const Stepper stepper(inst);
    Rng rng(seed);

    TrajectoryRecord rec;
    rec.steps = steps;
    rec.seed = seed;
    if (options.keep_history) rec.outcomes.reserve(static_cast<std::size_t>(steps));

    Vector psi = sample_initial_state(inst.n, rng).amplitudes();
    for (std::int64_t t = 0; t < steps; ++t) {
        if (options.observer) options.observer(t, StateVector(inst.n, psi));
        const int outcome = stepper.step(psi, rng).first;
        if (outcome == 0) ++rec.n0;
        if (options.keep_history) rec.outcomes.push_back(static_cast<std::uint8_t>(outcome));
    }
    if (options.observer) options.observer(steps, StateVector(inst.n, psi));
    if (options.keep_final_state) rec.final_state = StateVector(inst.n, std::move(psi));
    return rec;
}

EnsembleStats run_ensemble(const Instance &inst, std::int64_t steps, int trajectories, std::uint64_t master_seed,
                           const EnsembleOptions &options) {
    if (trajectories < 1) throw Error(ErrorCode::InvalidArgument, "ensemble needs at least one trajectory");
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");

    std::optional<std::array<HermitianOp, 3>> observed;
    if (options.track_observables) {
        observed = std::array<HermitianOp, 3>{build_hamiltonian(inst), hidden_total_spin(inst),
                                              hidden_total_spin_squared(inst)};
    }
    const auto series_len = static_cast<std::size_t>(steps) + 1;

    const int num_chunks = (trajectories + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(num_chunks));

    const auto run_chunk = [&](int chunk) {
        ChunkResult &res = chunks[static_cast<std::size_t>(chunk)];
        res.zeros.assign(static_cast<std::size_t>(steps), 0);
        if (observed) {
            for (int k = 0; k < 3; ++k) {
                res.sum[k].assign(series_len, 0.0);
                res.sum_sq[k].assign(series_len, 0.0);
            }
        }
        const int first = chunk * kChunkSize;
        const int last = std::min(trajectories, first + kChunkSize);
        for (int index = first; index < last; ++index) {
            TrajectoryOptions topt;
            topt.keep_history = true;
            if (observed) {
                topt.observer = [&](std::int64_t t, const StateVector &psi) {
                    for (int k = 0; k < 3; ++k) {
                        const double v = expectation((*observed)[k], psi);
                        res.sum[k][static_cast<std::size_t>(t)] += v;
                        res.sum_sq[k][static_cast<std::size_t>(t)] += v * v;
                    }
                };
            }
            const TrajectoryRecord rec =
                run_trajectory(inst, steps, derive_seed(master_seed, static_cast<std::uint64_t>(index)), topt);
            res.n0.push_back(rec.n0);
            for (std::size_t t = 0; t < rec.outcomes.size(); ++t) {
                if (rec.outcomes[t] == 0) ++res.zeros[t];
            }
        }
    };

    const int workers = std::clamp(options.workers, 1, num_chunks);
    if (workers == 1) {
        for (int chunk = 0; chunk < num_chunks; ++chunk) run_chunk(chunk);
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int chunk = next++; chunk < num_chunks; chunk = next++) run_chunk(chunk);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (std::thread &t : pool) t.join();
        for (const auto &e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    EnsembleStats stats;
    stats.trajectories = trajectories;
    stats.steps = steps;
    stats.master_seed = master_seed;
    stats.n0.reserve(static_cast<std::size_t>(trajectories));
    std::vector<std::int64_t> zeros(static_cast<std::size_t>(steps), 0);
    std::array<std::vector<double>, 3> sum, sum_sq;
    for (int k = 0; k < 3 && observed; ++k) {
        sum[k].assign(series_len, 0.0);
        sum_sq[k].assign(series_len, 0.0);
    }
    for (const ChunkResult &res : chunks) {
        stats.n0.insert(stats.n0.end(), res.n0.begin(), res.n0.end());
        for (std::size_t t = 0; t < zeros.size(); ++t) zeros[t] += res.zeros[t];
        for (int k = 0; k < 3 && observed; ++k) {
            for (std::size_t t = 0; t < series_len; ++t) {
                sum[k][t] += res.sum[k][t];
                sum_sq[k][t] += res.sum_sq[k][t];
            }
        }
    }

    double total = 0.0;
    for (std::int64_t v : stats.n0) total += static_cast<double>(v);
    stats.mean_n0 = total / trajectories;
    double ss = 0.0;
    for (std::int64_t v : stats.n0) ss += (static_cast<double>(v) - stats.mean_n0) * (static_cast<double>(v) - stats.mean_n0);
    stats.stddev_n0 = trajectories > 1 ? std::sqrt(ss / (trajectories - 1)) : 0.0;

    stats.zero_frequency.resize(zeros.size());
    for (std::size_t t = 0; t < zeros.size(); ++t) {
        stats.zero_frequency[t] = static_cast<double>(zeros[t]) / trajectories;
    }
    if (observed) {
        stats.h = finish(sum[0], sum_sq[0], trajectories);
        stats.s = finish(sum[1], sum_sq[1], trajectories);
        stats.s2 = finish(sum[2], sum_sq[2], trajectories);
    }
    return stats;
}

std::string ensemble_to_csv(const EnsembleStats &stats) {
    std::string out = "trajectory_index,N0\n";
    for (std::size_t k = 0; k < stats.n0.size(); ++k) {
        out += std::to_string(k) + "," + std::to_string(stats.n0[k]) + "\n";
    }
    return out;
}

}  // namespace qsat
