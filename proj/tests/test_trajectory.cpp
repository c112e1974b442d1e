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

#include <cmath>

#include "oracles.hpp"
#include "qsat/channel.hpp"
#include "qsat/observables.hpp"
#include "qsat/serialize.hpp"
#include "qsat/trajectory.hpp"

namespace qsat {
namespace {

TEST(Haar, SamplesAreUnitary) {
    Rng rng(1);
    for (int k = 0; k < 200; ++k) EXPECT_TRUE(is_unitary(haar_unitary(rng), 1e-12));
}

TEST(Haar, SecondMomentMatchesTwirl) {
    Rng rng(2);
    std::mt19937_64 g(3);
    const oracle::M rho = oracle::random_density(1, g);
    oracle::M mean = oracle::M::Zero(2, 2);
    const int samples = 40000;
    for (int k = 0; k < samples; ++k) {
        const Matrix2 u = haar_unitary(rng);
        mean += u * rho * u.adjoint();
    }
    mean /= samples;
    EXPECT_LT(oracle::max_abs(mean - oracle::M::Identity(2, 2) / 2.0), 0.01);
}

TEST(InitialState, IsUniformOverBasis) {
    Rng rng(4);
    std::vector<int> counts(8, 0);
    for (int k = 0; k < 8000; ++k) {
        const StateVector psi = sample_initial_state(3, rng);
        int hits = 0;
        for (Eigen::Index b = 0; b < 8; ++b) {
            if (std::abs(psi.amplitudes()(b)) > 0.5) {
                ++counts[static_cast<std::size_t>(b)];
                ++hits;
            }
        }
        EXPECT_EQ(hits, 1);
    }
    for (int c : counts) EXPECT_NEAR(c, 1000, 5 * std::sqrt(1000.0 * 7 / 8));
}

TEST(Trajectory, PlantedSolutionNeverViolated) {
    const Instance inst = generate_planted_restricted(4, 5, 3);
    Rng rng(5);
    StateVector psi = planted_state(inst);
    for (int t = 0; t < 200; ++t) {
        StepResult r = trajectory_step(psi, inst, rng);
        EXPECT_EQ(r.outcome, 0);
        EXPECT_LT((r.state.amplitudes() - psi.amplitudes()).norm(), 1e-12);
        psi = r.state;
    }
}

TEST(Trajectory, CompletePairAlwaysHasSomeViolation) {
    const Instance inst = generate_no_instance(2, NoInstanceStyle::CompletePair, 1.0, 0);
    const TrajectoryRecord rec = run_trajectory(inst, 4000, 9, {.keep_history = true, .keep_final_state = false, .observer = {}});
    ASSERT_EQ(rec.outcomes.size(), 4000U);
    // Each step finds a violation with probability exactly 1/4.
    const double rate = 1.0 - static_cast<double>(rec.n0) / 4000.0;
    EXPECT_NEAR(rate, 0.25, 5 * std::sqrt(0.25 * 0.75 / 4000));
}

TEST(Trajectory, SameSeedSameRecord) {
    const Instance inst = generate_planted_extended(4, 6, 0.5, 1);
    const TrajectoryRecord a = run_trajectory(inst, 300, 42, {.keep_history = true, .keep_final_state = true, .observer = {}});
    const TrajectoryRecord b = run_trajectory(inst, 300, 42, {.keep_history = true, .keep_final_state = true, .observer = {}});
    EXPECT_EQ(a.n0, b.n0);
    EXPECT_EQ(a.outcomes, b.outcomes);
    EXPECT_EQ(a.final_state->amplitudes(), b.final_state->amplitudes());
    const TrajectoryRecord c = run_trajectory(inst, 300, 43, {.keep_history = false, .keep_final_state = true, .observer = {}});
    EXPECT_GT((a.final_state->amplitudes() - c.final_state->amplitudes()).norm(), 1e-6);
}

TEST(Trajectory, ObserverSeesEveryStep) {
    const Instance inst = generate_planted_restricted(3, 2, 1);
    std::vector<std::int64_t> seen;
    TrajectoryOptions opt;
    opt.observer = [&](std::int64_t t, const StateVector &psi) {
        seen.push_back(t);
        EXPECT_NEAR(psi.amplitudes().norm(), 1.0, 1e-12);
    };
    run_trajectory(inst, 10, 3, opt);
    ASSERT_EQ(seen.size(), 11U);
    for (std::int64_t t = 0; t <= 10; ++t) EXPECT_EQ(seen[static_cast<std::size_t>(t)], t);
}

TEST(Ensemble, ReproducesChannelStatistics) {
    const Instance inst = generate_planted_extended(3, 4, 0.5, 11);
    const int T = 15, M = 4000;
    EnsembleOptions opt;
    opt.track_observables = true;
    const EnsembleStats stats = run_ensemble(inst, T, M, 7, opt);
    const EvolutionSeries exact = evolve(DensityMatrix::maximally_mixed(3), inst, T);
    ASSERT_EQ(stats.zero_frequency.size(), static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        // Outcome at step t is zero with probability 1 - tr[H ρ_t]/L.
        const double p = 1.0 - exact.steps[t].tr_h / 4.0;
        const double se = std::sqrt(std::max(p * (1 - p), 1e-4) / M);
        EXPECT_NEAR(stats.zero_frequency[t], p, 5 * se) << t;
    }
    for (int t = 0; t <= T; ++t) {
        EXPECT_NEAR(stats.h.mean[t], exact.steps[t].tr_h, 5 * stats.h.sem[t] + 1e-9) << t;
        EXPECT_NEAR(stats.s.mean[t], exact.steps[t].tr_s, 5 * stats.s.sem[t] + 1e-9) << t;
        EXPECT_NEAR(stats.s2.mean[t], exact.steps[t].tr_s2, 5 * stats.s2.sem[t] + 1e-9) << t;
    }
}

TEST(Ensemble, WorkerCountDoesNotChangeResults) {
    const Instance inst = generate_planted_extended(4, 5, 0.3, 2);
    EnsembleOptions one{1, true}, four{4, true};
    const EnsembleStats a = run_ensemble(inst, 40, 300, 99, one);
    const EnsembleStats b = run_ensemble(inst, 40, 300, 99, four);
    EXPECT_EQ(a.n0, b.n0);
    EXPECT_EQ(a.zero_frequency, b.zero_frequency);
    EXPECT_EQ(a.h.mean, b.h.mean);
    EXPECT_EQ(a.s2.sem, b.s2.sem);
    EXPECT_EQ(a.mean_n0, b.mean_n0);
    EXPECT_EQ(a.stddev_n0, b.stddev_n0);
}

TEST(Ensemble, SummaryStatisticsAndCsv) {
    const Instance inst = load_instance(QSAT_FIXTURES "/singlet.json");
    const EnsembleStats stats = run_ensemble(inst, 5, 130, 1);
    ASSERT_EQ(stats.n0.size(), 130U);
    double sum = 0;
    for (auto v : stats.n0) sum += static_cast<double>(v);
    EXPECT_DOUBLE_EQ(stats.mean_n0, sum / 130);
    double ss = 0;
    for (auto v : stats.n0) ss += (v - stats.mean_n0) * (v - stats.mean_n0);
    EXPECT_NEAR(stats.stddev_n0, std::sqrt(ss / 129), 1e-12);
    const std::string csv = ensemble_to_csv(stats);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "trajectory_index,N0");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 131);
}

}  // namespace
}  // namespace qsat
