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

#include "qsat/channel.hpp"
#include "qsat/decision.hpp"
#include "qsat/errors.hpp"
#include "qsat/serialize.hpp"

namespace qsat {
namespace {

TEST(Params, RestrictedWorkedExample) {
    const DecisionParams p = decision_params(1.0, 4, 2, Variant::Restricted);
    EXPECT_DOUBLE_EQ(p.f, 7.0);
    EXPECT_EQ(p.steps, 1568);
    const double r = (7.0 * 4 - 1) / (7.0 * 4);
    EXPECT_NEAR(p.threshold, 1568 * r * r * r - 7.0 * 4 * 2, 1e-9);
    EXPECT_NEAR(p.threshold, 1349.9286, 1e-4);
    EXPECT_EQ(p.threshold_int, 1350);
    EXPECT_NEAR(p.p_worst, r * r, 1e-15);
    EXPECT_NEAR(p.q_worst, 0.75, 1e-15);
    EXPECT_FALSE(p.vacuous);
}

TEST(Params, ExtendedFormula) {
    for (double c : {0.5, 1.0, 3.0, 10.0}) {
        const DecisionParams p = decision_params(c, 5, 3, Variant::Extended);
        const double f = std::max(22.0 / (5.0 * c), 1.0);
        EXPECT_DOUBLE_EQ(p.f, f);
        const auto T = static_cast<std::int64_t>(std::ceil(5.0 * f * f * 25 * 9 / 2 - 1e-9));
        EXPECT_EQ(p.steps, T);
        const double r = (f * 5 - 1) / (f * 5);
        EXPECT_NEAR(p.threshold, static_cast<double>(T) * r * r * r - 2 * f * 5 * 3, 1e-6);
        EXPECT_EQ(p.threshold_int, std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(p.threshold))));
        EXPECT_NEAR(p.q_worst, std::max(0.0, 1.0 - c / 5), 1e-15);
    }
}

TEST(Params, LargeGapSaturatesF) {
    const DecisionParams p = decision_params(20.0, 4, 2, Variant::Restricted);
    EXPECT_DOUBLE_EQ(p.f, 1.0);
    EXPECT_EQ(p.steps, 32);
    EXPECT_DOUBLE_EQ(p.q_worst, 0.0);
    EXPECT_THROW(decision_params(0.0, 4, 2, Variant::Restricted), Error);
    EXPECT_THROW(decision_params(-1.0, 4, 2, Variant::Extended), Error);
}

TEST(Params, StepsAndThresholdGrowWithShrinkingGap) {
    for (Variant v : {Variant::Restricted, Variant::Extended}) {
        std::int64_t prev = 0;
        for (double c : {5.0, 2.0, 1.0, 0.5, 0.25}) {
            const DecisionParams p = decision_params(c, 6, 4, v);
            EXPECT_GE(p.steps, prev);
            EXPECT_LE(p.threshold, static_cast<double>(p.steps));
            prev = p.steps;
        }
    }
}

TEST(Convergence, WorkedExamplesAndErrors) {
    EXPECT_EQ(convergence_steps(2, 1, 1.0, 0.9, Variant::Restricted), 20);
    EXPECT_EQ(convergence_steps(2, 1, 1.0, 0.9, Variant::Extended), 100);
    EXPECT_EQ(convergence_steps(3, 4, 0.5, 0.5, Variant::Restricted), 72);
    EXPECT_THROW(convergence_steps(2, 1, 1.0, 1.0, Variant::Restricted), Error);
    EXPECT_THROW(convergence_steps(2, 1, 1.0, 0.0, Variant::Restricted), Error);
    EXPECT_THROW(convergence_steps(2, 1, 0.0, 0.5, Variant::Restricted), Error);
}

TEST(Convergence, ExactEvolutionReachesTarget) {
    const Instance singlet = load_instance(QSAT_FIXTURES "/singlet.json");
    const std::int64_t T = convergence_steps(2, 1, 1.0, 0.9, Variant::Restricted);
    const EvolutionSeries s = evolve(DensityMatrix::maximally_mixed(2), singlet, static_cast<int>(T));
    EXPECT_GE(s.steps.back().tr_pi0, 0.9);
}

TEST(ExpectedZeroCount, SingletAndCompletePair) {
    const Instance singlet = load_instance(QSAT_FIXTURES "/singlet.json");
    // Σ_{t<3} (1 - 4^-(t+1)) = 3 - 21/64.
    EXPECT_NEAR(expected_zero_count(singlet, 3), 171.0 / 64.0, 1e-12);
    const Instance pair = generate_no_instance(2, NoInstanceStyle::CompletePair, 1.0, 0);
    EXPECT_NEAR(expected_zero_count(pair, 40), 30.0, 1e-12);
}

TEST(Decide, VerdictIsThresholdComparison) {
    const Instance pair = generate_no_instance(2, NoInstanceStyle::CompletePair, 1.0, 0);
    const DecisionParams p = decision_params(1.0, 4, 2, Variant::Restricted);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Verdict v = decide(pair, p, seed);
        EXPECT_EQ(v.yes, v.n0 >= p.threshold_int);
        EXPECT_EQ(v.seed, seed);
        const Verdict again = decide(pair, Variant::Restricted, seed);
        EXPECT_EQ(again.n0, v.n0);
        // N0 for the complete pair is Binomial(T, 3/4), far below the threshold.
        EXPECT_NEAR(static_cast<double>(v.n0), 1176.0, 5 * std::sqrt(1568 * 0.1875));
        EXPECT_FALSE(v.yes);
    }
    const Instance planted = generate_planted_restricted(2, 4, 0);
    EXPECT_TRUE(decide(planted, Variant::Restricted, 1).yes);
}

TEST(Decide, MissingPromiseAndShapeMismatch) {
    const Instance bare = load_instance(QSAT_FIXTURES "/no_promise.json");
    try {
        decide(bare, Variant::Restricted, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPromise);
    }
    const DecisionParams wrong = decision_params(1.0, 7, 3, Variant::Restricted);
    EXPECT_THROW(decide(bare, wrong, 0), Error);
}

}  // namespace
}  // namespace qsat
