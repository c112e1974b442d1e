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

#include "qsat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qsat/channel.hpp"
#include "qsat/errors.hpp"
#include "qsat/observables.hpp"
#include "qsat/rng.hpp"
#include "qsat/trajectory.hpp"

namespace qsat {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr int kStatesPerInstance = 10;

std::string fmt(const char *pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

bool hidden_forms_within(const Instance &inst, std::initializer_list<ClauseForm> allowed) {
    return std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const Clause &c) {
        const ClauseForm f = classify_clause_hidden(c, inst);
        return std::find(allowed.begin(), allowed.end(), f) != allowed.end();
    });
}

std::vector<DensityMatrix> sample_states(int n, Rng &rng) {
    std::vector<DensityMatrix> states;
    for (int k = 0; k < kStatesPerInstance; ++k) states.push_back(random_density_matrix(n, rng, 1 + k % 3));
    return states;
}

std::vector<Instance> builtin_fixtures(std::uint64_t seed) {
    std::vector<Instance> out;
    out.push_back(generate_planted_restricted(3, 4, seed));
    out.push_back(generate_planted_restricted(4, 6, seed + 1));
    out.push_back(generate_planted_extended(4, 6, 0.5, seed + 2));
    Rng rng = make_rng(seed, 99);
    Instance base = generate_planted_restricted(3, 5, seed + 3);
    std::vector<Matrix2> basis;
    for (int q = 0; q < base.n; ++q) basis.push_back(haar_unitary(rng));
    out.push_back(conjugate_instance(base, basis));
    out.push_back(generate_no_instance(3, NoInstanceStyle::CompletePair, 1.0, seed));
    return out;
}

std::string label(std::size_t k) { return "fixture " + std::to_string(k); }

void run_normalization(const std::vector<Instance> &fixtures, std::vector<CheckResult> &out) {
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const Instance &inst = fixtures[k];
        double worst = 0.0;
        for (const Clause &c : inst.clauses) worst = std::max(worst, std::abs(c.amps.squaredNorm() - 1.0));
        CheckResult r{"normalization", worst <= kNormTolerance, label(k) + fmt(": max |norm^2 - 1| = %.3e", worst)};
        if (r.passed) {
            try {
                validate(inst);
            } catch (const Error &e) {
                r = {"normalization", false, label(k) + ": " + e.what()};
            }
        }
        out.push_back(std::move(r));
    }
}

void run_lemma1(const std::vector<Instance> &fixtures, Rng &rng, std::vector<CheckResult> &out) {
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const Instance &inst = fixtures[k];
        if (!hidden_forms_within(inst, {ClauseForm::RestrictedTypeI})) continue;
        const HermitianOp s = hidden_total_spin(inst);
        const HermitianOp s2 = hidden_total_spin_squared(inst);
        const HermitianOp h = build_hamiltonian(inst);
        double worst_s = 0.0, worst_s2 = 0.0;
        for (const DensityMatrix &rho : sample_states(inst.n, rng)) {
            const DensityMatrix next = apply_step_channel(rho, inst);
            worst_s = std::max(worst_s, std::abs(expectation(s, next) - expectation(s, rho)));
            const double gain = expectation(s2, next) - expectation(s2, rho);
            worst_s2 = std::max(worst_s2, std::abs(gain - 2.0 / inst.num_clauses() * expectation(h, rho)));
        }
        out.push_back({"lemma1", worst_s <= kIdentityTol && worst_s2 <= kIdentityTol,
                       label(k) + fmt(": S residual %.3e, S^2 residual %.3e", worst_s, worst_s2)});
    }
}

void run_dual(const std::vector<Instance> &fixtures, Rng &rng, std::vector<CheckResult> &out) {
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const Instance &inst = fixtures[k];
        const auto states = sample_states(inst.n, rng);
        double worst = 0.0;
        int enforced = 0;
        for (const DualResidual &r : dual_residuals(inst, states)) {
            if (!r.enforced) continue;
            ++enforced;
            worst = std::max({worst, r.residual_s, r.residual_s2});
        }
        if (enforced == 0) continue;
        out.push_back({"dual-maps", worst <= kIdentityTol, label(k) + fmt(": max residual %.3e", worst)});
    }
}

void run_trajectory_oracle(const std::vector<Instance> &fixtures, const VerifyOptions &opt,
                           std::vector<CheckResult> &out) {
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const Instance &inst = fixtures[k];
        if (inst.n > 4) continue;
        const ChannelComparison cmp =
            compare_with_channel(inst, opt.trajectory_steps, opt.trajectories, opt.seed + k);
        out.push_back({"trajectory-vs-channel", cmp.worst_sigma <= 5.0,
                       label(k) + fmt(": worst deviation %.2f standard errors at t=%.0f", cmp.worst_sigma,
                                      static_cast<double>(cmp.worst_step)) +
                           " (" + cmp.worst_quantity + ")"});
    }
}

void run_appendix(const std::vector<Instance> &fixtures, std::vector<CheckResult> &out) {
    constexpr int kSteps = 2000;
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const Instance &inst = fixtures[k];
        if (inst.n > 5 || !hidden_forms_within(inst, {ClauseForm::RestrictedTypeI, ClauseForm::TypeII})) continue;
        const EvolutionSeries series = evolve(DensityMatrix::maximally_mixed(inst.n), inst, kSteps - 1);
        double sum = 0.0;
        for (const StepObservables &o : series.steps) sum += o.tr_h;
        const double lhs = 2.0 / inst.num_clauses() * sum;
        const double bound = 5.0 * inst.n * inst.n;
        out.push_back({"appendix-5n2-bound", lhs <= bound + 1e-6, label(k) + fmt(": %.6f <= %.1f", lhs, bound)});
    }
}

}  // namespace

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::Normalization: return "normalization";
        case Suite::Lemma1: return "lemma1";
        case Suite::Dual: return "dual";
        case Suite::Trajectory: return "trajectory";
        case Suite::Appendix: return "appendix";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::Normalization, Suite::Lemma1, Suite::Dual, Suite::Trajectory, Suite::Appendix}) {
        if (suite_name(s) == name) return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

ChannelComparison compare_with_channel(const Instance &inst, int steps, int trajectories, std::uint64_t seed,
                                       int workers) {
    const EnsembleStats stats = run_ensemble(inst, steps, trajectories, seed, {workers, true});
    const HermitianOp h = build_hamiltonian(inst);
    const HermitianOp s = hidden_total_spin(inst);
    const HermitianOp s2 = hidden_total_spin_squared(inst);
    const double m = trajectories;

    ChannelComparison cmp;
    const auto consider = [&](double sigma, int t, const char *what) {
        if (sigma > cmp.worst_sigma) {
            cmp.worst_sigma = sigma;
            cmp.worst_step = t;
            cmp.worst_quantity = what;
        }
    };
    // ⟨A⟩_ψ² ≤ ⟨A²⟩_ψ, so tr[A²ρ] - tr[Aρ]² bounds the spread of per-trajectory means. It stands in
    // for the sample error when rare branches leave the sample without spread.
    const auto check = [&](const HermitianOp &a, const ObservableSeries &series, const Matrix &rho, int t,
                           const char *what) {
        const auto ut = static_cast<std::size_t>(t);
        const double mean = trace_product(a.matrix(), rho).real();
        const double second = trace_product(a.matrix() * a.matrix(), rho).real();
        const double bound = std::sqrt(std::max(second - mean * mean, 0.0) / m);
        consider(std::abs(series.mean[ut] - mean) / (std::max(series.sem[ut], bound) + 1e-9), t, what);
        return mean;
    };

    Matrix rho = DensityMatrix::maximally_mixed(inst.n).matrix();
    for (int t = 0; t <= steps; ++t) {
        const double th = check(h, stats.h, rho, t, "H");
        check(s, stats.s, rho, t, "S");
        check(s2, stats.s2, rho, t, "S^2");
        if (t < steps) {
            const double p = 1.0 - th / inst.num_clauses();
            const double se = std::sqrt(std::max(p * (1.0 - p), 0.0) / m) + 1e-9;
            consider(std::abs(stats.zero_frequency[static_cast<std::size_t>(t)] - p) / se, t, "zero frequency");
            rho = apply_step_channel(rho, inst);
        }
    }
    return cmp;
}

std::vector<CheckResult> run_verification(const VerifyOptions &options) {
    std::vector<Suite> suites = options.suites;
    if (suites.empty()) suites = {Suite::Normalization, Suite::Lemma1, Suite::Dual, Suite::Trajectory, Suite::Appendix};
    const std::vector<Instance> fixtures = options.fixtures.empty() ? builtin_fixtures(options.seed) : options.fixtures;

    std::vector<CheckResult> out;
    // Later suites assume well-formed clauses; stop after a normalization failure.
    run_normalization(fixtures, out);
    const bool wants_norm = std::find(suites.begin(), suites.end(), Suite::Normalization) != suites.end();
    const bool norm_ok = std::all_of(out.begin(), out.end(), [](const CheckResult &r) { return r.passed; });
    if (!wants_norm && norm_ok) out.clear();
    if (!norm_ok) return out;

    Rng rng = make_rng(options.seed, 7);
    for (Suite s : suites) {
        switch (s) {
            case Suite::Normalization: break;
            case Suite::Lemma1: run_lemma1(fixtures, rng, out); break;
            case Suite::Dual: run_dual(fixtures, rng, out); break;
            case Suite::Trajectory: run_trajectory_oracle(fixtures, options, out); break;
            case Suite::Appendix: run_appendix(fixtures, out); break;
        }
    }
    return out;
}

}  // namespace qsat
