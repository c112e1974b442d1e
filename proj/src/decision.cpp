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

#include "qsat/decision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsat/channel.hpp"
#include "qsat/errors.hpp"
#include "qsat/observables.hpp"
#include "qsat/rng.hpp"
#include "qsat/trajectory.hpp"

namespace qsat {

std::string_view variant_name(Variant v) { return v == Variant::Restricted ? "restricted" : "extended"; }

DecisionParams decision_params(double c, int num_clauses, int n, Variant variant) {
    if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidPromise, "promise gap c must be positive");
    if (num_clauses < 1) throw Error(ErrorCode::InvalidArgument, "need at least one clause");
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 2");

    const bool extended = variant == Variant::Extended;
    DecisionParams p;
    p.variant = variant;
    p.c = c;
    p.num_clauses = num_clauses;
    p.n = n;
    p.f = std::max(extended ? 22.0 / (5.0 * c) : 7.0 / c, 1.0);

    const double fl = p.f * num_clauses;
    const double scale = extended ? 5.0 : 1.0;
    p.steps = stable_ceil(scale * fl * fl * n * n / 2.0);

    const double r = (fl - 1.0) / fl;
    const double slack = (extended ? 2.0 : 1.0) * fl * n;
    p.threshold = static_cast<double>(p.steps) * r * r * r - slack;
    p.threshold_int = std::max<std::int64_t>(0, stable_ceil(p.threshold));
    p.vacuous = p.threshold <= 0.0;
    p.p_worst = r * r;
    p.q_worst = std::clamp(1.0 - c / num_clauses, 0.0, 1.0);
    return p;
}

Verdict decide(const Instance &inst, const DecisionParams &params, std::uint64_t master_seed) {
    if (params.n != inst.n || params.num_clauses != inst.num_clauses()) {
        throw Error(ErrorCode::InvalidArgument, "decision parameters were computed for a different instance shape");
    }
    const TrajectoryRecord rec = run_trajectory(inst, params.steps, derive_seed(master_seed, 0));
    return Verdict{rec.n0 >= params.threshold_int, rec.n0, params, master_seed};
}

Verdict decide(const Instance &inst, Variant variant, std::uint64_t master_seed) {
    if (!inst.promise) throw Error(ErrorCode::InvalidPromise, "instance carries no promise gap");
    return decide(inst, decision_params(inst.promise->c, inst.num_clauses(), inst.n, variant), master_seed);
}

std::int64_t convergence_steps(int n, int num_clauses, double epsilon, double p, Variant variant) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::InvalidTarget, "target fidelity must lie in (0, 1)");
    if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidTarget, "spectral gap must be positive");
    const double scale = variant == Variant::Extended ? 5.0 : 1.0;
    return stable_ceil(scale * n * n * num_clauses / (2.0 * (1.0 - p) * epsilon));
}

double expected_zero_count(const Instance &inst, std::int64_t steps) {
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");
    const HermitianOp h = build_hamiltonian(inst);
    const double num_clauses = inst.num_clauses();
    Matrix rho = DensityMatrix::maximally_mixed(inst.n).matrix();
    double total = 0.0;
    for (std::int64_t t = 0; t < steps; ++t) {
        total += 1.0 - trace_product(h.matrix(), rho).real() / num_clauses;
        if (t + 1 < steps) rho = apply_step_channel(rho, inst);
    }
    return total;
}

}  // namespace qsat
