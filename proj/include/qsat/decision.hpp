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
#include <string_view>

#include "qsat/instance.hpp"
#include "qsat/numeric.hpp"

namespace qsat {

enum class Variant { Restricted, Extended };

std::string_view variant_name(Variant v);

struct DecisionParams {
    Variant variant = Variant::Restricted;
    double c = 0.0;
    int num_clauses = 0;
    int n = 0;
    double f = 0.0;
    std::int64_t steps = 0;       // T
    double threshold = 0.0;       // N, real valued
    std::int64_t threshold_int = 0;  // ⌈N⌉ clamped at 0
    double p_worst = 0.0;
    double q_worst = 0.0;
    bool vacuous = false;  // N ≤ 0: the guarantee says nothing at this size
};

/// Restricted: f = max{7/c, 1}, T = ⌈f²L²n²/2⌉, N = T·r³ − fLn.
/// Extended:   f = max{22/(5c), 1}, T = ⌈5f²L²n²/2⌉, N = T·r³ − 2fLn.
/// r = (fL − 1)/(fL), p_worst = r², q_worst = 1 − c/L.
DecisionParams decision_params(double c, int num_clauses, int n, Variant variant);

struct Verdict {
    bool yes = false;
    std::int64_t n0 = 0;
    DecisionParams params;
    std::uint64_t seed = 0;
};

/// One trajectory of length params.steps seeded with derive_seed(master_seed, 0);
/// YES iff N0 ≥ params.threshold_int.
Verdict decide(const Instance &inst, const DecisionParams &params, std::uint64_t master_seed);

/// Parameters from the instance's promised c. Throws InvalidPromise when absent.
Verdict decide(const Instance &inst, Variant variant, std::uint64_t master_seed);

/// Restricted: ⌈n²L/(2(1−p)ε)⌉, Extended: five times that bound before rounding.
std::int64_t convergence_steps(int n, int num_clauses, double epsilon, double p, Variant variant);

/// Σ_{t<T} (1 − tr[Hρ_t]/L) along the exact channel from I/2^n.
double expected_zero_count(const Instance &inst, std::int64_t steps);

}  // namespace qsat
