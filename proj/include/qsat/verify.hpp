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
#include <string>
#include <string_view>
#include <vector>

#include "qsat/instance.hpp"

namespace qsat {

enum class Suite { Normalization, Lemma1, Dual, Trajectory, Appendix };

std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);

struct CheckResult {
    std::string invariant;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::vector<Suite> suites;  // empty = all
    // Instances to check. When empty a seeded built-in set is generated.
    std::vector<Instance> fixtures;
    std::uint64_t seed = 1;
    int trajectories = 2000;
    int trajectory_steps = 20;
};

/// Runs the selected invariant suites; checks appear in suite order.
// Runs a trajectory ensemble from I/2^n and compares per-step zero frequency and the means of
// H, S, S² against exact channel evolution, in units of standard error.
struct ChannelComparison {
    double worst_sigma = 0.0;
    int worst_step = 0;
    std::string worst_quantity;
};

ChannelComparison compare_with_channel(const Instance &inst, int steps, int trajectories, std::uint64_t seed,
                                       int workers = 1);

std::vector<CheckResult> run_verification(const VerifyOptions &options);

}  // namespace qsat
