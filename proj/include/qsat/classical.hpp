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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsat::classical {

struct Literal {
    int var = 0;
    bool negated = false;

    bool satisfied_by(const std::vector<std::uint8_t> &assignment) const {
        return (assignment[static_cast<std::size_t>(var)] != 0) != negated;
    }
};

using TwoClause = std::array<Literal, 2>;
using Assignment = std::vector<std::uint8_t>;

struct CnfInstance {
    int n = 0;
    std::vector<TwoClause> clauses;
};

bool check_cnf(const Assignment &assignment, const CnfInstance &inst);

/// Random walk: uniform random start, then ⌈b·n²⌉ times pick a uniformly random
/// unsatisfied clause and flip a uniformly random one of its variables. Returns
/// the first satisfying assignment seen.
std::optional<Assignment> papadimitriou(const CnfInstance &inst, double b, std::uint64_t seed);

/// Satisfiable random 2-CNF: clauses on uniform distinct variable pairs with random
/// signs, redrawn until a hidden random assignment satisfies them.
CnfInstance random_planted_2sat(int n, int num_clauses, std::uint64_t seed);

/// DIMACS `p cnf` text where every clause has exactly two literals.
CnfInstance parse_dimacs(std::string_view text);

std::string format_assignment(const Assignment &assignment);

inline constexpr std::string_view kNotFoundToken = "UNSAT-NOT-FOUND";

}  // namespace qsat::classical
