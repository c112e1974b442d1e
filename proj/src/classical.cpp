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

#include "qsat/classical.hpp"

#include <cassert>
#include <sstream>
#include <string>

#include "qsat/errors.hpp"
#include "qsat/numeric.hpp"
#include "qsat/rng.hpp"

namespace qsat::classical {

namespace {

bool clause_satisfied(const TwoClause &c, const Assignment &a) { return c[0].satisfied_by(a) || c[1].satisfied_by(a); }

[[noreturn]] void parse_fail(int line, const std::string &why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

bool check_cnf(const Assignment &assignment, const CnfInstance &inst) {
    if (static_cast<int>(assignment.size()) != inst.n) {
        throw Error(ErrorCode::DimensionMismatch, "assignment has " + std::to_string(assignment.size()) +
                                                      " bits, instance has " + std::to_string(inst.n));
    }
    for (const TwoClause &c : inst.clauses) {
        if (!clause_satisfied(c, assignment)) return false;
    }
    return true;
}

std::optional<Assignment> papadimitriou(const CnfInstance &inst, double b, std::uint64_t seed) {
    if (!(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "b must be positive");
    Rng rng = make_rng(seed, 0);
    std::bernoulli_distribution coin(0.5);

    Assignment s(static_cast<std::size_t>(inst.n));
    for (auto &bit : s) bit = coin(rng) ? 1 : 0;

    const std::int64_t budget = stable_ceil(b * inst.n * inst.n);
    std::vector<std::size_t> unsatisfied;
    unsatisfied.reserve(inst.clauses.size());
    const auto collect = [&] {
        unsatisfied.clear();
        for (std::size_t k = 0; k < inst.clauses.size(); ++k) {
            if (!clause_satisfied(inst.clauses[k], s)) unsatisfied.push_back(k);
        }
        return unsatisfied.empty();
    };

    if (collect()) return s;
    for (std::int64_t iter = 0; iter < budget; ++iter) {
        std::uniform_int_distribution<std::size_t> pick(0, unsatisfied.size() - 1);
        const TwoClause &c = inst.clauses[unsatisfied[pick(rng)]];
        const Literal &lit = c[coin(rng) ? 1 : 0];
        s[static_cast<std::size_t>(lit.var)] ^= 1;
        if (collect()) {
            assert(check_cnf(s, inst));
            return s;
        }
    }
    return std::nullopt;
}

CnfInstance random_planted_2sat(int n, int num_clauses, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two variables");
    Rng rng = make_rng(seed, 0);
    std::bernoulli_distribution coin(0.5);
    Assignment hidden(static_cast<std::size_t>(n));
    for (auto &bit : hidden) bit = coin(rng) ? 1 : 0;

    std::uniform_int_distribution<int> first(0, n - 1), second(0, n - 2);
    CnfInstance inst{n, {}};
    while (static_cast<int>(inst.clauses.size()) < num_clauses) {
        const int a = first(rng);
        int b = second(rng);
        if (b >= a) ++b;
        TwoClause c{Literal{a, coin(rng)}, Literal{b, coin(rng)}};
        if (clause_satisfied(c, hidden)) inst.clauses.push_back(c);
    }
    return inst;
}

CnfInstance parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    CnfInstance inst;
    int declared = -1;
    std::vector<Literal> pending;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head) || head == "c" || head[0] == '%') continue;
        if (head == "p") {
            std::string fmt;
            if (!(tokens >> fmt >> inst.n >> declared) || fmt != "cnf" || inst.n < 0 || declared < 0) {
                parse_fail(line_no, "malformed problem line");
            }
            continue;
        }
        if (declared < 0) parse_fail(line_no, "clause before problem line");
        std::istringstream lits(line);
        long long v = 0;
        while (lits >> v) {
            if (v == 0) {
                if (pending.size() != 2) parse_fail(line_no, "clause must have exactly two literals");
                inst.clauses.push_back({pending[0], pending[1]});
                pending.clear();
                continue;
            }
            const long long var = v < 0 ? -v : v;
            if (var > inst.n) parse_fail(line_no, "variable " + std::to_string(var) + " exceeds n");
            pending.push_back(Literal{static_cast<int>(var - 1), v < 0});
        }
        if (!lits.eof()) parse_fail(line_no, "non-integer token");
    }
    if (declared < 0) parse_fail(line_no, "missing problem line");
    if (!pending.empty()) parse_fail(line_no, "unterminated clause");
    if (static_cast<int>(inst.clauses.size()) != declared) {
        parse_fail(line_no, "declared " + std::to_string(declared) + " clauses, found " +
                                std::to_string(inst.clauses.size()));
    }
    return inst;
}

std::string format_assignment(const Assignment &assignment) {
    std::string out;
    out.reserve(assignment.size());
    for (auto bit : assignment) out.push_back(bit ? '1' : '0');
    return out;
}

}  // namespace qsat::classical
