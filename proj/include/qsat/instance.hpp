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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsat/densesim.hpp"

namespace qsat {

/// Rank-1 clause projector |φ⟩⟨φ| on qubits (i, j). Amplitudes are ordered
/// |00⟩, |01⟩, |10⟩, |11⟩ with qubit i as the left factor.
struct Clause {
    int i = 0;
    int j = 1;
    Vector4 amps = Vector4::Zero();

    Matrix4 projector() const { return amps * amps.adjoint(); }
};

enum class ClauseForm { RestrictedTypeI, TypeII, GeneralNoZeroZero, Arbitrary };

std::string_view clause_form_name(ClauseForm form);

enum class PromiseKind { Yes, No };

struct Promise {
    PromiseKind kind = PromiseKind::Yes;
    double c = 1.0;
};

struct Instance {
    int n = 0;
    std::vector<Clause> clauses;
    // Per-qubit unitaries v_q; the planted solution is ⊗_q v_q|0⟩.
    std::optional<std::vector<Matrix2>> planted_basis;
    std::optional<Promise> promise;
    // Free-form provenance (generator, seed, tool version). Ignored by every algorithm.
    std::map<std::string, std::string> meta;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

inline constexpr double kFormTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPlantedTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr int kDefaultRetryBudget = 1000;

Clause make_clause(int i, int j, const Vector4 &amps);

ClauseForm classify_clause(const Clause &c);

/// Form of the clause after undoing the planted basis: (v_i ⊗ v_j)† |φ⟩.
ClauseForm classify_clause_hidden(const Clause &c, const Instance &inst);

std::map<ClauseForm, int> clause_census(const Instance &inst, bool hidden_basis = false);

/// Throws on any broken Instance invariant. `check_norms = false` skips the
/// per-clause normalization check so callers can report it separately.
void validate(const Instance &inst, bool check_norms = true);

/// ⊗_q v_q|0⟩ for the instance's planted basis.
StateVector planted_state(const Instance &inst);

Instance generate_planted_restricted(int n, int num_clauses, std::uint64_t seed);
Instance generate_planted_extended(int n, int num_clauses, double type2_fraction, std::uint64_t seed);

enum class NoInstanceStyle { CompletePair, RandomCertified };

struct NoInstanceOptions {
    int num_clauses = 0;  // 0 selects 2^(n+1) clauses for RandomCertified
    int retry_budget = kDefaultRetryBudget;
};

Instance generate_no_instance(int n, NoInstanceStyle style, double c_target, std::uint64_t seed,
                              const NoInstanceOptions &options = {});

/// Rotates every clause by (v_i ⊗ v_j) and composes the planted basis with `basis`.
Instance conjugate_instance(const Instance &inst, std::span<const Matrix2> basis);

}  // namespace qsat
