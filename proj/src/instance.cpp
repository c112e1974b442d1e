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

#include "qsat/instance.hpp"

#include <cmath>
#include <string>

#include "qsat/errors.hpp"
#include "qsat/observables.hpp"
#include "qsat/rng.hpp"

namespace qsat {

namespace {

Matrix4 kron2(const Matrix2 &left, const Matrix2 &right) {
    Matrix4 k;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) k(2 * a + b, 2 * c + d) = left(a, c) * right(b, d);
    return k;
}

std::pair<int, int> random_pair(int n, Rng &rng) {
    std::uniform_int_distribution<int> first(0, n - 1);
    std::uniform_int_distribution<int> second(0, n - 2);
    int a = first(rng);
    int b = second(rng);
    if (b >= a) ++b;
    return {std::min(a, b), std::max(a, b)};
}

void require_generator_shape(int n, int num_clauses) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "instances need n >= 2, got " + std::to_string(n));
    if (num_clauses < 1) throw Error(ErrorCode::InvalidArgument, "instances need at least one clause");
}

Clause random_restricted_clause(int n, Rng &rng) {
    const auto [i, j] = random_pair(n, rng);
    const Vector ab = random_unit_vector(2, rng);
    return make_clause(i, j, Vector4(0.0, ab(0), ab(1), 0.0));
}

Clause type2_clause(int n, Rng &rng) {
    const auto [i, j] = random_pair(n, rng);
    return make_clause(i, j, Vector4(0.0, 0.0, 0.0, 1.0));
}

std::vector<Matrix2> identity_basis(int n) { return std::vector<Matrix2>(static_cast<std::size_t>(n), Matrix2::Identity()); }

ClauseForm classify_amps(const Vector4 &a) {
    const bool z0 = std::abs(a(0)) <= kFormTolerance;
    const bool z1 = std::abs(a(1)) <= kFormTolerance;
    const bool z2 = std::abs(a(2)) <= kFormTolerance;
    const bool z3 = std::abs(a(3)) <= kFormTolerance;
    if (z0 && z1 && z2 && std::abs(std::abs(a(3)) - 1.0) <= kFormTolerance) return ClauseForm::TypeII;
    if (z0 && z3) return ClauseForm::RestrictedTypeI;
    if (z0) return ClauseForm::GeneralNoZeroZero;
    return ClauseForm::Arbitrary;
}

}  // namespace

std::string_view clause_form_name(ClauseForm form) {
    switch (form) {
        case ClauseForm::RestrictedTypeI: return "RestrictedTypeI";
        case ClauseForm::TypeII: return "TypeII";
        case ClauseForm::GeneralNoZeroZero: return "GeneralNoZeroZero";
        case ClauseForm::Arbitrary: return "Arbitrary";
    }
    return "Unknown";
}

Clause make_clause(int i, int j, const Vector4 &amps) {
    if (i < 0 || j < 0 || i == j) {
        throw Error(ErrorCode::QubitPairInvalid,
                    "clause qubits (" + std::to_string(i) + ", " + std::to_string(j) + ") must be distinct and non-negative");
    }
    if (amps.cwiseAbs().maxCoeff() < 1e-14) {
        throw Error(ErrorCode::ZeroVector, "clause amplitude vector is zero");
    }
    return Clause{i, j, amps / amps.norm()};
}

ClauseForm classify_clause(const Clause &c) { return classify_amps(c.amps); }

ClauseForm classify_clause_hidden(const Clause &c, const Instance &inst) {
    if (!inst.planted_basis) return classify_clause(c);
    const auto &basis = *inst.planted_basis;
    const Matrix4 v = kron2(basis[static_cast<std::size_t>(c.i)], basis[static_cast<std::size_t>(c.j)]);
    return classify_amps(v.adjoint() * c.amps);
}

std::map<ClauseForm, int> clause_census(const Instance &inst, bool hidden_basis) {
    std::map<ClauseForm, int> census;
    for (const Clause &c : inst.clauses) {
        ++census[hidden_basis ? classify_clause_hidden(c, inst) : classify_clause(c)];
    }
    return census;
}

void validate(const Instance &inst, bool check_norms) {
    if (inst.n < 2) throw Error(ErrorCode::InvalidArgument, "instance needs n >= 2");
    if (inst.clauses.empty()) throw Error(ErrorCode::InvalidArgument, "instance has no clauses");
    for (std::size_t a = 0; a < inst.clauses.size(); ++a) {
        const Clause &c = inst.clauses[a];
        if (c.i < 0 || c.j < 0 || c.i == c.j || c.i >= inst.n || c.j >= inst.n) {
            throw Error(ErrorCode::QubitPairInvalid, "clause " + std::to_string(a) + " has invalid qubits");
        }
        if (check_norms && std::abs(c.amps.squaredNorm() - 1.0) > kNormTolerance) {
            throw Error(ErrorCode::InvalidArgument, "clause " + std::to_string(a) + " is not normalized");
        }
    }
    if (inst.promise && inst.promise->kind == PromiseKind::No && !(inst.promise->c > 0.0)) {
        throw Error(ErrorCode::InvalidPromise, "NO promise needs c > 0");
    }
    if (inst.planted_basis) {
        const auto &basis = *inst.planted_basis;
        if (static_cast<int>(basis.size()) != inst.n) {
            throw Error(ErrorCode::DimensionMismatch, "planted basis must have one unitary per qubit");
        }
        for (const Matrix2 &u : basis) {
            if (!is_unitary(u, kUnitaryTolerance)) throw Error(ErrorCode::NotUnitary, "planted basis entry is not unitary");
        }
        // The planted state is a product, so each overlap only needs the clause's two factors.
        for (std::size_t a = 0; a < inst.clauses.size(); ++a) {
            const Clause &c = inst.clauses[a];
            const Vector2 left = basis[static_cast<std::size_t>(c.i)].col(0);
            const Vector2 right = basis[static_cast<std::size_t>(c.j)].col(0);
            const Vector4 local(left(0) * right(0), left(0) * right(1), left(1) * right(0), left(1) * right(1));
            const double overlap = std::norm(c.amps.dot(local));
            if (overlap > kPlantedTolerance) {
                throw Error(ErrorCode::InvalidArgument,
                            "planted state violates clause " + std::to_string(a) + " (overlap " + std::to_string(overlap) + ")");
            }
        }
    }
}

StateVector planted_state(const Instance &inst) {
    if (!inst.planted_basis) throw Error(ErrorCode::InvalidArgument, "instance has no planted basis");
    if (inst.n > kMaxStateQubits) throw Error(ErrorCode::CapacityExceeded, "too many qubits for a state vector");
    Vector psi = Vector::Ones(1);
    for (const Matrix2 &u : *inst.planted_basis) {
        const Vector2 local = u.col(0);
        Vector next(psi.size() * 2);
        for (Eigen::Index k = 0; k < psi.size(); ++k) {
            next(2 * k) = psi(k) * local(0);
            next(2 * k + 1) = psi(k) * local(1);
        }
        psi = std::move(next);
    }
    return StateVector(inst.n, psi / psi.norm());
}

Instance generate_planted_restricted(int n, int num_clauses, std::uint64_t seed) {
    return generate_planted_extended(n, num_clauses, 0.0, seed);
}

Instance generate_planted_extended(int n, int num_clauses, double type2_fraction, std::uint64_t seed) {
    require_generator_shape(n, num_clauses);
    if (!(type2_fraction >= 0.0 && type2_fraction <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "Type II fraction must lie in [0, 1]");
    }
    Rng rng = make_rng(seed, 0);
    Instance inst;
    inst.n = n;
    inst.clauses.reserve(static_cast<std::size_t>(num_clauses));
    for (int a = 0; a < num_clauses; ++a) {
        // Degenerate fractions draw nothing extra, so fraction 0 reproduces the restricted generator.
        bool type2 = type2_fraction >= 1.0;
        if (type2_fraction > 0.0 && type2_fraction < 1.0) type2 = uniform01(rng) < type2_fraction;
        inst.clauses.push_back(type2 ? type2_clause(n, rng) : random_restricted_clause(n, rng));
    }
    inst.planted_basis = identity_basis(n);
    inst.promise = Promise{PromiseKind::Yes, 1.0};
    return inst;
}

Instance generate_no_instance(int n, NoInstanceStyle style, double c_target, std::uint64_t seed,
                              const NoInstanceOptions &options) {
    require_generator_shape(n, 1);
    Instance inst;
    inst.n = n;
    if (style == NoInstanceStyle::CompletePair) {
        for (int k = 0; k < 4; ++k) {
            Vector4 e = Vector4::Zero();
            e(k) = 1.0;
            inst.clauses.push_back(make_clause(0, 1, e));
        }
        const double lowest = spectral_data(build_hamiltonian(inst)).min_eigenvalue;
        if (std::abs(lowest - 1.0) > 1e-9) {
            throw Error(ErrorCode::CertificationFailed, "complete pair Hamiltonian is not the identity");
        }
        inst.promise = Promise{PromiseKind::No, 1.0};
        return inst;
    }

    if (!(c_target > 0.0)) throw Error(ErrorCode::InvalidArgument, "c_target must be positive");
    const int num_clauses = options.num_clauses > 0 ? options.num_clauses : (2 << n);
    Rng rng = make_rng(seed, 0);
    for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
        inst.clauses.clear();
        for (int a = 0; a < num_clauses; ++a) {
            const auto [i, j] = random_pair(n, rng);
            inst.clauses.push_back(make_clause(i, j, random_unit_vector(4, rng)));
        }
        const HermitianOp h = build_hamiltonian(inst);
        const double lowest = hermitian_eig(h).values(0);
        if (lowest >= c_target) {
            inst.promise = Promise{PromiseKind::No, lowest};
            return inst;
        }
    }
    throw Error(ErrorCode::CertificationFailed,
                "no instance reached c >= " + std::to_string(c_target) + " within " +
                    std::to_string(options.retry_budget) + " attempts");
}

Instance conjugate_instance(const Instance &inst, std::span<const Matrix2> basis) {
    if (static_cast<int>(basis.size()) != inst.n) {
        throw Error(ErrorCode::DimensionMismatch, "basis needs one unitary per qubit");
    }
    for (const Matrix2 &u : basis) {
        if (!is_unitary(u, kUnitaryTolerance)) throw Error(ErrorCode::NotUnitary, "basis entry is not unitary");
    }
    Instance out = inst;
    for (Clause &c : out.clauses) {
        c.amps = kron2(basis[static_cast<std::size_t>(c.i)], basis[static_cast<std::size_t>(c.j)]) * c.amps;
    }
    if (out.planted_basis) {
        for (int q = 0; q < inst.n; ++q) {
            auto &entry = (*out.planted_basis)[static_cast<std::size_t>(q)];
            entry = basis[static_cast<std::size_t>(q)] * entry;
        }
    }
    return out;
}

}  // namespace qsat
