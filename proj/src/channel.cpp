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

#include "qsat/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qsat/errors.hpp"

namespace qsat {

Matrix twirl(const Matrix &m, int q, int n) { return embed_maximally_mixed(partial_trace(m, q, n), q, n); }

DensityMatrix twirl(const DensityMatrix &rho, int q) {
    return DensityMatrix(rho.num_qubits(), twirl(rho.matrix(), q, rho.num_qubits()));
}

Matrix apply_clause_channel(const Matrix &m, const Clause &clause, int n) {
    const Matrix4 phi = clause.projector();
    Matrix phi_m = m;
    apply_two_qubit_left(phi_m, phi, clause.i, clause.j, n);
    Matrix m_phi = m;
    apply_two_qubit_right(m_phi, phi, clause.i, clause.j, n);
    Matrix phi_m_phi = phi_m;
    apply_two_qubit_right(phi_m_phi, phi, clause.i, clause.j, n);

    // (1−Φ)m(1−Φ) expanded, plus the two half-weight twirled branches.
    Matrix out = m - phi_m - m_phi + phi_m_phi;
    out += 0.5 * twirl(phi_m_phi, clause.i, n);
    out += 0.5 * twirl(phi_m_phi, clause.j, n);
    return out;
}

DensityMatrix apply_clause_channel(const DensityMatrix &rho, const Clause &clause) {
    return DensityMatrix(rho.num_qubits(), apply_clause_channel(rho.matrix(), clause, rho.num_qubits()));
}

Matrix apply_step_channel(const Matrix &m, const Instance &inst) {
    if (inst.clauses.empty()) throw Error(ErrorCode::InvalidArgument, "instance has no clauses");
    Matrix acc = Matrix::Zero(m.rows(), m.cols());
    for (const Clause &c : inst.clauses) acc += apply_clause_channel(m, c, inst.n);
    return acc / static_cast<double>(inst.clauses.size());
}

DensityMatrix apply_step_channel(const DensityMatrix &rho, const Instance &inst) {
    if (rho.num_qubits() != inst.n) throw Error(ErrorCode::DimensionMismatch, "state and instance sizes differ");
    return DensityMatrix(inst.n, apply_step_channel(rho.matrix(), inst));
}

TrackedOperators TrackedOperators::for_instance(const Instance &inst) {
    HermitianOp h = build_hamiltonian(inst);
    HermitianOp pi0 = spectral_data(h).ground_projector;
    return TrackedOperators{std::move(h), hidden_total_spin(inst), hidden_total_spin_squared(inst), std::move(pi0)};
}

StepObservables TrackedOperators::measure(const Matrix &rho) const {
    return {trace_product(h.matrix(), rho).real(), trace_product(s.matrix(), rho).real(),
            trace_product(s2.matrix(), rho).real(), trace_product(pi0.matrix(), rho).real()};
}

EvolutionSeries evolve(const DensityMatrix &rho0, const Instance &inst, int steps, const EvolveOptions &options) {
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");
    if (rho0.num_qubits() != inst.n) throw Error(ErrorCode::DimensionMismatch, "state and instance sizes differ");

    const TrackedOperators ops = TrackedOperators::for_instance(inst);
    const auto wants_snapshot = [&](int t) {
        return std::find(options.snapshot_steps.begin(), options.snapshot_steps.end(), t) != options.snapshot_steps.end();
    };

    EvolutionSeries series;
    series.steps.reserve(static_cast<std::size_t>(steps) + 1);
    Matrix rho = rho0.matrix();
    for (int t = 0;; ++t) {
        series.steps.push_back(ops.measure(rho));
        if (wants_snapshot(t)) series.snapshots.emplace(t, DensityMatrix(inst.n, rho));
        if (t == steps) break;
        rho = apply_step_channel(rho, inst);
        if (options.resymmetrize_every > 0 && (t + 1) % options.resymmetrize_every == 0) {
            const double herm = hermiticity_defect(rho);
            const double trace_err = std::abs(rho.trace() - Complex(1.0));
            if (herm > options.drift_limit || trace_err > options.drift_limit) {
                throw Error(ErrorCode::NumericalDrift, "state drifted by " + std::to_string(std::max(herm, trace_err)) +
                                                           " after " + std::to_string(t + 1) + " steps");
            }
            rho = 0.5 * (rho + rho.adjoint()).eval();
            rho /= rho.trace().real();
        }
    }
    return series;
}

std::string series_to_csv(const EvolutionSeries &series) {
    std::string out = "t,trH,trS,trS2,trPi0\n";
    char line[160];
    for (std::size_t t = 0; t < series.steps.size(); ++t) {
        const StepObservables &o = series.steps[t];
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g\n", t, o.tr_h, o.tr_s, o.tr_s2, o.tr_pi0);
        out += line;
    }
    return out;
}

std::vector<DualResidual> dual_residuals(const Instance &inst, std::span<const DensityMatrix> samples) {
    const HermitianOp s = hidden_total_spin(inst);
    const HermitianOp s2 = hidden_total_spin_squared(inst);
    const auto d = static_cast<Eigen::Index>(dimension(inst.n));

    std::vector<DualResidual> out;
    for (int a = 0; a < inst.num_clauses(); ++a) {
        const Clause &c = inst.clauses[static_cast<std::size_t>(a)];
        const ClauseForm form = classify_clause_hidden(c, inst);

        Matrix phi = Matrix::Identity(d, d);
        apply_two_qubit_left(phi, c.projector(), c.i, c.j, inst.n);

        Matrix delta_s = Matrix::Zero(d, d);
        Matrix delta_s2 = 2.0 * phi;
        if (form == ClauseForm::TypeII) {
            Matrix rest = s.matrix() - hidden_sigma_z(inst, c.i).matrix() - hidden_sigma_z(inst, c.j).matrix();
            delta_s = phi;
            delta_s2 = -2.0 * phi + 2.0 * rest * phi;
        }
        const Matrix dual_s = s.matrix() + delta_s;
        const Matrix dual_s2 = s2.matrix() + delta_s2;

        for (std::size_t k = 0; k < samples.size(); ++k) {
            const Matrix &rho = samples[k].matrix();
            const Matrix mapped = apply_clause_channel(rho, c, inst.n);
            DualResidual r;
            r.clause = a;
            r.sample = static_cast<int>(k);
            r.form = form;
            r.residual_s = std::abs(trace_product(s.matrix(), mapped) - trace_product(dual_s, rho));
            r.residual_s2 = std::abs(trace_product(s2.matrix(), mapped) - trace_product(dual_s2, rho));
            r.enforced = form == ClauseForm::RestrictedTypeI || form == ClauseForm::TypeII;
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace qsat
