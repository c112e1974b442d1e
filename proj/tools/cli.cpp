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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsat/channel.hpp"
#include "qsat/classical.hpp"
#include "qsat/decision.hpp"
#include "qsat/errors.hpp"
#include "qsat/observables.hpp"
#include "qsat/serialize.hpp"
#include "qsat/trajectory.hpp"
#include "qsat/verify.hpp"

namespace qsat::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json tool_meta(const std::string &command) {
    return {{"tool", "qsat"}, {"tool_version", QSAT_VERSION}, {"command", command}};
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Variant parse_variant(const std::string &name) {
    if (name == "restricted") return Variant::Restricted;
    if (name == "extended") return Variant::Extended;
    throw UsageError("unknown variant '" + name + "'");
}

void print_census(std::ostream &out, const Instance &inst) {
    out << "clause census (computational basis):";
    for (const auto &[form, count] : clause_census(inst)) out << " " << clause_form_name(form) << "=" << count;
    out << "\n";
    if (inst.planted_basis) {
        out << "clause census (planted basis):";
        for (const auto &[form, count] : clause_census(inst, true)) out << " " << clause_form_name(form) << "=" << count;
        out << "\n";
    }
}

json params_json(const DecisionParams &p) {
    return {{"variant", variant_name(p.variant)}, {"c", p.c},       {"L", p.num_clauses},
            {"n", p.n},                          {"f", p.f},       {"T", p.steps},
            {"N", p.threshold},                  {"N_int", p.threshold_int},
            {"p_worst", p.p_worst},              {"q_worst", p.q_worst}, {"vacuous", p.vacuous}};
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    int n = 0;
    int clauses = 0;
    double type2_fraction = 0.5;
    double c_target = 0.0;
    double yes_c = 1.0;
    bool disguise = false;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_generate(const GenerateArgs &a, std::ostream &out) {
    Instance inst;
    const bool needs_clauses = a.kind == "restricted" || a.kind == "extended";
    if (needs_clauses && a.clauses < 1) throw UsageError("-L is required for kind " + a.kind);
    if (a.kind == "restricted") {
        inst = generate_planted_restricted(a.n, a.clauses, a.seed);
    } else if (a.kind == "extended") {
        inst = generate_planted_extended(a.n, a.clauses, a.type2_fraction, a.seed);
    } else if (a.kind == "no-complete-pair") {
        inst = generate_no_instance(a.n, NoInstanceStyle::CompletePair, 1.0, a.seed);
    } else if (a.kind == "no-random") {
        if (!(a.c_target > 0.0)) throw UsageError("--c-target must be positive for kind no-random");
        NoInstanceOptions opt;
        opt.num_clauses = a.clauses;
        inst = generate_no_instance(a.n, NoInstanceStyle::RandomCertified, a.c_target, a.seed, opt);
    } else {
        throw UsageError("unknown kind '" + a.kind + "'");
    }
    if (inst.promise && inst.promise->kind == PromiseKind::Yes) inst.promise->c = a.yes_c;
    if (a.disguise) {
        Rng rng = make_rng(a.seed, 1);
        std::vector<Matrix2> basis;
        for (int q = 0; q < inst.n; ++q) basis.push_back(haar_unitary(rng));
        inst = conjugate_instance(inst, basis);
    }
    inst.meta = {{"generator", a.kind}, {"seed", std::to_string(a.seed)}, {"tool_version", QSAT_VERSION}};
    validate(inst);

    if (a.out_path.empty()) {
        out << serialize(inst);
    } else {
        save_instance(inst, a.out_path);
        out << "wrote " << a.out_path << " (n=" << inst.n << ", L=" << inst.num_clauses() << ")\n";
    }
    print_census(out, inst);
    if (inst.promise) {
        out << "promise: " << (inst.promise->kind == PromiseKind::Yes ? "yes" : "no") << " c=" << num(inst.promise->c)
            << "\n";
    }
    return 0;
}

// ---- evolve ---------------------------------------------------------------

int cmd_evolve(const std::string &path, int steps, const std::string &out_path, std::ostream &out) {
    const Instance inst = load_instance(path);
    if (inst.n > kMaxDensityQubits) {
        throw Error(ErrorCode::CapacityExceeded, "exact evolution supports at most " +
                                                     std::to_string(kMaxDensityQubits) + " qubits");
    }
    if (steps < 0) throw UsageError("-T must be non-negative");
    const EvolutionSeries series = evolve(DensityMatrix::maximally_mixed(inst.n), inst, steps);
    const std::string csv = series_to_csv(series);
    if (out_path.empty()) {
        out << csv;
    } else {
        write_file(out_path, csv);
        json meta = tool_meta("evolve");
        meta["instance"] = path;
        meta["T"] = steps;
        meta["seed"] = nullptr;  // exact computation, no sampling
        write_file(out_path + ".meta.json", meta.dump(2) + "\n");
        const auto last = csv.find_last_of('\n', csv.size() - 2);
        out << csv.substr(last + 1);
    }
    return 0;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
    std::string instance;
    std::int64_t steps = 0;
    int trajectories = 1;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string csv_path;
    std::string summary_path;
};

int cmd_sample(const SampleArgs &a, std::ostream &out) {
    const Instance inst = load_instance(a.instance);
    if (inst.n > kMaxStateQubits) {
        throw Error(ErrorCode::CapacityExceeded, "trajectories support at most " + std::to_string(kMaxStateQubits) + " qubits");
    }
    const EnsembleStats stats = run_ensemble(inst, a.steps, a.trajectories, a.seed, {a.workers, false});
    json summary = {{"M", stats.trajectories},       {"T", stats.steps},
                    {"mean_N0", stats.mean_n0},      {"stddev_N0", stats.stddev_n0},
                    {"master_seed", stats.master_seed}, {"meta", tool_meta("sample")}};
    summary["meta"]["instance"] = a.instance;
    summary["meta"]["seed"] = a.seed;
    summary["meta"]["T"] = a.steps;
    summary["meta"]["M"] = a.trajectories;
    if (!a.csv_path.empty()) {
        write_file(a.csv_path, ensemble_to_csv(stats));
        write_file(a.csv_path + ".meta.json", summary["meta"].dump(2) + "\n");
    }
    if (!a.summary_path.empty()) write_file(a.summary_path, summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
    return 0;
}

// ---- decide ---------------------------------------------------------------

int cmd_decide(const std::string &path, const std::string &variant, std::uint64_t seed, const std::string &out_path,
               std::ostream &out, std::ostream &err) {
    const Instance inst = load_instance(path);
    if (!inst.promise) throw UsageError("instance " + path + " carries no promise; decide needs c");
    const DecisionParams params = decision_params(inst.promise->c, inst.num_clauses(), inst.n, parse_variant(variant));
    if (params.vacuous) {
        err << "warning: N = " << num(params.threshold) << " <= 0, the acceptance bound is vacuous at this size\n";
    }
    const Verdict v = decide(inst, params, seed);
    json j = {{"decision", v.yes ? "YES" : "NO"}, {"N0", v.n0},   {"T", params.steps},
              {"N_int", params.threshold_int},     {"f", params.f}, {"variant", variant_name(params.variant)},
              {"seed", seed}};
    j["meta"] = tool_meta("decide");
    j["meta"]["instance"] = path;
    j["meta"]["params"] = params_json(params);
    if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
    out << j.dump(2) << "\n";
    return v.yes ? kExitYes : kExitNo;
}

// ---- classical ------------------------------------------------------------

int cmd_classical(const std::string &path, double b, std::uint64_t seed, std::ostream &out) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    const classical::CnfInstance inst = classical::parse_dimacs(buf.str());
    const auto found = classical::papadimitriou(inst, b, seed);
    if (found) {
        out << classical::format_assignment(*found) << "\n";
        return kExitYes;
    }
    out << classical::kNotFoundToken << "\n";
    return kExitNo;
}

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(const std::string &path, std::ostream &out) {
    const Instance inst = load_instance(path);
    if (inst.n > kMaxDensityQubits) throw Error(ErrorCode::CapacityExceeded, "spectrum supports at most 12 qubits");
    const SpectralData sd = spectral_data(build_hamiltonian(inst));
    out << "index eigenvalue\n";
    for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) out << k << " " << num(sd.eigenvalues(k)) << "\n";
    out << "min_eigenvalue " << num(sd.min_eigenvalue) << "\n";
    out << "epsilon " << num(sd.epsilon) << "\n";
    out << "degeneracy " << sd.ground_degeneracy << "\n";
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::vector<std::string> &suites, const std::vector<std::string> &instances, std::uint64_t seed,
               std::ostream &out, std::ostream &err) {
    VerifyOptions opt;
    opt.seed = seed;
    for (const std::string &s : suites) opt.suites.push_back(parse_suite(s));
    for (const std::string &p : instances) opt.fixtures.push_back(load_instance(p, {.require_normalized = false}));

    const std::vector<CheckResult> results = run_verification(opt);
    const CheckResult *first_failure = nullptr;
    for (const CheckResult &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.invariant << " " << r.detail << "\n";
        if (!r.passed && !first_failure) first_failure = &r;
    }
    if (first_failure) {
        err << "invariant '" << first_failure->invariant << "' failed: " << first_failure->detail << "\n";
        return kExitVerification;
    }
    out << results.size() << " checks passed\n";
    return 0;
}

// ---- report ---------------------------------------------------------------

int cmd_report(const std::string &path, double p, std::ostream &out) {
    const Instance inst = load_instance(path);
    out << "instance " << path << ": n=" << inst.n << " L=" << inst.num_clauses() << "\n";
    print_census(out, inst);
    if (inst.n <= kMaxDensityQubits) {
        const SpectralData sd = spectral_data(build_hamiltonian(inst));
        out << "min_eigenvalue " << num(sd.min_eigenvalue) << "\nepsilon " << num(sd.epsilon) << "\ndegeneracy "
            << sd.ground_degeneracy << "\n";
        const bool has_type2 = clause_census(inst, true).count(ClauseForm::TypeII) > 0;
        const Variant v = has_type2 ? Variant::Extended : Variant::Restricted;
        if (sd.ground_degeneracy > 0) {
            out << "convergence_steps(p=" << p << ", " << variant_name(v)
                << ") " << convergence_steps(inst.n, inst.num_clauses(), sd.epsilon, p, v) << "\n";
        }
    }
    if (inst.promise) {
        out << "promise " << (inst.promise->kind == PromiseKind::Yes ? "yes" : "no") << " c=" << num(inst.promise->c)
            << "\n";
        for (Variant v : {Variant::Restricted, Variant::Extended}) {
            out << "params " << params_json(decision_params(inst.promise->c, inst.num_clauses(), inst.n, v)).dump()
                << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum 2-SAT random-walk toolkit", "qsat"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(QSAT_VERSION));

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Generate an instance file");
    generate->add_option("--kind", gen.kind, "restricted | extended | no-complete-pair | no-random")->required();
    generate->add_option("-n", gen.n, "Qubit count")->required();
    generate->add_option("-L", gen.clauses, "Clause count");
    auto *frac = generate->add_option("--type2-fraction", gen.type2_fraction, "Type II probability (extended)");
    auto *ctarget = generate->add_option("--c-target", gen.c_target, "Certified promise gap (no-random)");
    frac->excludes(ctarget);
    generate->add_option("--c", gen.yes_c, "Promise gap recorded on YES instances");
    generate->add_flag("--disguise", gen.disguise, "Conjugate by a seeded random product basis");
    generate->add_option("--seed", gen.seed, "Generator seed");
    generate->add_option("-o,--out", gen.out_path, "Output path (default: stdout)");

    std::string instance_path, out_path, variant = "restricted";
    int evolve_steps = 0;
    auto *evolve_cmd = app.add_subcommand("evolve", "Exact channel evolution from the maximally mixed state");
    evolve_cmd->add_option("--instance", instance_path)->required();
    evolve_cmd->add_option("-T", evolve_steps, "Steps")->required();
    evolve_cmd->add_option("-o,--out", out_path, "CSV path (default: stdout)");

    SampleArgs smp;
    auto *sample = app.add_subcommand("sample", "Monte Carlo trajectory ensemble");
    sample->add_option("--instance", smp.instance)->required();
    sample->add_option("-T", smp.steps, "Steps per trajectory")->required();
    sample->add_option("-M", smp.trajectories, "Trajectory count")->required();
    sample->add_option("--seed", smp.seed, "Master seed")->required();
    sample->add_option("--workers", smp.workers, "Worker threads (results do not depend on it)");
    sample->add_option("--csv", smp.csv_path, "Per-trajectory CSV path");
    sample->add_option("--summary", smp.summary_path, "JSON summary path");

    std::uint64_t seed = 0;
    auto *decide_cmd = app.add_subcommand("decide", "Run the decision procedure once");
    decide_cmd->add_option("--instance", instance_path)->required();
    decide_cmd->add_option("--variant", variant, "restricted | extended");
    decide_cmd->add_option("--seed", seed, "Master seed")->required();
    decide_cmd->add_option("-o,--out", out_path, "Verdict JSON path");

    std::string cnf_path;
    double b = 1.0;
    auto *classical_cmd = app.add_subcommand("classical", "Classical random-walk 2-SAT baseline");
    classical_cmd->add_option("--cnf", cnf_path, "DIMACS file with 2-literal clauses")->required();
    classical_cmd->add_option("-b", b, "Iteration budget factor (b n^2 flips)");
    classical_cmd->add_option("--seed", seed, "Seed")->required();

    auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues of H");
    spectrum->add_option("--instance", instance_path)->required();

    std::vector<std::string> suites, fixtures;
    std::uint64_t verify_seed = 1;
    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("--suite", suites, "normalization | lemma1 | dual | trajectory | appendix");
    verify->add_option("--instance", fixtures, "Instance files (default: built-in seeded set)");
    verify->add_option("--seed", verify_seed, "Seed for sampled states and trajectories");

    double report_p = 0.9;
    auto *report = app.add_subcommand("report", "Summarize an instance");
    report->add_option("--instance", instance_path)->required();
    report->add_option("-p", report_p, "Target ground-space fidelity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << QSAT_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (evolve_cmd->parsed()) return cmd_evolve(instance_path, evolve_steps, out_path, out);
        if (sample->parsed()) return cmd_sample(smp, out);
        if (decide_cmd->parsed()) return cmd_decide(instance_path, variant, seed, out_path, out, err);
        if (classical_cmd->parsed()) return cmd_classical(cnf_path, b, seed, out);
        if (spectrum->parsed()) return cmd_spectrum(instance_path, out);
        if (verify->parsed()) return cmd_verify(suites, fixtures, verify_seed, out, err);
        if (report->parsed()) return cmd_report(instance_path, report_p, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::CapacityExceeded ? kExitCapacity : kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qsat::cli
