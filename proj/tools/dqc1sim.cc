// Copyright 2026 The dqc1sim Authors
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

// Command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqc1sim/analysis.h"
#include "dqc1sim/dqc1.h"
#include "dqc1sim/errors.h"
#include "dqc1sim/matrix_io.h"
#include "dqc1sim/numtheory.h"
#include "dqc1sim/order_finding.h"
#include "dqc1sim/qsim.h"
#include "dqc1sim/report.h"
#include "dqc1sim/verify.h"

using json = nlohmann::json;
using namespace dqc1sim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitShortcut = 4;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("DQC1SIM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw Error(ErrorKind::InputFormat, std::string("DQC1SIM_SEED is not an integer: ") + env);
        }
    }
    return 1;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::InputFormat, "cannot open output file " + path);
    }
    out << text;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InputFormat:
        case ErrorKind::NotUnitary:
        case ErrorKind::DimMismatch:
        case ErrorKind::NotDensityMatrix:
            return kExitInput;
        default:
            return kExitPrecondition;
    }
}

struct TraceArgs {
    std::string builtin;
    std::string matrix;
    std::size_t dim = 2;
    u64 a = 2;
    u64 n = 15;
    std::vector<double> phases;
    double theta = 0.0;
    std::uint64_t shots = 10000;
    std::string protocol = "bb";
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string output;
};

UnitarySpec trace_unitary(const TraceArgs &args, json &config) {
    std::optional<UnitarySpec> u;
    if (!args.matrix.empty()) {
        config["matrix"] = args.matrix;
        u = load_unitary_json(args.matrix);
    } else if (args.builtin == "identity") {
        config["builtin"] = "identity";
        config["dim"] = args.dim;
        u = UnitarySpec::identity(args.dim);
    } else if (args.builtin == "modmul") {
        config["builtin"] = "modmul";
        config["a"] = args.a;
        config["N"] = args.n;
        u = UnitarySpec::mod_mul(args.a, args.n);
    } else if (args.builtin == "diag") {
        if (args.phases.empty()) {
            throw Error(ErrorKind::InputFormat, "--builtin diag needs --phases");
        }
        config["builtin"] = "diag";
        config["phases"] = args.phases;
        u = UnitarySpec::diagonal_phases(args.phases);
    } else {
        throw Error(ErrorKind::InputFormat, "no unitary source; use --builtin or --matrix");
    }
    if (args.theta != 0.0) {
        config["theta"] = args.theta;
        u = UnitarySpec::scalar_phase(args.theta, *u);
    }
    return *u;
}

json estimate_json(const TraceEstimate &est, const json &exact) {
    return {{"estimate", to_json(est.value)},
            {"exact", exact},
            {"std_error", est.std_error},
            {"std_error_re", est.std_error_re},
            {"std_error_im", est.std_error_im},
            {"shots", est.shots}};
}

int cmd_trace(const TraceArgs &args) {
    std::uint64_t seed = args.seed ? *args.seed : default_seed();
    json config = {{"command", "trace"}, {"protocol", args.protocol}, {"shots", args.shots}};
    UnitarySpec u = trace_unitary(args, config);
    SamplingOptions opts{args.threads};
    json report = {{"dim", u.dim()}};
    if (args.protocol == "bb" || args.protocol == "both") {
        auto est = bb_dqc1_sample(u, args.shots, seed, opts);
        report["blackbox"] = estimate_json(est, bb_dqc1_exact(u));
    }
    if (args.protocol == "standard" || args.protocol == "both") {
        auto est = dqc1_sample(u, args.shots, seed, opts);
        report["standard"] = estimate_json(est, to_json(dqc1_exact(u)));
    }
    // Top-level fields mirror the selected protocol so single-protocol runs read flat.
    const json &primary = report.contains("blackbox") ? report["blackbox"] : report["standard"];
    for (const char *key : {"estimate", "exact", "std_error", "shots"}) {
        report[key] = primary[key];
    }
    emit(dump_report(with_provenance(report, config, seed)), args.output);
    return kExitOk;
}

struct FactorArgs {
    u64 n = 0;
    std::optional<u64> a;
    std::size_t attempts = 500;
    std::optional<std::uint64_t> seed;
    std::string path = "eigen";
    bool all_attempts = false;
    bool no_shortcut = false;
    unsigned threads = 1;
    std::string output;
};

int cmd_factor(const FactorArgs &args) {
    std::uint64_t seed = args.seed ? *args.seed : default_seed();
    FactorOptions opts;
    opts.attempt_cap = args.attempts;
    opts.seed = seed;
    opts.fixed_a = args.a;
    opts.path = args.path == "faithful" ? AttemptPath::Faithful : AttemptPath::Eigenphase;
    opts.classical_shortcut = !args.no_shortcut;
    opts.run_all_attempts = args.all_attempts;
    opts.threads = args.threads;
    json config = {{"command", "factor"},
                   {"N", args.n},
                   {"attempts", args.attempts},
                   {"path", args.path},
                   {"all_attempts", args.all_attempts},
                   {"shortcut", !args.no_shortcut}};
    if (args.a) {
        config["a"] = *args.a;
    }
    check_factoring_input(args.n);
    if (args.a && gcd(*args.a, args.n) != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(*args.a) + ", " + std::to_string(args.n) +
                                               ") = " + std::to_string(gcd(*args.a, args.n)));
    }
    FactoringResult result = factor(args.n, opts);
    json report = to_json(result);
    auto pq = split_semiprime(args.n);
    if (args.a && pq) {
        report["success_lower_bound"] = success_lower_bound(args.n, pq->first, pq->second, *args.a).value;
    } else {
        report["success_lower_bound"] = nullptr;
    }
    emit(dump_report(with_provenance(report, config, seed)), args.output);
    return kExitOk;
}

struct AnalyzeArgs {
    u64 n = 0;
    u64 a = 0;
    std::string format = "json";
    std::string csv;
    std::string output;
};

int cmd_analyze(const AnalyzeArgs &args) {
    if (args.n < 2 || args.a < 1 || args.a >= args.n) {
        throw Error(ErrorKind::InvalidArgument, "need 1 <= a < N");
    }
    u64 g = gcd(args.a, args.n);
    if (g != 1) {
        std::cerr << "gcd(" << args.a << ", " << args.n << ") = " << g << " is a nontrivial factor of " << args.n
                  << "; no quantum step needed\n";
        std::cout << dump_report(with_provenance(
            {{"n", args.n}, {"a", args.a}, {"gcd", g}, {"factors", {g, args.n / g}}},
            {{"command", "analyze"}, {"N", args.n}, {"a", args.a}}, 0));
        return kExitShortcut;
    }
    auto config = PhaseEstimationConfig::for_modulus(args.n, args.a);
    auto dist = exact_distribution(args.n, args.a, config.t());
    if (!args.csv.empty()) {
        emit(dist.to_csv(), args.csv);
    }
    if (args.format == "csv") {
        emit(dist.to_csv(), args.output);
        return kExitOk;
    }
    json config_json = {{"command", "analyze"}, {"N", args.n}, {"a", args.a}};
    json report = to_json(counting_report(args.n, args.a));
    emit(dump_report(with_provenance(report, config_json, 0)), args.output);
    return kExitOk;
}

struct VerifyArgs {
    bool quick = false;
    bool break_phase = false;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string output;
};

int cmd_verify(const VerifyArgs &args) {
    VerifyOptions opts;
    opts.quick = args.quick;
    opts.break_phase_invariance = args.break_phase;
    opts.seed = args.seed ? *args.seed : default_seed();
    opts.threads = args.threads;
    auto results = run_verification(opts);
    json list = json::array();
    bool ok = true;
    for (const auto &r : results) {
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) {
            ok = false;
            std::cerr << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    json config = {{"command", "verify"}, {"quick", args.quick}, {"break_phase_invariance", args.break_phase}};
    emit(dump_report(with_provenance({{"passed", ok}, {"invariants", list}}, config, opts.seed)), args.output);
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Black-box DQC1 and single-clean-qubit factoring simulator"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    TraceArgs trace;
    auto *trace_cmd = app.add_subcommand("trace", "estimate a normalized trace");
    auto *builtin_opt = trace_cmd->add_option("--builtin", trace.builtin, "identity | modmul | diag")
                            ->check(CLI::IsMember({"identity", "modmul", "diag"}));
    trace_cmd->add_option("--matrix", trace.matrix, "dense unitary JSON file")->excludes(builtin_opt);
    trace_cmd->add_option("--dim", trace.dim, "dimension for --builtin identity");
    trace_cmd->add_option("--a", trace.a, "multiplier for --builtin modmul");
    trace_cmd->add_option("--N", trace.n, "modulus for --builtin modmul");
    trace_cmd->add_option("--phases", trace.phases, "eigenphases for --builtin diag")->delimiter(',');
    trace_cmd->add_option("--theta", trace.theta, "global phase applied to the unitary");
    trace_cmd->add_option("--shots", trace.shots, "number of shots")->check(CLI::PositiveNumber);
    trace_cmd->add_option("--protocol", trace.protocol, "bb | standard | both")
        ->check(CLI::IsMember({"bb", "standard", "both"}));
    trace_cmd->add_option("--seed", trace.seed, "master seed");
    trace_cmd->add_option("--threads", trace.threads, "worker threads")->check(CLI::PositiveNumber);
    trace_cmd->add_option("--output,-o", trace.output, "write report to file");

    FactorArgs fac;
    auto *factor_cmd = app.add_subcommand("factor", "factor N with black-box DQC1 order finding");
    factor_cmd->add_option("N", fac.n, "odd composite, not a prime power")->required();
    factor_cmd->add_option("--a", fac.a, "fix the base a");
    factor_cmd->add_option("--attempts", fac.attempts, "attempt cap")->check(CLI::PositiveNumber);
    factor_cmd->add_option("--seed", fac.seed, "master seed");
    factor_cmd->add_option("--path", fac.path, "eigen | faithful")->check(CLI::IsMember({"eigen", "faithful"}));
    factor_cmd->add_flag("--all-attempts", fac.all_attempts, "run the full cap and report rates");
    factor_cmd->add_flag("--no-shortcut", fac.no_shortcut, "skip the classical gcd(a,N) shortcut");
    factor_cmd->add_option("--threads", fac.threads, "worker threads")->check(CLI::PositiveNumber);
    factor_cmd->add_option("--output,-o", fac.output, "write report to file");

    AnalyzeArgs an;
    auto *analyze_cmd = app.add_subcommand("analyze", "exact outcome distribution and counting report");
    analyze_cmd->add_option("N", an.n, "modulus")->required();
    analyze_cmd->add_option("a", an.a, "base")->required();
    analyze_cmd->add_option("--format", an.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--csv", an.csv, "also write the distribution CSV to this file");
    analyze_cmd->add_option("--output,-o", an.output, "write report to file");

    VerifyArgs ver;
    auto *verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_flag("--quick", ver.quick, "reduced subset");
    verify_cmd->add_flag("--break-phase-invariance", ver.break_phase, "fault injection for harness self-test");
    verify_cmd->add_option("--seed", ver.seed, "master seed");
    verify_cmd->add_option("--threads", ver.threads, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--output,-o", ver.output, "write report to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*trace_cmd) {
            return cmd_trace(trace);
        }
        if (*factor_cmd) {
            return cmd_factor(fac);
        }
        if (*analyze_cmd) {
            return cmd_analyze(an);
        }
        return cmd_verify(ver);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
