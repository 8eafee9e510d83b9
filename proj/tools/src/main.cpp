// Copyright 2026 The emguard Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * `emguard` command-line entry point.
 *
 * Exit codes: 0 success, 1 check failure, 2 usage or invalid input, 3 I/O.
 */
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emguard/attack.hpp"
#include "emguard/attack_io.hpp"
#include "emguard/constraints.hpp"
#include "emguard/eavesdrop.hpp"
#include "emguard/optimizer.hpp"
#include "emguard/reports.hpp"
#include "emguard/rng.hpp"
#include "emguard/verify.hpp"

namespace {

using namespace emguard;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

/// Raised for flag combinations CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    unsigned threads = 1;
};

void add_common(CLI::App &cmd, CommonOptions &common) {
    cmd.add_option("--seed", common.seed, "64-bit RNG seed")->capture_default_str();
    cmd.add_option("--out", common.out, "Write the report here instead of stdout");
    cmd.add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd.add_option("--threads", common.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1U, 256U))
        ->capture_default_str();
}

void emit(const CommonOptions &common, const std::string &text) {
    if (common.out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        write_text_file(common.out, text);
    }
}

void require_json(const CommonOptions &common, const char *command) {
    if (common.format != "json") {
        throw UsageError(std::string(command) + ": only --format json is supported");
    }
}

std::string quote_csv(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::size_t d_max = 9;
    bool corrupt_qft = false;
};

int run_verify(const CommonOptions &common, const VerifyArgs &args) {
    if (args.d_max < 2 || args.d_max > 16) {
        throw UsageError("verify: --d-max must be in 2..16");
    }
    VerifyOptions opts;
    opts.d_max = args.d_max;
    opts.seed = common.seed;
    opts.corrupt_qft = args.corrupt_qft;
    const std::vector<CheckResult> results = run_verification(opts);

    if (common.format == "csv") {
        std::ostringstream out;
        out << "check,passed,detail\n";
        for (const CheckResult &r : results) {
            out << quote_csv(r.name) << "," << (r.passed ? "true" : "false") << ","
                << quote_csv(r.detail) << "\n";
        }
        emit(common, out.str());
    } else {
        emit(common, verification_to_json(results));
    }

    bool ok = true;
    for (const CheckResult &r : results) {
        if (!r.passed) {
            std::cerr << "emguard verify: check failed: " << r.name << ": " << r.detail << "\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// decoy

struct DecoyArgs {
    std::size_t d = 2;
    std::size_t d_anc = 2;
    std::string attack = "identity";
    std::vector<double> params;
    std::uint64_t trials = 10000;
    std::string save_attack;
};

AttackUnitary build_attack(const DecoyArgs &args, std::uint64_t seed) {
    if (args.attack == "identity") {
        return identity_attack(args.d, args.d_anc);
    }
    if (args.attack == "controlled-shift") {
        return controlled_shift_attack(args.d);
    }
    if (args.attack == "haar") {
        RngStream rng = make_stream(seed);
        return random_attack(args.d, args.d_anc, rng);
    }
    if (args.attack == "params") {
        const std::size_t want = attack_param_count(args.d, args.d_anc);
        if (args.params.size() != want) {
            throw UsageError("decoy: --params needs " + std::to_string(want) + " values, got " +
                             std::to_string(args.params.size()));
        }
        return parameterized_attack(args.d, args.d_anc, args.params);
    }
    return load_attack(args.attack);
}

int run_decoy(const CommonOptions &common, const DecoyArgs &args) {
    if (args.trials == 0) {
        throw UsageError("decoy: --trials must be >= 1");
    }
    const AttackUnitary atk = build_attack(args, common.seed);
    if (!args.save_attack.empty()) {
        save_attack(args.save_attack, atk);
    }
    const DetectionReport report = simulate_decoy_round(atk, args.trials, common.seed, common.threads);
    emit(common, common.format == "csv" ? to_csv(report) : to_json(report));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// ghz

struct GhzArgs {
    std::size_t d = 2;
    std::size_t n = 2;
    std::string eps = "equal";
    std::string mode = "random";
    std::uint64_t trials = 10000;
};

std::vector<CVector> build_eps(const GhzArgs &args) {
    std::vector<CVector> eps;
    if (args.eps == "equal") {
        // Every branch leaves the same ancilla behind.
        CVector zero(args.d, Complex{0.0, 0.0});
        zero[0] = 1.0;
        eps.assign(args.d, zero);
    } else if (args.eps == "orthogonal") {
        for (std::size_t j = 0; j < args.d; ++j) {
            CVector e(args.d, Complex{0.0, 0.0});
            e[j] = 1.0;
            eps.push_back(std::move(e));
        }
    } else {
        eps = load_eps(args.eps);
    }
    return eps;
}

int run_ghz(const CommonOptions &common, const GhzArgs &args) {
    if (args.trials == 0) {
        throw UsageError("ghz: --trials must be >= 1");
    }
    const std::vector<CVector> eps = build_eps(args);
    const JointAncillaState state = ghz_joint_ancilla(args.d, args.n, eps);
    ModePolicy policy;
    if (args.mode == "all-equal") {
        policy = CheckMode::AllEqual;
    } else if (args.mode == "sum-mod") {
        policy = CheckMode::SumModZero;
    }
    const DetectionReport report =
        simulate_ghz_round(state, args.trials, policy, common.seed, common.threads);
    emit(common, common.format == "csv" ? to_csv(report) : to_json(report));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// constraints

struct ConstraintArgs {
    std::size_t d = 2;
    std::string sign = "neg";
};

int run_constraints(const CommonOptions &common, const ConstraintArgs &args) {
    require_json(common, "constraints");
    const ExponentSign sign = args.sign == "pos" ? ExponentSign::Positive : ExponentSign::Negative;
    emit(common, to_json(analyze_constraints(args.d, sign)));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeArgs {
    std::size_t d = 2;
    std::size_t d_anc = 2;
    std::vector<double> caps{1.0, 0.1, 0.01, 1e-3, 1e-4};
    std::size_t restarts = 8;
    std::size_t max_evals = 2000;
    double penalty = 1e3;
};

int run_optimize(const CommonOptions &common, const OptimizeArgs &args) {
    if (args.caps.empty()) {
        throw UsageError("optimize: --caps must list at least one cap");
    }
    for (std::size_t i = 0; i < args.caps.size(); ++i) {
        if (!(args.caps[i] > 0.0)) {
            throw UsageError("optimize: caps must be positive");
        }
        if (i > 0 && !(args.caps[i] < args.caps[i - 1])) {
            throw UsageError("optimize: --caps must be strictly descending");
        }
    }
    OptimizerConfig cfg;
    cfg.d = args.d;
    cfg.d_anc = args.d_anc;
    cfg.restarts = args.restarts;
    cfg.max_evals = args.max_evals;
    cfg.penalty_weight = args.penalty;
    cfg.seed = common.seed;
    validate(cfg);
    const std::vector<TradeoffPoint> curve = tradeoff_curve(cfg, args.caps, common.threads);
    emit(common, common.format == "csv" ? curve_to_csv(cfg, curve) : curve_to_json(cfg, curve));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"emguard: eavesdropping analysis for qudit entanglement-measurement attacks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");
    app.allow_config_extras(false);
    app.set_version_flag("--version", "emguard 0.1.0");

    CommonOptions common;

    VerifyArgs verify_args;
    CLI::App *verify = app.add_subcommand("verify", "Run the cross-module invariant sweep");
    add_common(*verify, common);
    verify->add_option("--d-max", verify_args.d_max, "Largest qudit level swept")
        ->capture_default_str();
    verify->add_flag("--corrupt-qft", verify_args.corrupt_qft)->group("");

    DecoyArgs decoy_args;
    CLI::App *decoy = app.add_subcommand("decoy", "Decoy-particle detection and leakage");
    add_common(*decoy, common);
    decoy->add_option("--d", decoy_args.d, "Qudit level")->check(CLI::Range(2, 16))
        ->capture_default_str();
    decoy->add_option("--danc", decoy_args.d_anc, "Ancilla level")->check(CLI::Range(2, 64))
        ->capture_default_str();
    decoy->add_option("--attack", decoy_args.attack,
                      "identity | controlled-shift | haar | params | <attack.json>")
        ->capture_default_str();
    decoy->add_option("--params", decoy_args.params, "Generator parameters for --attack params")
        ->delimiter(',');
    decoy->add_option("--trials", decoy_args.trials, "Monte-Carlo trials")->capture_default_str();
    decoy->add_option("--save-attack", decoy_args.save_attack, "Write the attack as JSON");

    GhzArgs ghz_args;
    CLI::App *ghz = app.add_subcommand("ghz", "GHZ correlation-check detection and leakage");
    add_common(*ghz, common);
    ghz->add_option("--d", ghz_args.d, "Qudit level")->check(CLI::Range(2, 16))
        ->capture_default_str();
    ghz->add_option("--n", ghz_args.n, "Particle count")->check(CLI::Range(2, 16))
        ->capture_default_str();
    ghz->add_option("--eps", ghz_args.eps, "equal | orthogonal | <eps.json>")->capture_default_str();
    ghz->add_option("--mode", ghz_args.mode, "Check mode")
        ->check(CLI::IsMember({"all-equal", "sum-mod", "random"}))
        ->capture_default_str();
    ghz->add_option("--trials", ghz_args.trials, "Monte-Carlo rounds")->capture_default_str();

    ConstraintArgs constraint_args;
    CLI::App *constraints = app.add_subcommand("constraints", "No-detection constraint algebra");
    add_common(*constraints, common);
    constraints->add_option("--d", constraint_args.d, "Qudit level")->check(CLI::Range(2, 16))
        ->capture_default_str();
    constraints->add_option("--sign", constraint_args.sign, "Exponent sign")
        ->check(CLI::IsMember({"pos", "neg"}))
        ->capture_default_str();

    OptimizeArgs optimize_args;
    CLI::App *optimize = app.add_subcommand("optimize", "Leakage/detection tradeoff search");
    add_common(*optimize, common);
    optimize->add_option("--d", optimize_args.d, "Qudit level")->check(CLI::Range(2, 16))
        ->capture_default_str();
    optimize->add_option("--danc", optimize_args.d_anc, "Ancilla level")
        ->check(CLI::Range(2, 16))
        ->capture_default_str();
    optimize->add_option("--caps", optimize_args.caps, "Detection caps, descending")
        ->delimiter(',')
        ->capture_default_str();
    optimize->add_option("--restarts", optimize_args.restarts, "Random restarts per cap")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
    optimize->add_option("--max-evals", optimize_args.max_evals, "Evaluations per restart")
        ->check(CLI::Range(1, 10000000))
        ->capture_default_str();
    optimize->add_option("--penalty", optimize_args.penalty, "Penalty weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::FileError &e) {
        std::cerr << "emguard: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return run_verify(common, verify_args);
        }
        if (decoy->parsed()) {
            return run_decoy(common, decoy_args);
        }
        if (ghz->parsed()) {
            return run_ghz(common, ghz_args);
        }
        if (constraints->parsed()) {
            return run_constraints(common, constraint_args);
        }
        return run_optimize(common, optimize_args);
    } catch (const IoError &e) {
        std::cerr << "emguard: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UsageError &e) {
        std::cerr << "emguard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "emguard: invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "emguard: invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "emguard: error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
