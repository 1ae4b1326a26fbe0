#include "slocc/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slocc/classify.h"
#include "slocc/criteria.h"
#include "slocc/error.h"
#include "slocc/invariant.h"
#include "slocc/json_io.h"
#include "slocc/local_ops.h"
#include "slocc/oracle.h"
#include "slocc/signtab.h"
#include "slocc/statevec.h"

namespace slocc::cli {

namespace {

using io::Json;

constexpr double kVerifyTolerance = 1e-8;

struct RunConfig {
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 0;
    int max_qubits = kDefaultMaxQubits;
    int trials = 100;
    int num_qubits = 0;
    int theorem = 0;
    std::string input;
    std::string output;
    std::string ops;
    std::string kind;
    std::string criteria_set = "all";
    std::vector<std::string> files;
    std::string witness;
    int f_max_qubits = kDefaultSignatureFQubits;
    bool star = false;
    bool print_dets = false;
    bool oracle = false;
};

void check_qubits(const RunConfig &cfg, int n) {
    if (n < 1 || n > cfg.max_qubits) {
        throw Error(
            ErrorKind::BadArgs,
            "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(cfg.max_qubits) + "]");
    }
}

void validate(const RunConfig &cfg) {
    if (!(cfg.tolerance > 0) || !std::isfinite(cfg.tolerance)) {
        throw Error(ErrorKind::BadArgs, "--tol must be a positive number");
    }
    if (cfg.trials < 1) {
        throw Error(ErrorKind::BadArgs, "--trials must be >= 1");
    }
    if (cfg.max_qubits < 1 || cfg.max_qubits > kMaxQubits) {
        throw Error(ErrorKind::BadArgs, "--max-n must lie in [1, 30]");
    }
}

StateVector load_state(const RunConfig &cfg, const std::string &path) {
    if (path.empty()) {
        throw Error(ErrorKind::BadArgs, "an input state file is required");
    }
    StateVector state = io::state_from_json(io::read_json_file(path));
    check_qubits(cfg, state.num_qubits());
    return state;
}

void emit(std::ostream &out, const Json &doc) {
    out << doc.dump(2) << '\n';
}

int cmd_make(const RunConfig &cfg, std::ostream &out) {
    auto need_n = [&]() {
        check_qubits(cfg, cfg.num_qubits);
        return cfg.num_qubits;
    };
    std::optional<StateVector> state;
    if (cfg.kind == "ghz") {
        state = ghz(need_n());
    } else if (cfg.kind == "w") {
        state = w_state(need_n());
    } else if (cfg.kind == "cluster-c") {
        state = cluster_c();
    } else if (cfg.kind == "random") {
        state = random_state(need_n(), cfg.seed);
    } else if (cfg.kind == "product") {
        if (cfg.files.size() < 2) {
            throw Error(ErrorKind::BadArgs, "make product needs at least two state files");
        }
        state = load_state(cfg, cfg.files[0]);
        for (std::size_t f = 1; f < cfg.files.size(); f++) {
            StateVector next = load_state(cfg, cfg.files[f]);
            check_qubits(cfg, state->num_qubits() + next.num_qubits());
            state = tensor(*state, next);
        }
    } else if (cfg.kind == "complement") {
        if (cfg.files.size() != 1) {
            throw Error(ErrorKind::BadArgs, "make complement takes exactly one state file");
        }
        state = complement(load_state(cfg, cfg.files[0]));
    } else {
        throw Error(ErrorKind::BadArgs, "unknown state kind '" + cfg.kind + "'");
    }
    Json doc = io::state_to_json(*state);
    if (cfg.output.empty()) {
        emit(out, doc);
    } else {
        io::write_json_file(cfg.output, doc);
        emit(out, Json{{"n", state->num_qubits()}, {"norm", std::sqrt(state->norm_squared())}, {"output", cfg.output}});
    }
    return kExitOk;
}

Json oracle_values(const StateVector &s) {
    Json values = Json::object();
    switch (s.num_qubits()) {
        case 2:
            values["iv2"] = io::complex_to_json(oracle::iv2(s));
            break;
        case 3:
            values["iv3_main"] = io::complex_to_json(oracle::odd3(s, oracle::Odd3Form::Main));
            values["iv3_alt1"] = io::complex_to_json(oracle::odd3(s, oracle::Odd3Form::Alt1));
            values["iv3_alt2"] = io::complex_to_json(oracle::odd3(s, oracle::Odd3Form::Alt2));
            break;
        case 4:
            values["iv4"] = io::complex_to_json(oracle::iv4(s));
            break;
        case 5:
            values["a_star_5"] = io::complex_to_json(oracle::odd5(s));
            break;
        case 6:
            values["iv6"] = io::complex_to_json(oracle::iv6(s));
            break;
        default:
            break;
    }
    return values;
}

int cmd_invariant(const RunConfig &cfg, std::ostream &out) {
    StateVector s = load_state(cfg, cfg.input);
    Json doc = io::report_to_json(invariant_report(s), cfg.tolerance);
    if (cfg.oracle) {
        doc["oracle"] = oracle_values(s);
    }
    emit(out, doc);
    return kExitOk;
}

int cmd_criteria(const RunConfig &cfg, std::ostream &out) {
    StateVector s = load_state(cfg, cfg.input);
    if (cfg.criteria_set != "d" && cfg.criteria_set != "f" && cfg.criteria_set != "all") {
        throw Error(ErrorKind::BadArgs, "--set must be d, f or all");
    }
    int f_cap = cfg.criteria_set == "d" ? 0 : cfg.f_max_qubits;
    CriteriaSignature sig = criteria_signature(s, cfg.tolerance, f_cap);
    Json doc = io::signature_to_json(sig);
    if (cfg.criteria_set == "f") {
        doc.erase("d");
    } else if (cfg.criteria_set == "d") {
        doc.erase("f");
        doc.erase("f_included");
    }
    emit(out, doc);
    return kExitOk;
}

int cmd_enumerate(const RunConfig &cfg, std::ostream &out) {
    check_qubits(cfg, cfg.num_qubits);
    Json tuples = Json::array();
    for (const auto &t : f_enumerate(cfg.num_qubits)) {
        tuples.push_back(io::subscripts_to_json(t));
    }
    emit(out, Json{
                  {"n", cfg.num_qubits},
                  {"count", tuples.size()},
                  {"f_shift_rule", "tuples whose shifted subscripts leave [0, 2^n) are excluded"},
                  {"tuples", std::move(tuples)},
              });
    return kExitOk;
}

int cmd_report(const RunConfig &cfg, std::ostream &out) {
    StateVector s = load_state(cfg, cfg.input);
    InvariantReport report = invariant_report(s);
    Json invariants = io::report_to_json(report, cfg.tolerance);
    Json vanishing = invariants["vanishing"];
    Json criteria = io::signature_to_json(criteria_signature(s, cfg.tolerance, cfg.f_max_qubits));
    emit(out, Json{
                  {"invariants", std::move(invariants)},
                  {"criteria", std::move(criteria)},
                  {"tau", report.tau},
                  {"vanishing", std::move(vanishing)},
              });
    return kExitOk;
}

int cmd_compare(const RunConfig &cfg, std::ostream &out) {
    if (cfg.files.size() != 2) {
        throw Error(ErrorKind::BadArgs, "compare takes exactly two state files");
    }
    StateVector first = load_state(cfg, cfg.files[0]);
    StateVector second = load_state(cfg, cfg.files[1]);
    Verdict verdict = compare(first, second, {cfg.tolerance, cfg.f_max_qubits});
    if (!cfg.witness.empty() && verdict.outcome == Outcome::Undetermined) {
        Verdict witnessed = check_witness(first, second, io::chain_from_json(io::read_json_file(cfg.witness)), cfg.tolerance);
        if (witnessed.outcome == Outcome::EquivalentByConstruction) {
            verdict.outcome = witnessed.outcome;
            verdict.witness = witnessed.witness;
        } else {
            verdict.heuristic_flags.insert(
                verdict.heuristic_flags.end(), witnessed.heuristic_flags.begin(), witnessed.heuristic_flags.end());
        }
    }
    emit(out, io::verdict_to_json(verdict));
    return verdict.outcome == Outcome::ProvablyInequivalent ? kExitInequivalent : kExitOk;
}

int cmd_apply(const RunConfig &cfg, std::ostream &out) {
    StateVector s = load_state(cfg, cfg.input);
    if (cfg.ops.empty()) {
        throw Error(ErrorKind::BadArgs, "apply needs --ops");
    }
    LocalOperatorChain chain = io::chain_from_json(io::read_json_file(cfg.ops));
    StateVector result = apply_chain(chain, s);
    Json state_doc = io::state_to_json(result);
    Json summary{{"n", result.num_qubits()}, {"norm", std::sqrt(result.norm_squared())}};
    if (cfg.print_dets) {
        Json dets = Json::array();
        for (const auto &op : chain) {
            dets.push_back(io::complex_to_json(op.det()));
        }
        summary["dets"] = std::move(dets);
        summary["det_product"] = io::complex_to_json(det_product(chain));
    }
    if (cfg.output.empty()) {
        if (!cfg.print_dets) {
            emit(out, state_doc);
            return kExitOk;
        }
        summary["state"] = std::move(state_doc);
    } else {
        io::write_json_file(cfg.output, state_doc);
        summary["output"] = cfg.output;
    }
    emit(out, summary);
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    check_qubits(cfg, cfg.num_qubits);
    TheoremCheck check;
    if (cfg.theorem == 1) {
        check = verify_theorem1(cfg.num_qubits, cfg.trials, cfg.seed);
    } else if (cfg.theorem == 2) {
        check = verify_theorem2(cfg.num_qubits, cfg.trials, cfg.seed);
    } else {
        throw Error(ErrorKind::BadArgs, "--theorem must be 1 or 2");
    }
    emit(out, io::theorem_check_to_json(check, kVerifyTolerance));
    return check.passed(kVerifyTolerance) ? kExitOk : kExitVerifyFailed;
}

int cmd_signs(const RunConfig &cfg, std::ostream &out) {
    if (cfg.num_qubits < 2 || cfg.num_qubits > cfg.max_qubits) {
        throw Error(ErrorKind::BadArgs, "signs needs 2 <= n <= --max-n");
    }
    auto table = cfg.star ? sign_star_table(cfg.num_qubits) : sign_table(cfg.num_qubits);
    Json values = Json::array();
    for (auto v : table) {
        values.push_back(static_cast<int>(v));
    }
    out << values.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"SLOCC invariants and residual entanglement for n-qubit pure states", "slocc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", cfg.tolerance, "Vanishing tolerance")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--max-n", cfg.max_qubits, "Largest accepted qubit count")->capture_default_str();

    auto *make = app.add_subcommand("make", "Write a state file");
    make->add_option("kind", cfg.kind, "ghz | w | cluster-c | random | product | complement")->required();
    make->add_option("files", cfg.files, "Input state files for product/complement");
    make->add_option("--n", cfg.num_qubits, "Qubit count");
    make->add_option("-o,--output", cfg.output, "Output path (stdout when omitted)");

    auto *invariant = app.add_subcommand("invariant", "Invariant report for a state");
    invariant->add_option("-i,--input", cfg.input)->required();
    invariant->add_flag("--oracle", cfg.oracle, "Also print the closed-form small-n expressions");

    auto *criteria = app.add_subcommand("criteria", "D/F criteria for a state");
    criteria->add_option("-i,--input", cfg.input);
    criteria->add_option("--set", cfg.criteria_set, "d | f | all")->capture_default_str();
    criteria->add_option("--f-max-n", cfg.f_max_qubits, "Skip F values above this qubit count")
        ->capture_default_str();
    auto *enumerate = criteria->add_subcommand("enumerate", "List F-criterion subscript tuples");
    enumerate->add_option("--n", cfg.num_qubits)->required();

    auto *report = app.add_subcommand("report", "Invariants and criteria in one document");
    report->add_option("-i,--input", cfg.input)->required();
    report->add_option("--f-max-n", cfg.f_max_qubits)->capture_default_str();

    auto *cmp = app.add_subcommand("compare", "Compare two states (exit 2 when provably inequivalent)");
    cmp->add_option("files", cfg.files)->required()->expected(2);
    cmp->add_option("--witness", cfg.witness, "Operator file claimed to map the first state onto the second");
    cmp->add_option("--f-max-n", cfg.f_max_qubits)->capture_default_str();

    auto *apply = app.add_subcommand("apply", "Apply a local operator chain");
    apply->add_option("-i,--input", cfg.input)->required();
    apply->add_option("--ops", cfg.ops)->required();
    apply->add_option("-o,--output", cfg.output);
    apply->add_flag("--print-dets", cfg.print_dets);

    auto *verify = app.add_subcommand("verify", "Check an invariant transform law on random trials");
    verify->add_option("--theorem", cfg.theorem)->required();
    verify->add_option("--n", cfg.num_qubits)->required();
    verify->add_option("--trials", cfg.trials)->capture_default_str();

    auto *signs = app.add_subcommand("signs", "Dump a sign table as JSON");
    signs->add_option("--n", cfg.num_qubits)->required();
    signs->add_flag("--star", cfg.star);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        validate(cfg);
        if (make->parsed()) {
            return cmd_make(cfg, out);
        }
        if (invariant->parsed()) {
            return cmd_invariant(cfg, out);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(cfg, out);
        }
        if (criteria->parsed()) {
            return cmd_criteria(cfg, out);
        }
        if (report->parsed()) {
            return cmd_report(cfg, out);
        }
        if (cmp->parsed()) {
            return cmd_compare(cfg, out);
        }
        if (apply->parsed()) {
            return cmd_apply(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        if (signs->parsed()) {
            return cmd_signs(cfg, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace slocc::cli
