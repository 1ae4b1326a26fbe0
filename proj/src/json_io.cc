#include "slocc/json_io.h"

#include <cmath>
#include <fstream>
#include <string>

#include "slocc/error.h"

namespace slocc::io {

namespace {

double finite_number(const Json &value, const char *what) {
    if (!value.is_number()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be a number");
    }
    double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw Error(ErrorKind::ParseError, std::string(what) + " is not finite");
    }
    return x;
}

}  // namespace

Json complex_to_json(Complex value) {
    return Json::array({value.real(), value.imag()});
}

Complex complex_from_json(const Json &value) {
    if (!value.is_array() || value.size() != 2) {
        throw Error(ErrorKind::ParseError, "complex numbers are encoded as [re, im]");
    }
    return {finite_number(value[0], "real part"), finite_number(value[1], "imaginary part")};
}

Json state_to_json(const StateVector &state) {
    Json amplitudes = Json::array();
    for (const auto &a : state.amplitudes()) {
        amplitudes.push_back(complex_to_json(a));
    }
    return Json{{"n", state.num_qubits()}, {"amplitudes", std::move(amplitudes)}};
}

StateVector state_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
        throw Error(ErrorKind::ParseError, "state document needs \"n\" and \"amplitudes\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw Error(ErrorKind::ParseError, "\"n\" must be an integer");
    }
    int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorKind::ParseError, "\"n\" must lie in [1, 30]");
    }
    const Json &amps = doc["amplitudes"];
    if (!amps.is_array()) {
        throw Error(ErrorKind::ParseError, "\"amplitudes\" must be an array");
    }
    std::vector<Complex> amplitudes;
    amplitudes.reserve(amps.size());
    for (const auto &a : amps) {
        amplitudes.push_back(complex_from_json(a));
    }
    return new_state(n, std::move(amplitudes));
}

Json chain_to_json(const LocalOperatorChain &chain) {
    Json ops = Json::array();
    for (const auto &op : chain) {
        Json entries = Json::array();
        for (const auto &e : op.entries) {
            entries.push_back(complex_to_json(e));
        }
        ops.push_back(std::move(entries));
    }
    return Json{{"ops", std::move(ops)}};
}

LocalOperatorChain chain_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("ops") || !doc["ops"].is_array()) {
        throw Error(ErrorKind::ParseError, "operator document needs an \"ops\" array");
    }
    LocalOperatorChain chain;
    for (const auto &entries : doc["ops"]) {
        if (!entries.is_array() || entries.size() != 4) {
            throw Error(ErrorKind::ParseError, "each operator is four row-major complex entries");
        }
        LocalOperator op;
        for (std::size_t e = 0; e < 4; e++) {
            op.entries[e] = complex_from_json(entries[e]);
        }
        chain.push_back(op);
    }
    return chain;
}

Json report_to_json(const InvariantReport &report, double tol) {
    double scale = report.norm_squared;
    Json out{
        {"n", report.num_qubits},
        {"parity", report.parity == Parity::Even ? "even" : "odd"},
        {"norm_squared", report.norm_squared},
        {"iv_star", complex_to_json(report.iv_star)},
        {"iv_bar", nullptr},
        {"iv_star_shifted", nullptr},
        {"odd_invariant", nullptr},
        {"tau", report.tau},
    };
    Json vanishing{
        {"iv_star", is_vanishing(report.iv_star, scale, tol)},
        {"tau", tau_vanishes(report, tol)},
    };
    if (report.parity == Parity::Odd) {
        out["iv_bar"] = complex_to_json(*report.iv_bar);
        out["iv_star_shifted"] = complex_to_json(*report.iv_star_shifted);
        out["odd_invariant"] = complex_to_json(*report.odd_invariant);
        vanishing["iv_bar"] = is_vanishing(*report.iv_bar, scale, tol);
        vanishing["iv_star_shifted"] = is_vanishing(*report.iv_star_shifted, scale, tol);
        vanishing["odd_invariant"] = is_vanishing(*report.odd_invariant, scale, tol);
    }
    out["tolerance"] = tol;
    out["vanishing"] = std::move(vanishing);
    return out;
}

Json subscripts_to_json(const FSubscripts &t) {
    return Json::array({t.i, t.j, t.k, t.l, t.p, t.q, t.r, t.s});
}

Json d_criteria_to_json(const CriteriaSignature &sig) {
    Json d = Json::array();
    for (std::size_t b = 0; b < sig.d_values.size(); b++) {
        const auto &v = sig.d_values[b];
        d.push_back({
            {"block", v.block},
            {"d1", complex_to_json(v.d1)},
            {"d2", complex_to_json(v.d2)},
            {"d3", complex_to_json(v.d3)},
            {"vanishing", Json::array({sig.d_vanishing[b][0], sig.d_vanishing[b][1], sig.d_vanishing[b][2]})},
        });
    }
    return d;
}

Json f_criteria_to_json(const CriteriaSignature &sig) {
    Json f = Json::array();
    for (const auto &v : sig.f_values) {
        f.push_back({
            {"subscripts", subscripts_to_json(v.subscripts)},
            {"value", complex_to_json(v.value)},
            {"vanishing", v.vanishing},
        });
    }
    return f;
}

Json signature_to_json(const CriteriaSignature &sig) {
    return Json{
        {"n", sig.num_qubits},
        {"norm_squared", sig.norm_squared},
        {"tolerance", sig.tolerance},
        {"d", d_criteria_to_json(sig)},
        {"f_included", sig.f_included},
        {"f", f_criteria_to_json(sig)},
        {"f_shift_rule", "tuples whose shifted subscripts leave [0, 2^n) are excluded"},
    };
}

Json verdict_to_json(const Verdict &verdict) {
    Json evidence = Json::array();
    for (const auto &e : verdict.evidence) {
        evidence.push_back({
            {"criterion", e.criterion},
            {"values", Json::array({complex_to_json(e.first), complex_to_json(e.second)})},
            {"vanishing", Json::array({e.first_vanishing, e.second_vanishing})},
        });
    }
    Json out{
        {"outcome", outcome_name(verdict.outcome)},
        {"evidence", std::move(evidence)},
        {"heuristic_flags", verdict.heuristic_flags},
        {"heuristic_note", "D/F pattern differences are informational and never decide the outcome"},
    };
    out["witness"] = verdict.witness ? chain_to_json(*verdict.witness) : Json(nullptr);
    return out;
}

Json theorem_check_to_json(const TheoremCheck &check, double tolerance) {
    return Json{
        {"theorem", check.theorem},
        {"n", check.num_qubits},
        {"trials", check.trials},
        {"max_relative_error", check.max_relative_error},
        {"degenerate_trials", check.degenerate_trials},
        {"degenerate_failures", check.degenerate_failures},
        {"tolerance", tolerance},
        {"passed", check.passed(tolerance)},
    };
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IOError, "cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IOError, "cannot write " + path.string());
    }
    out << doc.dump() << '\n';
    if (!out) {
        throw Error(ErrorKind::IOError, "failed writing " + path.string());
    }
}

}  // namespace slocc::io
