#include "slocc/classify.h"

#include <cmath>
#include <string>

#include "slocc/error.h"

namespace slocc {

namespace {

void add_invariant_evidence(
    Verdict &verdict, const InvariantReport &a, const InvariantReport &b, double tol) {
    auto push = [&](const char *name, Complex x, Complex y) {
        verdict.evidence.push_back(
            {name, x, y, is_vanishing(x, a.norm_squared, tol), is_vanishing(y, b.norm_squared, tol)});
    };
    push("tau", a.tau, b.tau);
    push("iv_star", a.iv_star, b.iv_star);
    if (a.parity == Parity::Odd) {
        push("iv_bar", *a.iv_bar, *b.iv_bar);
        push("iv_star_shifted", *a.iv_star_shifted, *b.iv_star_shifted);
        push("odd_invariant", *a.odd_invariant, *b.odd_invariant);
    }
}

std::string subscripts_label(const FSubscripts &t) {
    std::string out = "F(";
    for (auto v : {t.i, t.j, t.k, t.l, t.p, t.q, t.r, t.s}) {
        out += std::to_string(v);
        out += ',';
    }
    out.back() = ')';
    return out;
}

const char *pattern_word(bool vanishing) {
    return vanishing ? "vanishing" : "nonvanishing";
}

void add_heuristic_flags(Verdict &verdict, const CriteriaSignature &a, const CriteriaSignature &b) {
    for (std::size_t block = 0; block < a.d_vanishing.size(); block++) {
        for (int m = 0; m < 3; m++) {
            bool x = a.d_vanishing[block][m];
            bool y = b.d_vanishing[block][m];
            if (x != y) {
                verdict.heuristic_flags.push_back(
                    "D" + std::to_string(m + 1) + "[" + std::to_string(block) + "]: " + pattern_word(x) + " vs " +
                    pattern_word(y));
            }
        }
    }
    if (!a.f_included) {
        return;
    }
    for (std::size_t e = 0; e < a.f_values.size(); e++) {
        bool x = a.f_values[e].vanishing;
        bool y = b.f_values[e].vanishing;
        if (x != y) {
            verdict.heuristic_flags.push_back(
                subscripts_label(a.f_values[e].subscripts) + ": " + pattern_word(x) + " vs " + pattern_word(y));
        }
    }
}

}  // namespace

const char *outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::ProvablyInequivalent:
            return "ProvablyInequivalent";
        case Outcome::Undetermined:
            return "Undetermined";
        case Outcome::EquivalentByConstruction:
            return "EquivalentByConstruction";
    }
    return "Unknown";
}

Verdict compare(const StateVector &first, const StateVector &second, const CompareOptions &options) {
    if (first.num_qubits() != second.num_qubits()) {
        throw Error(
            ErrorKind::SizeMismatch, "cannot compare a " + std::to_string(first.num_qubits()) + "-qubit state with a " +
                                         std::to_string(second.num_qubits()) + "-qubit state");
    }
    InvariantReport a = invariant_report(first);
    InvariantReport b = invariant_report(second);
    Verdict verdict;
    add_invariant_evidence(verdict, a, b, options.tolerance);
    bool a_zero = tau_vanishes(a, options.tolerance);
    bool b_zero = tau_vanishes(b, options.tolerance);
    verdict.outcome = a_zero != b_zero ? Outcome::ProvablyInequivalent : Outcome::Undetermined;
    if (first.num_qubits() >= 3) {
        add_heuristic_flags(
            verdict, criteria_signature(first, options.tolerance, options.f_max_qubits),
            criteria_signature(second, options.tolerance, options.f_max_qubits));
    }
    return verdict;
}

DualWitness dual_equivalence(const StateVector &state) {
    return {complement(state), pauli_x_chain(state.num_qubits())};
}

Verdict check_witness(
    const StateVector &first, const StateVector &second, const LocalOperatorChain &witness, double tolerance) {
    if (first.num_qubits() != second.num_qubits()) {
        throw Error(ErrorKind::SizeMismatch, "witness check needs states of equal size");
    }
    Verdict verdict;
    for (const auto &op : witness) {
        if (std::abs(op.det()) <= 1e-12) {
            verdict.heuristic_flags.push_back("witness contains a singular operator");
            return verdict;
        }
    }
    StateVector image = apply_chain(witness, first);
    double worst = 0;
    for (std::size_t i = 0; i < image.size(); i++) {
        worst = std::max(worst, std::abs(image[i] - second[i]));
    }
    if (worst <= tolerance) {
        verdict.outcome = Outcome::EquivalentByConstruction;
        verdict.witness = witness;
    } else {
        verdict.heuristic_flags.push_back("witness image differs by " + std::to_string(worst));
    }
    return verdict;
}

}  // namespace slocc
