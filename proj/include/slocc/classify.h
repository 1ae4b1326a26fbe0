#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slocc/criteria.h"
#include "slocc/invariant.h"
#include "slocc/local_ops.h"
#include "slocc/statevec.h"

namespace slocc {

enum class Outcome { ProvablyInequivalent, Undetermined, EquivalentByConstruction };

const char *outcome_name(Outcome outcome);

/// One invariant evaluated on both states.
struct Evidence {
    std::string criterion;
    Complex first{};
    Complex second{};
    bool first_vanishing = false;
    bool second_vanishing = false;
};

/// Result of comparing two states.
///
/// ProvablyInequivalent is only emitted when exactly one residual entanglement
/// vanishes; SLOCC operators can rescale tau but never create or destroy it.
/// D/F vanishing-pattern differences land in `heuristic_flags` and never change
/// the outcome.
struct Verdict {
    Outcome outcome = Outcome::Undetermined;
    std::vector<Evidence> evidence;
    std::vector<std::string> heuristic_flags;
    std::optional<LocalOperatorChain> witness;
};

struct CompareOptions {
    double tolerance = kDefaultTolerance;
    /// F patterns are only compared up to this many qubits.
    int f_max_qubits = kDefaultSignatureFQubits;
};

/// Throws SizeMismatch when the qubit counts differ.
Verdict compare(const StateVector &first, const StateVector &second, const CompareOptions &options = {});

struct DualWitness {
    StateVector dual;
    LocalOperatorChain witness;
};

/// The complement state together with the X-on-every-qubit chain mapping the
/// input onto it.
DualWitness dual_equivalence(const StateVector &state);

/// EquivalentByConstruction when apply_chain(witness, first) matches `second`
/// within `tolerance` (max-abs over amplitudes) and every operator is
/// invertible; Undetermined otherwise.
Verdict check_witness(
    const StateVector &first, const StateVector &second, const LocalOperatorChain &witness, double tolerance);

}  // namespace slocc
