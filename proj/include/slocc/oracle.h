#pragma once

#include "slocc/statevec.h"

namespace slocc::oracle {

// Closed-form invariants for 2 to 6 qubits with every subscript written out.
// Nothing here touches the sign tables or the general evaluators, so these act
// as an independent check on both. Each function throws SizeMismatch when the
// state has the wrong qubit count.

Complex iv2(const StateVector &state);
Complex iv4(const StateVector &state);
Complex iv6(const StateVector &state);

enum class Odd3Form { Main, Alt1, Alt2 };

/// The three printed forms of the 3-qubit odd invariant.
Complex odd3(const StateVector &state, Odd3Form form);

/// The 5-qubit odd invariant A*.
Complex odd5(const StateVector &state);

}  // namespace slocc::oracle
