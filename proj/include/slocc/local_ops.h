#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "slocc/statevec.h"

namespace slocc {

/// A 2x2 complex operator acting on one qubit, stored row-major as
/// (o1 o2 / o3 o4).
struct LocalOperator {
    std::array<Complex, 4> entries{Complex{1}, Complex{0}, Complex{0}, Complex{1}};

    Complex det() const noexcept {
        return entries[0] * entries[3] - entries[1] * entries[2];
    }

    static LocalOperator identity() {
        return {};
    }
    static LocalOperator pauli_x() {
        return {{Complex{0}, Complex{1}, Complex{1}, Complex{0}}};
    }
    static LocalOperator diagonal(Complex top, Complex bottom) {
        return {{top, Complex{0}, Complex{0}, bottom}};
    }

    bool operator==(const LocalOperator &) const = default;
};

/// Matrix product `left * right` (apply `right` first).
LocalOperator operator*(const LocalOperator &left, const LocalOperator &right);

/// One operator per qubit; position k acts on qubit k+1 (qubit 1 is the MSB).
using LocalOperatorChain = std::vector<LocalOperator>;

/// Applies the tensor product of `chain` to `state` one qubit at a time in
/// O(n 2^n), sweeping qubit 1 through qubit n.
StateVector apply_chain(const LocalOperatorChain &chain, const StateVector &state);

/// Product of the per-qubit determinants.
Complex det_product(const LocalOperatorChain &chain);

/// Entries with real and imaginary parts uniform in [-1, 1]; operators with
/// |det| < 0.1 are redrawn. With `unit_det` each operator is divided by the
/// principal square root of its determinant.
LocalOperatorChain random_chain(int num_qubits, std::uint64_t seed, bool unit_det);

/// Per-qubit products `second[k] * first[k]`: the chain equivalent to applying
/// `first` and then `second`.
LocalOperatorChain compose(const LocalOperatorChain &first, const LocalOperatorChain &second);

/// X on every qubit.
LocalOperatorChain pauli_x_chain(int num_qubits);

/// Seed of the independent random stream used by trial `index`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Outcome of checking an invariant's transform law over random trials.
struct TheoremCheck {
    int theorem = 0;
    int num_qubits = 0;
    int trials = 0;
    /// max |lhs - rhs| / |lhs| over trials where |lhs| >= 1e-14.
    double max_relative_error = 0;
    /// Trials where |lhs| < 1e-14; those require both sides below 1e-12 instead.
    int degenerate_trials = 0;
    int degenerate_failures = 0;

    bool passed(double tolerance) const {
        return degenerate_failures == 0 && max_relative_error <= tolerance;
    }
};

/// Checks IV*(a,n) = IV*(b,n) * prod det over seeded random states b and chains,
/// with a = chain(b). n even, n >= 2.
TheoremCheck verify_theorem1(int num_qubits, int trials, std::uint64_t seed);

/// Checks odd_invariant(a) = odd_invariant(b) * prod det^2. n odd, n >= 3.
TheoremCheck verify_theorem2(int num_qubits, int trials, std::uint64_t seed);

}  // namespace slocc
