#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "slocc/invariant.h"
#include "slocc/statevec.h"

namespace slocc {

/// D-criterion triple for block i, 0 <= i < 2^(n-4).
struct DCriterion {
    std::uint64_t block = 0;
    Complex d1{}, d2{}, d3{};
};

/// Subscripts (i,j,k,l,p,q,r,s) of one F-criterion. Valid tuples have
/// i<j, k<l, p<q, r<s, i<k<p<r, equal pair sums and equal pair XORs, and keep
/// the shifted subscripts of their expression inside [0, 2^n).
struct FSubscripts {
    std::uint64_t i = 0, j = 0, k = 0, l = 0, p = 0, q = 0, r = 0, s = 0;

    std::uint64_t pair_sum() const {
        return i + j;
    }
    /// 1 when i+j is odd, 2 otherwise.
    std::uint64_t shift() const {
        return pair_sum() % 2 == 1 ? 1 : 2;
    }

    auto operator<=>(const FSubscripts &) const = default;
};

/// F enumeration beyond this many qubits is refused (n=8 has ~2.6e7 tuples).
inline constexpr int kMaxEnumeratedFQubits = 7;

/// Default qubit cap for including F values in a signature.
inline constexpr int kDefaultSignatureFQubits = 6;

/// All D-criterion triples. Throws TooFewQubits for n < 4.
std::vector<DCriterion> d_criteria(const StateVector &state);

/// Checks every subscript constraint for an n-qubit state. Tuples whose shifted
/// subscripts leave [0, 2^n) are treated as invalid.
bool is_valid_f_subscripts(const FSubscripts &t, int num_qubits);

/// Every valid tuple, ordered by (i+j, i, k, p, r). Cached per n.
/// Requires 3 <= n <= kMaxEnumeratedFQubits.
const std::vector<FSubscripts> &f_enumerate(int num_qubits);

/// Value of the F expression for tuple `t`, using the j-1/l+1 shift when i+j is
/// odd and the j-2/l+2 shift otherwise.
Complex f_evaluate(const StateVector &state, const FSubscripts &t);

struct FValue {
    FSubscripts subscripts;
    Complex value{};
    bool vanishing = false;
};

struct CriteriaSignature {
    int num_qubits = 0;
    double norm_squared = 0;
    double tolerance = kDefaultTolerance;
    std::vector<DCriterion> d_values;
    /// Per block: whether d1, d2, d3 vanish.
    std::vector<std::array<bool, 3>> d_vanishing;
    /// False when n exceeded the F cap and F values were skipped.
    bool f_included = false;
    std::vector<FValue> f_values;
};

/// Degree-4 vanishing rule: |v| <= tol * max(1, sum |a_i|^2)^2.
bool is_vanishing_degree4(Complex value, double norm_squared, double tol);

/// D values for n >= 4 and F values for 3 <= n <= f_max_qubits.
CriteriaSignature criteria_signature(
    const StateVector &state, double tol = kDefaultTolerance, int f_max_qubits = kDefaultSignatureFQubits);

}  // namespace slocc
