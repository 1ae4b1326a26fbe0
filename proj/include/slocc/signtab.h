#pragma once

#include <cstdint>
#include <span>

namespace slocc {

/// Orientation factor sign(n, i) = +/-1 for 0 <= i < 2^(n-3) (a single index for n = 2, 3).
///
/// sign(2, 0) = sign(3, 0) = 1. For n >= 4 the lower half of the range copies
/// sign(n-1, i); the upper half mirrors the lower half, negated when n is even.
/// Throws IndexOutOfRange outside the domain.
int sign(int num_qubits, std::uint64_t index);

/// sign*(n, i) for 0 <= i < 2^(n-2): sign(n, i) on the lower half, the mirror
/// image sign(n, 2^(n-2)-1-i) on the upper half, and sign*(2, 0) = 1.
int sign_star(int num_qubits, std::uint64_t index);

/// Cached tables of the values above, built once per n and shared read-only.
std::span<const std::int8_t> sign_table(int num_qubits);
std::span<const std::int8_t> sign_star_table(int num_qubits);

/// Evaluates sign(n, i) straight from the recursive definition with no caching.
int sign_recursive(int num_qubits, std::uint64_t index);

}  // namespace slocc
