#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace slocc {

using Complex = std::complex<double>;

/// Largest qubit count the library will allocate for (2^30 amplitudes = 16 GiB).
inline constexpr int kMaxQubits = 30;

/// Tolerance behind the `normalized` flag.
inline constexpr double kNormalizedTolerance = 1e-12;

/// An n-qubit pure state as 2^n amplitudes.
///
/// Basis label i is read as the bit string q1 q2 ... qn with qubit 1 in the most
/// significant bit, so indices [0, 2^(n-1)) have qubit 1 in |0> and
/// [2^(n-1), 2^n) have it in |1>. Amplitudes are not required to be normalized;
/// `is_normalized()` reports whether they happen to be.
class StateVector {
   public:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    bool is_normalized() const noexcept {
        return normalized_;
    }
    /// Sum of |a_i|^2.
    double norm_squared() const noexcept {
        return norm_squared_;
    }

    bool operator==(const StateVector &other) const {
        return num_qubits_ == other.num_qubits_ && amplitudes_ == other.amplitudes_;
    }

   private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
    double norm_squared_;
    bool normalized_;
};

/// Validates and wraps raw amplitudes. Throws LengthMismatch when the count is
/// not 2^n and AllZero when every amplitude is zero.
StateVector new_state(int num_qubits, std::vector<Complex> amplitudes);

/// Divides by the Euclidean norm. Returns the input unchanged when the norm is
/// already within 1e-15 of one.
StateVector normalize(const StateVector &state);

StateVector basis_state(int num_qubits, std::uint64_t index);
StateVector ghz(int num_qubits);
StateVector w_state(int num_qubits);

/// The 4-qubit state (|3>+|5>+|6>+|9>+|10>+|12>)/sqrt(6).
StateVector cluster_c();

/// Kronecker product with `first`'s qubits in the most significant positions.
StateVector tensor(const StateVector &first, const StateVector &second);

/// Moves amplitude i to index (2^n - 1) XOR i, i.e. applies X to every qubit.
StateVector complement(const StateVector &state);

/// Real and imaginary parts uniform in [-1, 1], then normalized.
/// Deterministic for a given seed.
StateVector random_state(int num_qubits, std::uint64_t seed);

/// Multiplies every amplitude by `factor`.
StateVector scaled(const StateVector &state, Complex factor);

}  // namespace slocc
