#include "slocc/statevec.h"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "slocc/error.h"

namespace slocc {

namespace {

void check_qubit_count(int num_qubits, int minimum) {
    if (num_qubits < minimum || num_qubits > kMaxQubits) {
        throw Error(
            num_qubits < minimum ? ErrorKind::TooFewQubits : ErrorKind::BadArgs,
            "qubit count " + std::to_string(num_qubits) + " outside [" + std::to_string(minimum) + ", " +
                std::to_string(kMaxQubits) + "]");
    }
}

double sum_of_squares(const std::vector<Complex> &amplitudes) {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw Error(ErrorKind::BadArgs, "qubit count " + std::to_string(num_qubits_) + " is not supported");
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw Error(
            ErrorKind::LengthMismatch, "expected " + std::to_string(std::size_t{1} << num_qubits_) +
                                           " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    norm_squared_ = sum_of_squares(amplitudes_);
    normalized_ = std::abs(norm_squared_ - 1.0) <= kNormalizedTolerance;
}

StateVector new_state(int num_qubits, std::vector<Complex> amplitudes) {
    StateVector state(num_qubits, std::move(amplitudes));
    if (state.norm_squared() == 0) {
        throw Error(ErrorKind::AllZero, "all amplitudes are zero");
    }
    return state;
}

StateVector normalize(const StateVector &state) {
    double norm = std::sqrt(state.norm_squared());
    if (norm == 0) {
        throw Error(ErrorKind::AllZero, "cannot normalize the zero vector");
    }
    if (std::abs(norm - 1.0) <= 1e-15) {
        return state;
    }
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : out) {
        a /= norm;
    }
    return StateVector(state.num_qubits(), std::move(out));
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
    check_qubit_count(num_qubits, 1);
    std::vector<Complex> amplitudes(std::size_t{1} << num_qubits);
    if (index >= amplitudes.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    amplitudes[index] = 1;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector ghz(int num_qubits) {
    check_qubit_count(num_qubits, 1);
    std::vector<Complex> amplitudes(std::size_t{1} << num_qubits);
    amplitudes.front() = M_SQRT1_2;
    amplitudes.back() = M_SQRT1_2;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector w_state(int num_qubits) {
    check_qubit_count(num_qubits, 2);
    std::vector<Complex> amplitudes(std::size_t{1} << num_qubits);
    double weight = 1.0 / std::sqrt(static_cast<double>(num_qubits));
    for (int k = 0; k < num_qubits; k++) {
        amplitudes[std::size_t{1} << k] = weight;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector cluster_c() {
    std::vector<Complex> amplitudes(16);
    double weight = 1.0 / std::sqrt(6.0);
    for (std::size_t index : {3, 5, 6, 9, 10, 12}) {
        amplitudes[index] = weight;
    }
    return StateVector(4, std::move(amplitudes));
}

StateVector tensor(const StateVector &first, const StateVector &second) {
    int n = first.num_qubits() + second.num_qubits();
    check_qubit_count(n, 1);
    std::vector<Complex> out;
    out.reserve(first.size() * second.size());
    for (const auto &a : first.amplitudes()) {
        for (const auto &b : second.amplitudes()) {
            out.push_back(a * b);
        }
    }
    return StateVector(n, std::move(out));
}

StateVector complement(const StateVector &state) {
    std::size_t mask = state.size() - 1;
    std::vector<Complex> out(state.size());
    for (std::size_t i = 0; i < state.size(); i++) {
        out[mask ^ i] = state[i];
    }
    return StateVector(state.num_qubits(), std::move(out));
}

StateVector random_state(int num_qubits, std::uint64_t seed) {
    check_qubit_count(num_qubits, 1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> amplitudes(std::size_t{1} << num_qubits);
    for (auto &a : amplitudes) {
        double re = dist(rng);
        double im = dist(rng);
        a = {re, im};
    }
    return normalize(new_state(num_qubits, std::move(amplitudes)));
}

StateVector scaled(const StateVector &state, Complex factor) {
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(state.num_qubits(), std::move(out));
}

}  // namespace slocc
