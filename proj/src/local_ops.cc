#include "slocc/local_ops.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "slocc/error.h"
#include "slocc/invariant.h"

namespace slocc {

namespace {

// Plain complex multiply; std::complex's operator* carries NaN/Inf recovery
// that dominates the qubit sweep.
inline Complex mul(Complex x, Complex y) noexcept {
    return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

void apply_to_qubit(const LocalOperator &op, std::vector<Complex> &v, std::size_t stride) {
    const Complex o1 = op.entries[0], o2 = op.entries[1], o3 = op.entries[2], o4 = op.entries[3];
    const std::size_t n = v.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        Complex *lo = v.data() + base;
        Complex *hi = lo + stride;
        for (std::size_t j = 0; j < stride; j++) {
            Complex x0 = lo[j];
            Complex x1 = hi[j];
            lo[j] = mul(o1, x0) + mul(o2, x1);
            hi[j] = mul(o3, x0) + mul(o4, x1);
        }
    }
}

LocalOperator random_operator(std::mt19937_64 &rng, bool unit_det) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    LocalOperator op;
    do {
        for (auto &e : op.entries) {
            double re = dist(rng);
            double im = dist(rng);
            e = {re, im};
        }
    } while (std::abs(op.det()) < 0.1);
    if (unit_det) {
        Complex root = std::sqrt(op.det());
        for (auto &e : op.entries) {
            e /= root;
        }
    }
    return op;
}

struct TrialResult {
    Complex lhs;
    Complex rhs;
};

TheoremCheck run_trials(
    int theorem, int n, int trials, std::uint64_t seed, const std::function<TrialResult(std::uint64_t)> &trial) {
    if (trials < 1) {
        throw Error(ErrorKind::BadArgs, "trial count must be >= 1");
    }
    std::vector<TrialResult> results(trials);
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), trials));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) {
                    results[t] = trial(substream_seed(seed, t));
                }
            });
        }
    }
    TheoremCheck check;
    check.theorem = theorem;
    check.num_qubits = n;
    check.trials = trials;
    for (const auto &r : results) {
        double lhs = std::abs(r.lhs);
        if (lhs < 1e-14) {
            check.degenerate_trials++;
            if (std::abs(r.rhs) >= 1e-12) {
                check.degenerate_failures++;
            }
            continue;
        }
        check.max_relative_error = std::max(check.max_relative_error, std::abs(r.lhs - r.rhs) / lhs);
    }
    return check;
}

}  // namespace

LocalOperator operator*(const LocalOperator &left, const LocalOperator &right) {
    const auto &l = left.entries;
    const auto &r = right.entries;
    return {{
        l[0] * r[0] + l[1] * r[2],
        l[0] * r[1] + l[1] * r[3],
        l[2] * r[0] + l[3] * r[2],
        l[2] * r[1] + l[3] * r[3],
    }};
}

StateVector apply_chain(const LocalOperatorChain &chain, const StateVector &state) {
    int n = state.num_qubits();
    if (chain.size() != static_cast<std::size_t>(n)) {
        throw Error(
            ErrorKind::LengthMismatch,
            "chain has " + std::to_string(chain.size()) + " operators for a " + std::to_string(n) + "-qubit state");
    }
    std::vector<Complex> v(state.amplitudes().begin(), state.amplitudes().end());
    for (int k = 0; k < n; k++) {
        apply_to_qubit(chain[k], v, std::size_t{1} << (n - 1 - k));
    }
    return StateVector(n, std::move(v));
}

Complex det_product(const LocalOperatorChain &chain) {
    Complex product = 1;
    for (const auto &op : chain) {
        product *= op.det();
    }
    return product;
}

LocalOperatorChain random_chain(int n, std::uint64_t seed, bool unit_det) {
    if (n < 1) {
        throw Error(ErrorKind::TooFewQubits, "a chain needs at least one operator");
    }
    std::mt19937_64 rng(seed);
    LocalOperatorChain chain;
    chain.reserve(n);
    for (int k = 0; k < n; k++) {
        chain.push_back(random_operator(rng, unit_det));
    }
    return chain;
}

LocalOperatorChain compose(const LocalOperatorChain &first, const LocalOperatorChain &second) {
    if (first.size() != second.size()) {
        throw Error(ErrorKind::LengthMismatch, "cannot compose chains of different length");
    }
    LocalOperatorChain out;
    out.reserve(first.size());
    for (std::size_t k = 0; k < first.size(); k++) {
        out.push_back(second[k] * first[k]);
    }
    return out;
}

LocalOperatorChain pauli_x_chain(int n) {
    return LocalOperatorChain(static_cast<std::size_t>(n), LocalOperator::pauli_x());
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over seed + index.
    std::uint64_t z = seed + index + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

TheoremCheck verify_theorem1(int n, int trials, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) {
        throw Error(ErrorKind::ParityError, "theorem 1 applies to even n >= 2, got " + std::to_string(n));
    }
    return run_trials(1, n, trials, seed, [n](std::uint64_t trial_seed) {
        StateVector b = random_state(n, trial_seed);
        LocalOperatorChain chain = random_chain(n, substream_seed(trial_seed, 1), false);
        StateVector a = apply_chain(chain, b);
        return TrialResult{iv_star(a), iv_star(b) * det_product(chain)};
    });
}

TheoremCheck verify_theorem2(int n, int trials, std::uint64_t seed) {
    if (n < 3 || n % 2 != 1) {
        throw Error(ErrorKind::ParityError, "theorem 2 applies to odd n >= 3, got " + std::to_string(n));
    }
    return run_trials(2, n, trials, seed, [n](std::uint64_t trial_seed) {
        StateVector b = random_state(n, trial_seed);
        LocalOperatorChain chain = random_chain(n, substream_seed(trial_seed, 1), false);
        StateVector a = apply_chain(chain, b);
        Complex dets = det_product(chain);
        return TrialResult{odd_invariant(a), odd_invariant(b) * dets * dets};
    });
}

}  // namespace slocc
