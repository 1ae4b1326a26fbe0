#include "slocc/criteria.h"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>

#include "slocc/error.h"

namespace slocc {

namespace {

struct FCache {
    std::array<std::once_flag, kMaxEnumeratedFQubits + 1> once;
    std::array<std::vector<FSubscripts>, kMaxEnumeratedFQubits + 1> tuples;
};

FCache &f_cache() {
    static FCache cache;
    return cache;
}

bool shifted_in_range(const FSubscripts &t, std::uint64_t size) {
    std::uint64_t d = t.shift();
    return t.j >= d && t.q >= d && t.l + d < size && t.s + d < size;
}

std::vector<FSubscripts> build_f_tuples(int n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<FSubscripts> out;
    for (std::uint64_t sum = 1; sum + 1 < 2 * size; sum++) {
        // Low members of the pairs (x, sum - x), grouped by x XOR (sum - x).
        std::map<std::uint64_t, std::vector<std::uint64_t>> by_xor;
        std::uint64_t start = sum >= size ? sum - size + 1 : 0;
        for (std::uint64_t x = start; 2 * x < sum; x++) {
            by_xor[x ^ (sum - x)].push_back(x);
        }
        std::size_t first_of_sum = out.size();
        for (const auto &[_, lows] : by_xor) {
            std::size_t m = lows.size();
            for (std::size_t a = 0; a < m; a++) {
                for (std::size_t b = a + 1; b < m; b++) {
                    for (std::size_t c = b + 1; c < m; c++) {
                        for (std::size_t d = c + 1; d < m; d++) {
                            FSubscripts t{
                                lows[a], sum - lows[a], lows[b], sum - lows[b],
                                lows[c], sum - lows[c], lows[d], sum - lows[d]};
                            if (shifted_in_range(t, size)) {
                                out.push_back(t);
                            }
                        }
                    }
                }
            }
        }
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(first_of_sum), out.end());
    }
    return out;
}

}  // namespace

std::vector<DCriterion> d_criteria(const StateVector &state) {
    int n = state.num_qubits();
    if (n < 4) {
        throw Error(ErrorKind::TooFewQubits, "D-criteria need at least 4 qubits, got " + std::to_string(n));
    }
    auto a = state.amplitudes();
    const std::uint64_t size = a.size();
    std::vector<DCriterion> out;
    out.reserve(size >> 4);
    for (std::uint64_t block = 0; block < (size >> 4); block++) {
        const std::uint64_t b = 8 * block;
        const std::uint64_t t = size - 8 * block;
        DCriterion d;
        d.block = block;
        d.d1 = (a[1 + b] * a[4 + b] - a[0 + b] * a[5 + b]) * (a[t - 5] * a[t - 2] - a[t - 6] * a[t - 1]) -
               (a[3 + b] * a[6 + b] - a[2 + b] * a[7 + b]) * (a[t - 7] * a[t - 4] - a[t - 8] * a[t - 3]);
        d.d2 = (a[4 + b] * a[7 + b] - a[5 + b] * a[6 + b]) * (a[t - 8] * a[t - 5] - a[t - 7] * a[t - 6]) -
               (a[0 + b] * a[3 + b] - a[1 + b] * a[2 + b]) * (a[t - 4] * a[t - 1] - a[t - 3] * a[t - 2]);
        d.d3 = (a[3 + b] * a[5 + b] - a[1 + b] * a[7 + b]) * (a[t - 6] * a[t - 4] - a[t - 8] * a[t - 2]) -
               (a[2 + b] * a[4 + b] - a[0 + b] * a[6 + b]) * (a[t - 5] * a[t - 3] - a[t - 7] * a[t - 1]);
        out.push_back(d);
    }
    return out;
}

bool is_valid_f_subscripts(const FSubscripts &t, int n) {
    if (n < 1 || n > kMaxQubits) {
        return false;
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    if (!(t.i < t.j && t.k < t.l && t.p < t.q && t.r < t.s)) {
        return false;
    }
    if (!(t.i < t.k && t.k < t.p && t.p < t.r)) {
        return false;
    }
    std::uint64_t sum = t.i + t.j;
    if (t.k + t.l != sum || t.p + t.q != sum || t.r + t.s != sum) {
        return false;
    }
    std::uint64_t x = t.i ^ t.j;
    if ((t.k ^ t.l) != x || (t.p ^ t.q) != x || (t.r ^ t.s) != x) {
        return false;
    }
    return t.j < size && t.l < size && t.q < size && t.s < size && shifted_in_range(t, size);
}

const std::vector<FSubscripts> &f_enumerate(int n) {
    if (n < 3 || n > kMaxEnumeratedFQubits) {
        throw Error(
            ErrorKind::BadArgs, "F-criteria enumeration supports 3 <= n <= " +
                                    std::to_string(kMaxEnumeratedFQubits) + ", got " + std::to_string(n));
    }
    auto &cache = f_cache();
    std::call_once(cache.once[n], [&] { cache.tuples[n] = build_f_tuples(n); });
    return cache.tuples[n];
}

Complex f_evaluate(const StateVector &state, const FSubscripts &t) {
    if (!is_valid_f_subscripts(t, state.num_qubits())) {
        throw Error(ErrorKind::IndexOutOfRange, "subscripts are not a valid F-criterion tuple for this state");
    }
    const auto &a = state.amplitudes();
    const std::uint64_t d = t.shift();
    Complex head = a[t.i] * a[t.j] + a[t.k] * a[t.l] - a[t.p] * a[t.q] - a[t.r] * a[t.s];
    Complex left = a[t.i] * a[t.j - d] - a[t.p] * a[t.q - d];
    Complex right = a[t.k] * a[t.l + d] - a[t.r] * a[t.s + d];
    return head * head - 4.0 * left * right;
}

bool is_vanishing_degree4(Complex value, double norm_squared, double tol) {
    double scale = std::max(1.0, norm_squared);
    return std::abs(value) <= tol * scale * scale;
}

CriteriaSignature criteria_signature(const StateVector &state, double tol, int f_max_qubits) {
    CriteriaSignature sig;
    sig.num_qubits = state.num_qubits();
    sig.norm_squared = state.norm_squared();
    sig.tolerance = tol;
    if (sig.num_qubits >= 4) {
        sig.d_values = d_criteria(state);
        for (const auto &d : sig.d_values) {
            sig.d_vanishing.push_back({
                is_vanishing_degree4(d.d1, sig.norm_squared, tol),
                is_vanishing_degree4(d.d2, sig.norm_squared, tol),
                is_vanishing_degree4(d.d3, sig.norm_squared, tol),
            });
        }
    }
    int f_cap = std::min(f_max_qubits, kMaxEnumeratedFQubits);
    if (sig.num_qubits >= 3 && sig.num_qubits <= f_cap) {
        sig.f_included = true;
        for (const auto &t : f_enumerate(sig.num_qubits)) {
            Complex v = f_evaluate(state, t);
            sig.f_values.push_back({t, v, is_vanishing_degree4(v, sig.norm_squared, tol)});
        }
    }
    return sig;
}

}  // namespace slocc
