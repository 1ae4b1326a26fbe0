#include "slocc/signtab.h"

#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "slocc/error.h"
#include "slocc/statevec.h"

namespace slocc {

namespace {

void check_qubits(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw Error(ErrorKind::IndexOutOfRange, "sign tables exist for 2 <= n <= 30, got n=" + std::to_string(n));
    }
}

std::uint64_t sign_length(int n) {
    return n <= 3 ? 1 : std::uint64_t{1} << (n - 3);
}

std::uint64_t sign_star_length(int n) {
    return std::uint64_t{1} << (n - 2);
}

struct TableCache {
    std::array<std::once_flag, kMaxQubits + 1> once;
    std::array<std::vector<std::int8_t>, kMaxQubits + 1> tables;
};

TableCache &sign_cache() {
    static TableCache cache;
    return cache;
}

TableCache &sign_star_cache() {
    static TableCache cache;
    return cache;
}

std::vector<std::int8_t> build_sign(int n) {
    if (n <= 3) {
        return {1};
    }
    auto lower = sign_table(n - 1);
    std::vector<std::int8_t> out(lower.begin(), lower.end());
    out.reserve(2 * lower.size());
    std::int8_t flip = n % 2 == 0 ? -1 : 1;
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
        out.push_back(static_cast<std::int8_t>(flip * *it));
    }
    return out;
}

std::vector<std::int8_t> build_sign_star(int n) {
    if (n == 2) {
        return {1};
    }
    auto base = sign_table(n);
    std::vector<std::int8_t> out(base.begin(), base.end());
    out.reserve(2 * base.size());
    out.insert(out.end(), base.rbegin(), base.rend());
    return out;
}

}  // namespace

std::span<const std::int8_t> sign_table(int n) {
    check_qubits(n);
    auto &cache = sign_cache();
    std::call_once(cache.once[n], [&] { cache.tables[n] = build_sign(n); });
    return cache.tables[n];
}

std::span<const std::int8_t> sign_star_table(int n) {
    check_qubits(n);
    auto &cache = sign_star_cache();
    std::call_once(cache.once[n], [&] { cache.tables[n] = build_sign_star(n); });
    return cache.tables[n];
}

int sign(int n, std::uint64_t i) {
    check_qubits(n);
    if (i >= sign_length(n)) {
        throw Error(
            ErrorKind::IndexOutOfRange, "sign(" + std::to_string(n) + ", " + std::to_string(i) + ") is undefined");
    }
    return sign_table(n)[i];
}

int sign_star(int n, std::uint64_t i) {
    check_qubits(n);
    if (i >= sign_star_length(n)) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            "sign*(" + std::to_string(n) + ", " + std::to_string(i) + ") is undefined");
    }
    return sign_star_table(n)[i];
}

int sign_recursive(int n, std::uint64_t i) {
    check_qubits(n);
    if (i >= sign_length(n)) {
        throw Error(
            ErrorKind::IndexOutOfRange, "sign(" + std::to_string(n) + ", " + std::to_string(i) + ") is undefined");
    }
    if (n <= 3) {
        return 1;
    }
    std::uint64_t half = std::uint64_t{1} << (n - 4);
    if (i <= half - 1) {
        return sign_recursive(n - 1, i);
    }
    int mirrored = sign_recursive(n, sign_length(n) - 1 - i);
    return n % 2 == 1 ? mirrored : -mirrored;
}

}  // namespace slocc
