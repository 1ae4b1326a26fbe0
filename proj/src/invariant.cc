#include "slocc/invariant.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "slocc/error.h"
#include "slocc/signtab.h"

namespace slocc {

namespace {

void require_even(const StateVector &state, int minimum, const char *what) {
    int n = state.num_qubits();
    if (n % 2 != 0 || n < minimum) {
        throw Error(
            ErrorKind::ParityError,
            std::string(what) + " needs an even qubit count >= " + std::to_string(minimum) + ", got " +
                std::to_string(n));
    }
}

void require_odd(const StateVector &state, const char *what) {
    int n = state.num_qubits();
    if (n % 2 != 1 || n < 3) {
        throw Error(
            ErrorKind::ParityError, std::string(what) + " needs an odd qubit count >= 3, got " + std::to_string(n));
    }
}

// Shared body of IV(a,n) and IV-bar(a,n): they differ only in how the second
// bracket is combined with the first.
Complex two_bracket_sum(std::span<const Complex> a, int n, double second_sign) {
    std::size_t last = a.size() - 1;
    std::size_t half = a.size() / 2;
    auto signs = sign_table(n);
    CompensatedSum sum;
    for (std::size_t i = 0; i < signs.size(); i++) {
        std::size_t e = 2 * i;
        Complex outer = a[e] * a[last - e] - a[e + 1] * a[last - 1 - e];
        Complex inner = a[half - 2 - e] * a[half + 1 + e] - a[half - 1 - e] * a[half + e];
        double s = signs[i];
        sum.add(s * outer);
        sum.add(s * second_sign * inner);
    }
    return sum.value();
}

}  // namespace

void CompensatedSum::accumulate(double &sum, double &comp, double x) noexcept {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
        comp += (sum - t) + x;
    } else {
        comp += (x - t) + sum;
    }
    sum = t;
}

Complex iv_star(std::span<const Complex> a, int n) {
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "IV* needs at least 2 qubits");
    }
    if (a.size() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::LengthMismatch, "amplitude block does not hold 2^n entries");
    }
    std::size_t last = a.size() - 1;
    auto signs = sign_star_table(n);
    CompensatedSum sum;
    for (std::size_t i = 0; i < signs.size(); i++) {
        std::size_t e = 2 * i;
        Complex term = a[e] * a[last - e] - a[e + 1] * a[last - 1 - e];
        sum.add(static_cast<double>(signs[i]) * term);
    }
    return sum.value();
}

Complex iv_star(const StateVector &state) {
    return iv_star(state.amplitudes(), state.num_qubits());
}

Complex iv_even(const StateVector &state) {
    require_even(state, 4, "IV(a,n)");
    return two_bracket_sum(state.amplitudes(), state.num_qubits(), +1.0);
}

Complex iv_bar(const StateVector &state) {
    require_odd(state, "IV-bar(a,n)");
    return two_bracket_sum(state.amplitudes(), state.num_qubits(), -1.0);
}

Complex iv_star_shifted(const StateVector &state) {
    require_odd(state, "shifted IV*(a,n-1)");
    auto a = state.amplitudes();
    return iv_star(a.subspan(a.size() / 2), state.num_qubits() - 1);
}

Complex odd_invariant(const StateVector &state) {
    require_odd(state, "odd invariant");
    auto a = state.amplitudes();
    Complex bar = iv_bar(state);
    Complex lower = iv_star(a.first(a.size() / 2), state.num_qubits() - 1);
    Complex upper = iv_star_shifted(state);
    return bar * bar - 4.0 * lower * upper;
}

double tau(const StateVector &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "residual entanglement needs at least 2 qubits");
    }
    if (n % 2 == 0) {
        return 2 * std::abs(iv_star(state));
    }
    return 4 * std::abs(odd_invariant(state));
}

bool is_vanishing(double magnitude, double norm_squared, double tol) {
    return magnitude <= tol * std::max(1.0, norm_squared);
}

bool is_vanishing(Complex value, double norm_squared, double tol) {
    return is_vanishing(std::abs(value), norm_squared, tol);
}

InvariantReport invariant_report(const StateVector &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "invariant report needs at least 2 qubits");
    }
    InvariantReport report;
    report.num_qubits = n;
    report.norm_squared = state.norm_squared();
    if (n % 2 == 0) {
        report.parity = Parity::Even;
        report.iv_star = iv_star(state);
        report.tau = 2 * std::abs(report.iv_star);
        return report;
    }
    auto a = state.amplitudes();
    report.parity = Parity::Odd;
    report.iv_star = iv_star(a.first(a.size() / 2), n - 1);
    report.iv_bar = iv_bar(state);
    report.iv_star_shifted = iv_star_shifted(state);
    report.odd_invariant = *report.iv_bar * *report.iv_bar - 4.0 * report.iv_star * *report.iv_star_shifted;
    report.tau = 4 * std::abs(*report.odd_invariant);
    return report;
}

bool tau_vanishes(const InvariantReport &report, double tol) {
    return is_vanishing(report.tau, report.norm_squared, tol);
}

}  // namespace slocc
