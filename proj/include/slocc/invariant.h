#pragma once

#include <optional>
#include <span>

#include "slocc/statevec.h"

namespace slocc {

/// Default threshold for calling an invariant value zero.
inline constexpr double kDefaultTolerance = 1e-10;

/// Neumaier-compensated accumulator for complex sums, applied independently to
/// the real and imaginary parts. The result depends only on the order of `add`.
class CompensatedSum {
   public:
    void add(Complex term) noexcept {
        accumulate(sum_re_, comp_re_, term.real());
        accumulate(sum_im_, comp_im_, term.imag());
    }
    Complex value() const noexcept {
        return {sum_re_ + comp_re_, sum_im_ + comp_im_};
    }

   private:
    static void accumulate(double &sum, double &comp, double x) noexcept;
    double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

/// IV*(a, m) evaluated on a raw block of 2^m amplitudes (m >= 2). Used directly
/// on half-arrays of odd-n states so no copy is needed.
Complex iv_star(std::span<const Complex> amplitudes, int num_qubits);

/// IV*(a, n) = sum_i sign*(n,i) (a_{2i} a_{N-1-2i} - a_{2i+1} a_{N-2-2i}), N = 2^n, n >= 2.
Complex iv_star(const StateVector &state);

/// Two-bracket even-n form over 2^(n-3) indices; equal to iv_star for even n >= 4.
Complex iv_even(const StateVector &state);

/// Odd-n bracket difference over 2^(n-3) indices, n >= 3.
Complex iv_bar(const StateVector &state);

/// IV*(a, n-1) with 2^(n-1) added to every subscript, i.e. evaluated on the
/// upper half of the amplitude array. Odd n >= 3.
Complex iv_star_shifted(const StateVector &state);

/// iv_bar^2 - 4 IV*(lower half, n-1) IV*(upper half, n-1). Odd n >= 3.
Complex odd_invariant(const StateVector &state);

/// Residual entanglement: 2|IV*| for even n, 4|odd_invariant| for odd n.
/// Not clamped; unnormalized input scales as |c|^2 (even) or |c|^4 (odd).
double tau(const StateVector &state);

/// |value| <= tol * max(1, sum |a_i|^2).
bool is_vanishing(double magnitude, double norm_squared, double tol = kDefaultTolerance);
bool is_vanishing(Complex value, double norm_squared, double tol = kDefaultTolerance);

enum class Parity { Even, Odd };

struct InvariantReport {
    int num_qubits = 0;
    Parity parity = Parity::Even;
    double norm_squared = 0;
    /// IV*(a, n) for even n; IV*(a, n-1) on the lower half for odd n.
    Complex iv_star{};
    std::optional<Complex> iv_bar;
    std::optional<Complex> iv_star_shifted;
    std::optional<Complex> odd_invariant;
    double tau = 0;
};

InvariantReport invariant_report(const StateVector &state);

bool tau_vanishes(const InvariantReport &report, double tol = kDefaultTolerance);

}  // namespace slocc
