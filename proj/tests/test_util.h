#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "slocc/local_ops.h"
#include "slocc/statevec.h"

namespace slocc::testing {

/// Dense 2^n x 2^n matrix of the chain's Kronecker product, row-major,
/// qubit 1 the most significant factor. Only for small n.
inline std::vector<Complex> dense_kron(const LocalOperatorChain &chain) {
    std::vector<Complex> m{Complex{1}};
    std::size_t dim = 1;
    for (const auto &op : chain) {
        std::size_t next = dim * 2;
        std::vector<Complex> out(next * next);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                for (std::size_t a = 0; a < 2; a++) {
                    for (std::size_t b = 0; b < 2; b++) {
                        out[(2 * r + a) * next + (2 * c + b)] = m[r * dim + c] * op.entries[2 * a + b];
                    }
                }
            }
        }
        m = std::move(out);
        dim = next;
    }
    return m;
}

inline std::vector<Complex> dense_apply(const LocalOperatorChain &chain, const StateVector &s) {
    auto m = dense_kron(chain);
    std::vector<Complex> out(s.size());
    for (std::size_t r = 0; r < s.size(); r++) {
        Complex acc = 0;
        for (std::size_t c = 0; c < s.size(); c++) {
            acc += m[r * s.size() + c] * s[c];
        }
        out[r] = acc;
    }
    return out;
}

inline double rel_error(Complex got, Complex want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline void expect_complex_near(Complex got, Complex want, double tol) {
    EXPECT_NEAR(got.real(), want.real(), tol);
    EXPECT_NEAR(got.imag(), want.imag(), tol);
}

/// Random nonzero complex scale with modulus in [0.5, 2].
inline Complex random_scale(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
    return std::polar(mag(rng), phase(rng));
}

}  // namespace slocc::testing
