#include "slocc/local_ops.h"

#include <cmath>

#include "gtest/gtest.h"

#include "slocc/error.h"
#include "slocc/invariant.h"
#include "test_util.h"

using namespace slocc;
using slocc::testing::dense_apply;
using slocc::testing::rel_error;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected slocc::Error";
    return ErrorKind::BadArgs;
}

double max_rel_diff(std::span<const Complex> got, const std::vector<Complex> &want) {
    double scale = 0;
    for (const auto &w : want) {
        scale = std::max(scale, std::abs(w));
    }
    double worst = 0;
    for (std::size_t i = 0; i < want.size(); i++) {
        worst = std::max(worst, std::abs(got[i] - want[i]));
    }
    return worst / scale;
}

}  // namespace

TEST(local_ops, identity_chain_is_exact) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        int n = 1 + static_cast<int>(seed % 9);
        StateVector s = random_state(n, seed);
        EXPECT_EQ(apply_chain(LocalOperatorChain(n), s), s);
    }
}

TEST(local_ops, pauli_x_chain_complements) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        int n = 1 + static_cast<int>(seed % 9);
        StateVector s = random_state(n, seed);
        EXPECT_EQ(apply_chain(pauli_x_chain(n), s), complement(s));
    }
}

TEST(local_ops, diagonal_operator_on_bell_state) {
    LocalOperatorChain chain{LocalOperator::diagonal(2, 1), LocalOperator::identity()};
    StateVector out = apply_chain(chain, ghz(2));
    std::vector<Complex> want = dense_apply(chain, ghz(2));
    EXPECT_EQ(std::vector<Complex>(out.amplitudes().begin(), out.amplitudes().end()), want);
    EXPECT_NEAR(out[0].real(), 2 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(out[1], Complex(0));
    EXPECT_EQ(out[2], Complex(0));
    EXPECT_NEAR(out[3].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(iv_star(out) - 2.0 * iv_star(ghz(2))), 0, 1e-15);
}

TEST(local_ops, matches_dense_kronecker_oracle) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        int n = 1 + static_cast<int>(seed % 8);
        StateVector s = random_state(n, seed);
        LocalOperatorChain chain = random_chain(n, seed + 1000, seed % 2 == 0);
        StateVector fast = apply_chain(chain, s);
        EXPECT_LE(max_rel_diff(fast.amplitudes(), dense_apply(chain, s)), 1e-12) << "n=" << n;
    }
}

TEST(local_ops, composition) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        int n = 1 + static_cast<int>(seed % 7);
        StateVector s = random_state(n, seed);
        LocalOperatorChain c = random_chain(n, seed + 1, false);
        LocalOperatorChain d = random_chain(n, seed + 2, false);
        StateVector stepwise = apply_chain(d, apply_chain(c, s));
        StateVector combined = apply_chain(compose(c, d), s);
        std::vector<Complex> want(stepwise.amplitudes().begin(), stepwise.amplitudes().end());
        EXPECT_LE(max_rel_diff(combined.amplitudes(), want), 1e-13);
    }
}

TEST(local_ops, det_product) {
    EXPECT_EQ(det_product(LocalOperatorChain(5)), Complex(1));
    LocalOperatorChain one_diag(4);
    one_diag[2] = LocalOperator::diagonal(2, 1);
    EXPECT_EQ(det_product(one_diag), Complex(2));
    for (int n = 1; n <= 6; n++) {
        EXPECT_EQ(det_product(pauli_x_chain(n)), Complex(n % 2 == 0 ? 1 : -1));
    }
}

TEST(local_ops, random_chain_contract) {
    EXPECT_EQ(random_chain(5, 3, false), random_chain(5, 3, false));
    EXPECT_NE(random_chain(5, 3, false), random_chain(5, 4, false));
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        int n = 1 + static_cast<int>(seed % 8);
        for (const auto &op : random_chain(n, seed, false)) {
            EXPECT_GE(std::abs(op.det()), 0.1);
            for (const auto &e : op.entries) {
                EXPECT_LE(std::abs(e.real()), 1.0);
                EXPECT_LE(std::abs(e.imag()), 1.0);
            }
        }
        auto unit = random_chain(n, seed, true);
        EXPECT_NEAR(std::abs(det_product(unit)), 1, 1e-12);
        for (const auto &op : unit) {
            EXPECT_NEAR(std::abs(op.det() - Complex(1)), 0, 1e-12);
        }
    }
}

TEST(local_ops, theorem1_harness) {
    EXPECT_LE(verify_theorem1(2, 100, 1).max_relative_error, 1e-11);
    EXPECT_LE(verify_theorem1(4, 100, 1).max_relative_error, 1e-9);
    EXPECT_LE(verify_theorem1(6, 100, 1).max_relative_error, 1e-9);
    TheoremCheck check = verify_theorem1(4, 100, 1);
    EXPECT_EQ(check.trials, 100);
    EXPECT_EQ(check.degenerate_failures, 0);
    EXPECT_TRUE(check.passed(1e-9));
}

TEST(local_ops, theorem2_harness) {
    EXPECT_LE(verify_theorem2(3, 100, 1).max_relative_error, 1e-9);
    EXPECT_LE(verify_theorem2(5, 100, 1).max_relative_error, 1e-9);
    EXPECT_LE(verify_theorem2(7, 50, 1).max_relative_error, 1e-8);
}

TEST(local_ops, harness_is_deterministic) {
    EXPECT_EQ(verify_theorem1(6, 40, 9).max_relative_error, verify_theorem1(6, 40, 9).max_relative_error);
    EXPECT_EQ(verify_theorem2(5, 40, 9).max_relative_error, verify_theorem2(5, 40, 9).max_relative_error);
}

TEST(local_ops, unit_det_chains_preserve_tau) {
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        int n = 2 + static_cast<int>(seed % 7);
        StateVector s = random_state(n, seed);
        StateVector t = apply_chain(random_chain(n, seed + 77, true), s);
        EXPECT_LE(rel_error(tau(t), tau(s)), 1e-9) << "n=" << n;
    }
}

TEST(local_ops, vanishing_is_slocc_invariant) {
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        int n = 3 + static_cast<int>(seed % 5);
        LocalOperatorChain chain = random_chain(n, seed, false);
        for (const StateVector &s : {w_state(n), random_state(n, seed), ghz(n)}) {
            InvariantReport before = invariant_report(s);
            InvariantReport after = invariant_report(apply_chain(chain, s));
            EXPECT_EQ(tau_vanishes(before), tau_vanishes(after)) << "n=" << n << " seed=" << seed;
        }
    }
}

TEST(local_ops, errors) {
    EXPECT_EQ(kind_of([] { apply_chain(LocalOperatorChain(3), ghz(4)); }), ErrorKind::LengthMismatch);
    EXPECT_EQ(kind_of([] { verify_theorem1(5, 10, 1); }), ErrorKind::ParityError);
    EXPECT_EQ(kind_of([] { verify_theorem1(0, 10, 1); }), ErrorKind::ParityError);
    EXPECT_EQ(kind_of([] { verify_theorem2(4, 10, 1); }), ErrorKind::ParityError);
    EXPECT_EQ(kind_of([] { verify_theorem2(1, 10, 1); }), ErrorKind::ParityError);
    EXPECT_EQ(kind_of([] { verify_theorem2(3, 0, 1); }), ErrorKind::BadArgs);
    EXPECT_EQ(kind_of([] { compose(LocalOperatorChain(2), LocalOperatorChain(3)); }), ErrorKind::LengthMismatch);
}
