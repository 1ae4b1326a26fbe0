#include "slocc/classify.h"

#include <algorithm>

#include "gtest/gtest.h"

#include "slocc/error.h"

using namespace slocc;

TEST(classify, ghz_vs_w_is_provably_inequivalent) {
    Verdict v = compare(ghz(3), w_state(3));
    EXPECT_EQ(v.outcome, Outcome::ProvablyInequivalent);
    ASSERT_FALSE(v.evidence.empty());
    EXPECT_EQ(v.evidence[0].criterion, "tau");
    EXPECT_NEAR(v.evidence[0].first.real(), 1, 1e-12);
    EXPECT_EQ(v.evidence[0].second, Complex(0));
    EXPECT_FALSE(v.evidence[0].first_vanishing);
    EXPECT_TRUE(v.evidence[0].second_vanishing);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(classify, ghz_vs_cluster_is_undetermined_with_d_flags) {
    Verdict v = compare(ghz(4), cluster_c());
    EXPECT_EQ(v.outcome, Outcome::Undetermined);
    auto has = [&](const std::string &flag) {
        return std::find(v.heuristic_flags.begin(), v.heuristic_flags.end(), flag) != v.heuristic_flags.end();
    };
    EXPECT_TRUE(has("D2[0]: vanishing vs nonvanishing"));
}

TEST(classify, self_comparison) {
    StateVector s = random_state(5, 2);
    Verdict v = compare(s, s);
    EXPECT_EQ(v.outcome, Outcome::Undetermined);
    EXPECT_TRUE(v.heuristic_flags.empty());
    for (const auto &e : v.evidence) {
        EXPECT_EQ(e.first, e.second) << e.criterion;
        EXPECT_EQ(e.first_vanishing, e.second_vanishing);
    }
}

TEST(classify, compare_is_symmetric) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        int n = 3 + static_cast<int>(seed % 4);
        StateVector a = seed % 3 == 0 ? w_state(n) : random_state(n, seed);
        StateVector b = seed % 2 == 0 ? ghz(n) : random_state(n, seed + 50);
        EXPECT_EQ(compare(a, b).outcome, compare(b, a).outcome);
    }
}

TEST(classify, never_separates_a_state_from_its_slocc_image) {
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        int n = 3 + static_cast<int>(seed % 5);
        StateVector s = random_state(n, seed);
        StateVector t = apply_chain(random_chain(n, seed + 1, false), s);
        EXPECT_NE(compare(s, t, {kDefaultTolerance, 4}).outcome, Outcome::ProvablyInequivalent)
            << "n=" << n << " seed=" << seed;
    }
}

TEST(classify, size_mismatch) {
    try {
        compare(ghz(3), ghz(4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
    }
}

TEST(classify, dual_equivalence) {
    for (int n = 1; n <= 6; n++) {
        DualWitness d = dual_equivalence(ghz(n));
        EXPECT_EQ(d.dual, ghz(n));
        EXPECT_EQ(apply_chain(d.witness, ghz(n)), ghz(n));
        EXPECT_NEAR(std::abs(det_product(d.witness)), 1, 0);
    }
    StateVector w = w_state(3);
    DualWitness dw = dual_equivalence(w);
    EXPECT_EQ(dw.dual, complement(w));
    EXPECT_NEAR(tau(dw.dual), tau(w), 1e-15);

    StateVector r = random_state(5, 9);
    DualWitness dr = dual_equivalence(r);
    EXPECT_EQ(apply_chain(dr.witness, apply_chain(dr.witness, r)), r);
    EXPECT_EQ(apply_chain(dr.witness, r), dr.dual);
}

TEST(classify, check_witness) {
    StateVector s = random_state(4, 3);
    LocalOperatorChain chain = random_chain(4, 8, false);
    StateVector t = apply_chain(chain, s);
    Verdict ok = check_witness(s, t, chain, 1e-12);
    EXPECT_EQ(ok.outcome, Outcome::EquivalentByConstruction);
    ASSERT_TRUE(ok.witness.has_value());
    EXPECT_EQ(*ok.witness, chain);

    Verdict wrong = check_witness(s, t, random_chain(4, 9, false), 1e-12);
    EXPECT_EQ(wrong.outcome, Outcome::Undetermined);
    EXPECT_FALSE(wrong.witness.has_value());

    LocalOperatorChain singular(4);
    singular[1] = LocalOperator::diagonal(1, 0);
    EXPECT_EQ(check_witness(s, s, singular, 1e-12).outcome, Outcome::Undetermined);
}
