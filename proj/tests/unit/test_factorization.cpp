#include "dtn/parametrix.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Factorization, ResidualVanishes) {
    for (int n : {2, 3, 4})
        for (std::uint64_t seed : {1u, 9u}) {
            int K = std::min(3, n);
            auto jets = build_gauge_jets(Scenario::random_gauge(seed), n, K);
            auto f = factorize(jets, K);
            auto rep = factorization_residual(f);
            EXPECT_TRUE(rep.ok()) << "n=" << n << " seed=" << seed;
            EXPECT_EQ(rep.degrees_checked.front(), 2);
            EXPECT_EQ(rep.degrees_checked.back(), 2 - K);
        }
}

TEST(Factorization, ResidualDetectsACorruptedPart) {
    auto jets = build_gauge_jets(Scenario::random_gauge(2), 3, 2);
    auto f = factorize(jets, 2);
    Symbol<AtomPoly> bad = f.w->part(0);
    bad += Symbol<AtomPoly>::single(3, Jet<AtomPoly>::constant(3, 2, AtomPoly(1)), 0, 0, 0);
    f.w->set(0, bad);
    EXPECT_FALSE(factorization_residual(f).ok());
}

TEST(Factorization, TopPartIsW1) {
    auto jets = build_gauge_jets(Scenario::flat(), 3, 1);
    auto f = factorize(jets, 1);
    ASSERT_EQ(f.w->part(1).size(), 1u);
    EXPECT_EQ(f.w->part(1).terms().front().p, 1);
    // Flat, phi = V = 0: w_0 = 0.
    EXPECT_TRUE(f.w->part(0).is_zero());
}

TEST(Factorization, OperatorSymbolsOnFlatSpace) {
    auto jets = build_gauge_jets(Scenario::flat(), 3, 2);
    auto ops = build_b_c(jets);
    EXPECT_TRUE(ops.b.is_zero());
    EXPECT_TRUE(ops.c1.is_zero());
    EXPECT_EQ(ops.c2.size(), 2u);  // -xi_1^2 - xi_2^2
}

TEST(Factorization, DepthBeyondJetOrderIsRejected) {
    auto jets = build_gauge_jets(Scenario::random_gauge(1), 3, 1);
    EXPECT_THROW(factorize(jets, 2), OrderTooLow);
}

TEST(Parametrix, RecursionMatchesWrittenOutForms) {
    for (int n : {3, 4}) {
        auto jets = build_gauge_jets(Scenario::random_gauge(5), n, 3);
        auto p = build_parametrix(jets, 3);
        for (int m = 1; m <= 3; ++m) EXPECT_TRUE(explicit_s(p, m).same_terms(p.part(-1 - m))) << "n=" << n << " m=" << m;
    }
}

TEST(Parametrix, LeadingPartIsTheResolvent) {
    auto jets = build_gauge_jets(Scenario::random_gauge(1), 3, 1);
    auto p = build_parametrix(jets, 1);
    const auto& s1 = p.part(-1);
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1.terms().front().q, 1);
    EXPECT_EQ(s1.terms().front().p, 0);
    EXPECT_THROW(explicit_s(p, 4), std::invalid_argument);
}

TEST(Parametrix, RationalAndSymbolicPipelinesAgree) {
    auto jets = build_gauge_jets(Scenario::random_gauge(4), 3, 2);
    auto values = verification_assignment(jets, 3);
    auto sym = build_parametrix(jets, 2);
    auto num = build_parametrix(substitute(jets, values), 2);
    const auto& a = sym.part(-3);
    const auto& b = num.part(-3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a.terms()[i].coeff.value().eval(values), b.terms()[i].coeff.value());
}
