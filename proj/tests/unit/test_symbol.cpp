#include "dtn/symbol.hpp"

#include <gtest/gtest.h>

using namespace dtn;

namespace {

using S = Symbol<AtomPoly>;

Jet<AtomPoly> one(int n, int order) { return Jet<AtomPoly>::constant(n, order, AtomPoly(1)); }

} // namespace

TEST(Symbol, XiKeyPacking) {
    XiKey k = xi_key({1, 0, 2});
    EXPECT_EQ(xi_degree(k), 3);
    EXPECT_EQ(xi_exp(k, 3), 2);
    EXPECT_EQ(xi_exponents(k, 3), (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(xi_add(xi_unit(1), xi_unit(3)), xi_key({1, 0, 1}));
}

TEST(Symbol, DegreeCountsXiW1AndResolvent) {
    S s = S::single(3, one(3, 1), xi_key({1, 1}), 2, 3);
    EXPECT_EQ(s.terms().front().degree(), 2 + 2 - 3);
    EXPECT_EQ(s.homogeneous_part(1).size(), 1u);
    EXPECT_TRUE(s.homogeneous_part(0).is_zero());
}

TEST(Symbol, ImaginaryUnit) {
    S s = S::single(2, one(2, 1), 0, 1, 0);
    EXPECT_TRUE((s.times_i(2) + s).is_zero());
    EXPECT_TRUE(s.times_i(4).same_terms(s));
    EXPECT_EQ(s.times_i(1).imaginary_part().size(), 1u);
}

TEST(Symbol, ProductAddsExponents) {
    S a = S::single(3, one(3, 2), xi_unit(1), 1, 1);
    S b = S::single(3, one(3, 2), xi_unit(1), -1, 2);
    S c = a * b;
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.terms().front().xi, xi_key({2, 0}));
    EXPECT_EQ(c.terms().front().p, 0);
    EXPECT_EQ(c.terms().front().q, 3);
}

TEST(Symbol, FlatXiDerivativeOfW1) {
    auto jets = build_gauge_jets(Scenario::flat(), 3, 2);
    auto ctx = make_symbol_context(jets, false);
    S w1 = S::single(3, one(3, 2), 0, 1, 0);
    S expected = S::single(3, one(3, 2), xi_unit(2), -1, 0);
    EXPECT_TRUE(sym_dxi(w1, 2, ctx).same_terms(expected));
    EXPECT_TRUE(sym_dx(w1, 1, ctx).is_zero());
}

TEST(Symbol, LeibnizRulesOnRandomGauge) {
    auto jets = build_gauge_jets(Scenario::random_gauge(3), 3, 3);
    auto ctx = make_symbol_context(jets, false);
    S a = S::single(3, jets.metric(1, 2), xi_unit(1), 1, 1) + S::single(3, jets.phi, xi_unit(2), -1, 0);
    S b = S::single(3, jets.metric(1, 1), 0, 2, 2, true);
    for (int j = 1; j <= 3; ++j) {
        S lhs = sym_dx(a * b, j, ctx);
        S rhs = sym_dx(a, j, ctx) * b + a * sym_dx(b, j, ctx);
        EXPECT_TRUE(lhs.truncated(1).same_terms(rhs.truncated(1))) << "x" << j;
    }
    for (int al = 1; al <= 2; ++al) {
        S lhs = sym_dxi(a * b, al, ctx);
        S rhs = sym_dxi(a, al, ctx) * b + a * sym_dxi(b, al, ctx);
        EXPECT_TRUE(lhs.truncated(2).same_terms(rhs.truncated(2))) << "xi" << al;
    }
}

TEST(Symbol, MultiIndices) {
    auto m = multi_indices(2, 2);
    EXPECT_EQ(m.size(), 3u);  // (1,1), (1,2), (2,2)
    EXPECT_EQ(multi_index_factorial({1, 1}), 2);
    EXPECT_EQ(multi_index_factorial({1, 2}), 1);
}

TEST(Symbol, TruncationAndBoundary) {
    auto jets = build_gauge_jets(Scenario::random_gauge(1), 3, 2);
    S a = S::single(3, jets.metric(1, 1), 0, 1, 0);
    EXPECT_EQ(a.truncated(0).min_order(), 0);
    S b = a.restricted_to_boundary();
    for (const auto& t : b.terms())
        for (const auto& [key, c] : t.coeff.terms()) EXPECT_EQ(mono_exp(key, 3), 0);
}
