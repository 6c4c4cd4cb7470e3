#include "dtn/gauge.hpp"

#include <gtest/gtest.h>

using namespace dtn;

namespace {

Jet<Rational> var(int n, int order, int v) { return Jet<Rational>::monomial(n, order, mono_unit(v), Rational(1)); }

} // namespace

TEST(Jet, MonoKeyPacking) {
    MonoKey k = mono_key({2, 0, 1});
    EXPECT_EQ(mono_degree(k), 3);
    EXPECT_EQ(mono_exp(k, 1), 2);
    EXPECT_EQ(mono_exp(k, 3), 1);
    EXPECT_EQ(mono_exponents(k, 3), (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(mono_factorial(k, 3), 2);
}

TEST(Jet, ProductTruncatesAtTheLowerOrder) {
    auto x = var(2, 3, 1);
    auto y = var(2, 1, 2);
    auto p = x * y;
    EXPECT_EQ(p.order(), 1);
    EXPECT_TRUE(p.is_zero());  // x*y has degree 2 > 1
    auto q = x * x * x;
    EXPECT_EQ(q.coefficient(mono_key({3, 0})), 1);
}

TEST(Jet, DerivativeLowersOrder) {
    auto x = var(2, 3, 1);
    auto f = x * x * x;  // x^3
    auto d = f.derivative(1);
    EXPECT_EQ(d.order(), 2);
    EXPECT_EQ(d.coefficient(mono_key({2, 0})), 3);
    EXPECT_EQ(f.derivative_at_origin({3, 0}), 6);
}

TEST(Jet, LeibnizRule) {
    auto x = var(2, 3, 1), y = var(2, 3, 2);
    auto a = x * y + x;
    auto b = y * y + Jet<Rational>::constant(2, 3, Rational(2));
    auto lhs = (a * b).derivative(2);
    auto rhs = a.derivative(2) * b + a * b.derivative(2);
    EXPECT_EQ(lhs.truncated(2).terms(), rhs.truncated(2).terms());
}

TEST(Jet, InverseMetricTimesMetricIsIdentity) {
    int n = 3;
    std::vector<Jet<Rational>> g;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            auto e = Jet<Rational>::constant(n, 3, Rational(j == k ? 1 : 0));
            if (j != n && k != n) {
                auto t = var(n, 3, 1) * var(n, 3, n);
                e += t.scale(make_rational(j + k, 7));
            }
            g.push_back(e);
        }
    auto gi = jet_invert_metric(g, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Jet<Rational> s(n, 3);
            for (int l = 0; l < n; ++l) s += g[static_cast<std::size_t>(j * n + l)] * gi[static_cast<std::size_t>(l * n + k)];
            auto id = Jet<Rational>::constant(n, 3, Rational(j == k ? 1 : 0));
            EXPECT_EQ(s.terms(), id.terms());
        }
}

TEST(Jet, SingularMetricIsRejected) {
    std::vector<Jet<Rational>> g(4, Jet<Rational>::constant(2, 1, Rational(1)));
    EXPECT_THROW(jet_invert_metric(g, 2), SingularLeadingCoefficient);
}

TEST(Jet, RestrictToBoundaryDropsNormalVariable) {
    auto x = var(2, 2, 1), y = var(2, 2, 2);
    auto f = x + y + x * y;
    auto r = restrict_to_boundary(f);
    EXPECT_EQ(r.terms(), x.terms());
}
