#include "dtn/geometry.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Gauge, RandomGaugeSatisfiesConstraints) {
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t seed : {1u, 2u}) {
            auto j = build_gauge_jets(Scenario::random_gauge(seed), n, 3);
            EXPECT_TRUE(gauge_violations(j).empty()) << "n=" << n;
            EXPECT_EQ(j.order, 3);
            EXPECT_EQ(j.metric(n, n).terms().size(), 1u);  // g_nn = 1
        }
}

TEST(Gauge, MetricIsIdentityAtBasePoint) {
    auto j = build_gauge_jets(Scenario::random_gauge(4), 4, 2);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) EXPECT_EQ(j.metric(a, b).value(), AtomPoly(a == b ? 1 : 0));
}

TEST(Gauge, EuclideanBallCurvature) {
    auto j = build_gauge_jets(Scenario::euclidean_ball(make_rational(1, 2)), 4, 2);
    auto r = curvature_report(j);
    EXPECT_EQ(r.H, AtomPoly(6));
    for (const auto& k : r.kappa) EXPECT_EQ(k, AtomPoly(2));
    EXPECT_TRUE(r.tildeScalar.is_zero());
}

TEST(Gauge, InvalidInputs) {
    EXPECT_THROW(Scenario::euclidean_ball(Rational(0)), InvalidRadius);
    EXPECT_THROW(build_gauge_jets(Scenario::flat(), 3, 4), UnsupportedOrder);
    EXPECT_THROW(build_gauge_jets(Scenario::flat(), 1, 1), std::invalid_argument);
}

TEST(Gauge, JsonRoundTrip) {
    auto j = build_gauge_jets(Scenario::random_gauge(3), 3, 2);
    auto back = gauge_from_json(gauge_to_json(j));
    ASSERT_EQ(back.n, j.n);
    ASSERT_EQ(back.order, j.order);
    for (std::size_t i = 0; i < j.g.size(); ++i) EXPECT_EQ(back.g[i].terms(), j.g[i].terms());
    EXPECT_EQ(back.phi.terms(), j.phi.terms());
    auto again = build_gauge_jets(Scenario::explicit_jets(gauge_to_json(j)), 3, 2);
    EXPECT_EQ(again.V.terms(), j.V.terms());
    EXPECT_THROW(gauge_from_json("{"), ParseError);
}

TEST(Gauge, SubstitutionMatchesEvaluation) {
    auto j = build_gauge_jets(Scenario::random_gauge(5), 3, 2);
    auto values = verification_assignment(j, 11);
    auto s = substitute(j, values);
    for (std::size_t i = 0; i < j.g.size(); ++i)
        for (const auto& [key, c] : j.g[i].terms()) EXPECT_EQ(s.g[i].coefficient(key), c.eval(values));
}
