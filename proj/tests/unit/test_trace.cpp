#include "dtn/reference.hpp"
#include "dtn/trace.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dtn;

TEST(Trace, ContourWeight) {
    EXPECT_EQ(contour_weight(1), 1);
    EXPECT_EQ(contour_weight(4), make_rational(1, 6));
    EXPECT_THROW(contour_weight(0), InvalidPower);
}

TEST(Trace, MomentClosedForm) {
    // n = 3: int_{R^2} e^{-|xi|} dxi / (2 pi) = 1
    EXPECT_EQ(moment(3, 0, {0, 0}), 1);
    // n = 4, |xi|^{-1}: Gamma(2) = 1
    EXPECT_EQ(moment(4, -1, {0, 0, 0}), 1);
    // n = 3, xi_1^2: Gamma(4) * 1!! / (n - 1) = 3
    EXPECT_EQ(moment(3, 0, {2, 0}), 3);
    EXPECT_EQ(moment(3, 0, {1, 1}), 0);
    EXPECT_THROW(moment(3, -3, {0, 0}), DivergentMoment);
}

TEST(Trace, MomentQuadratureAgrees) {
    for (int n = 3; n <= 5; ++n)
        for (int p = -2; p <= 3; ++p) {
            std::vector<int> m(static_cast<std::size_t>(n - 1), 0);
            m[0] = 2;
            m.back() += 2;
            double exact = moment(n, p, m).get_d();
            EXPECT_NEAR(moment_quadrature(n, p, m) / exact, 1.0, 1e-10) << n << " " << p;
        }
    EXPECT_NEAR(moment_quadrature(2, 1, {3}), 0.0, 1e-12);
    EXPECT_THROW(moment_quadrature(3, 0, {0}), std::invalid_argument);
}

TEST(Trace, LeadingCoefficientIsGamma) {
    for (int n = 2; n <= 8; ++n) {
        auto jets = build_gauge_jets(Scenario::random_gauge(1), n, 1);
        EXPECT_EQ(engine_coefficient(jets, 0), AtomPoly(Rational(gamma_int(n - 1)))) << n;
    }
}

TEST(Trace, FirstCoefficientMatchesClosedForm) {
    for (int n = 2; n <= 7; ++n) {
        auto jets = build_gauge_jets(Scenario::random_gauge(3), n, 1);
        EXPECT_EQ(engine_coefficient(jets, 1), ref_eval(RefKind::A1, curvature_report(jets))) << n;
    }
}

TEST(Trace, SymbolicAndSubstitutedAgree) {
    auto jets = build_gauge_jets(Scenario::random_gauge(2), 4, 2);
    auto values = verification_assignment(jets, 5);
    AtomPoly sym = engine_coefficient(jets, 2);
    Rational num = engine_coefficient(substitute(jets, values), 2);
    EXPECT_EQ(sym.eval(values), num);
}

TEST(Trace, PhiVSplitAddsUp) {
    auto jets = build_gauge_jets(Scenario::random_gauge(2), 3, 2);
    auto s = phi_v_split(jets, 2);
    EXPECT_EQ(s.full, s.geometric + s.phiV);
    for (const auto& [mono, c] : s.geometric.terms())
        for (const auto& [atom, e] : mono.factors()) {
            EXPECT_NE(atom.kind(), AtomKind::PhiJet);
            EXPECT_NE(atom.kind(), AtomKind::VJet);
        }
}

TEST(Trace, ValidityRange) {
    auto jets = build_gauge_jets(Scenario::random_gauge(1), 3, 3);
    EXPECT_THROW(engine_coefficients(jets, 3), std::domain_error);
    auto low = build_gauge_jets(Scenario::random_gauge(1), 4, 1);
    EXPECT_THROW(engine_coefficients(low, 2), OrderTooLow);
    auto r = engine_coefficients(build_gauge_jets(Scenario::random_gauge(1), 3, 2), 2);
    EXPECT_TRUE(r.back().beyond_validity);
}
