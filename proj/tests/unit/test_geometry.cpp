#include "dtn/geometry.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Geometry, IdentitiesOnRandomGauge) {
    for (int n = 3; n <= 5; ++n) {
        auto j = build_gauge_jets(Scenario::random_gauge(7), n, 3);
        auto r = curvature_report(j);
        EXPECT_TRUE(normal_second_derivative_violations(j, r).empty()) << n;
        EXPECT_TRUE(gauss_violations(r).empty()) << n;
        EXPECT_TRUE(riemann_symmetry_violations(r).empty()) << n;
        EXPECT_TRUE(riemann_route_violations(j).empty()) << n;
        EXPECT_TRUE(normal_second_derivative_check(j));
    }
}

TEST(Geometry, SpaceFormRelations) {
    for (int n = 3; n <= 5; ++n) {
        auto j = build_gauge_jets(Scenario::symbolic_space_form(), n, 3);
        auto r = curvature_report(j);
        AtomPoly k0(Atom::k0());
        EXPECT_TRUE(space_form_violations(r, k0).empty()) << n;
        EXPECT_EQ(r.K0, k0);
        ASSERT_TRUE(r.nablaRicNN.has_value());
        EXPECT_TRUE(r.nablaRicNN->is_zero());
    }
}

TEST(Geometry, SpaceFormRelationsFailOnGenericJets) {
    auto j = build_gauge_jets(Scenario::random_gauge(1), 4, 3);
    auto r = curvature_report(j);
    EXPECT_FALSE(space_form_violations(r, r.K0).empty());
}

TEST(Geometry, FlatChristoffelVanishes) {
    auto j = build_gauge_jets(Scenario::flat(), 3, 2);
    for (int l = 1; l <= 3; ++l)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) EXPECT_TRUE(christoffel(j, l, a, b).is_zero());
    EXPECT_TRUE(riemann(j, 1, 2, 1, 2).is_zero());
}

TEST(Geometry, RiemannNeedsSecondOrder) {
    auto j = build_gauge_jets(Scenario::random_gauge(1), 3, 1);
    EXPECT_THROW(riemann(j, 1, 2, 1, 2), OrderTooLow);
    EXPECT_THROW(nabla_ric_nn(j), OrderTooLow);
}

TEST(Geometry, UnitSphereBoundaryOfTheBall) {
    auto j = build_gauge_jets(Scenario::euclidean_ball(Rational(1)), 3, 3);
    auto r = curvature_report(j);
    EXPECT_EQ(r.H, AtomPoly(2));
    EXPECT_EQ(r.boundaryScalar, AtomPoly(2));
    EXPECT_TRUE(r.tildeScalar.is_zero());
}

TEST(Geometry, LaplacianReadings) {
    // At x0 the only surviving Christoffel term is Gamma^n_aa = kappa_a.
    auto j = build_gauge_jets(Scenario::random_gauge(2), 3, 2);
    auto r = curvature_report(j);
    AtomPoly expected = r.laplacePhiCoordinate - r.H * r.phi_n;
    EXPECT_EQ(r.laplacePhi, expected);
}

TEST(Geometry, ReportJsonHasSchema) {
    auto j = build_gauge_jets(Scenario::random_gauge(2), 3, 3);
    std::string s = curvature_report_json(curvature_report(j));
    EXPECT_NE(s.find("\"schema\": 1"), std::string::npos);
    EXPECT_NE(s.find("laplacePhiCoordinate"), std::string::npos);
}
