#include "dtn/reference.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Reference, TermCounts) {
    EXPECT_EQ(ref_formula(RefKind::A0).terms.size(), 1u);
    EXPECT_EQ(ref_formula(RefKind::A1).terms.size(), 2u);
    EXPECT_EQ(ref_formula(RefKind::TildeA3).terms.size(), 8u);
    // eight geometric and ten phi/V terms, the operator group counted once
    EXPECT_EQ(ref_formula(RefKind::A3).terms.size(), 18u);
}

TEST(Reference, Prefactors) {
    EXPECT_EQ(ref_prefactor(RefKind::A0, 4), 2);
    EXPECT_EQ(ref_prefactor(RefKind::A1, 4), 1);
    EXPECT_EQ(ref_prefactor(RefKind::A2, 5), make_rational(1, 2));
    EXPECT_EQ(ref_prefactor(RefKind::A3, 5), make_rational(1, 8));
}

TEST(Reference, DimensionGuards) {
    auto r = curvature_report(build_gauge_jets(Scenario::random_gauge(1), 2, 2));
    EXPECT_THROW(ref_eval(RefKind::A2, r), OutOfRange);
    EXPECT_EQ(ref_min_dimension(RefKind::A0), 2);
    EXPECT_EQ(ref_min_dimension(RefKind::A3), 4);
}

TEST(Reference, MissingFieldsAreReported) {
    auto r = curvature_report(build_gauge_jets(Scenario::random_gauge(1), 4, 2));
    EXPECT_THROW(ref_eval(RefKind::A3, r), MissingReportField);
}

TEST(Reference, UnitSphereValuesAtN3) {
    auto r = curvature_report(build_gauge_jets(Scenario::euclidean_ball(Rational(1)), 3, 2));
    EXPECT_EQ(ref_eval(RefKind::A0, r), AtomPoly(1));
    EXPECT_EQ(ref_eval(RefKind::A1, r), AtomPoly(make_rational(1, 2)));
    EXPECT_EQ(ref_eval(RefKind::A2, r), AtomPoly(make_rational(1, 6)));
}

TEST(Reference, NamesRoundTrip) {
    for (RefKind k : {RefKind::A0, RefKind::A3, RefKind::TildeA2, RefKind::PhiV1, RefKind::B3})
        EXPECT_EQ(parse_ref_kind(ref_kind_name(k)), k);
    EXPECT_THROW(parse_ref_kind("a9"), std::invalid_argument);
}

TEST(Reference, SpaceFormFormulasAgree) {
    for (int n = 3; n <= 6; ++n) {
        auto r = curvature_report(build_gauge_jets(Scenario::symbolic_space_form(), n, 3));
        EXPECT_TRUE(space_form_consistency(r).empty()) << n;
    }
}

TEST(Reference, LatexAndInstance) {
    std::string a1 = ref_latex(RefKind::A1);
    EXPECT_EQ(a1.rfind("\\frac{\\Gamma(n-1)}{2}\\Big[\\frac{n-2}{n-1}", 0), 0u) << a1;
    EXPECT_EQ(ref_latex(RefKind::A0).rfind("\\frac{\\Gamma(n-1)}{1}", 0), 0u);
    EXPECT_EQ(ref_instance(RefKind::A1, 4, false), "(1) * [2/3 H + phi_n]");
    EXPECT_EQ(ref_instance(RefKind::A0, 5, false), "(6) * [1]");
}

TEST(Reference, ReadingsDifferByMeanCurvatureTerm) {
    auto r = curvature_report(build_gauge_jets(Scenario::random_gauge(4), 4, 2));
    AtomPoly lb = ref_eval(RefKind::A2, r, LaplaceReading::LaplaceBeltrami);
    AtomPoly co = ref_eval(RefKind::A2, r, LaplaceReading::Coordinate);
    // Gamma(2)/4 * (coordinate - Laplace-Beltrami) = (1/4) H phi_n
    EXPECT_EQ(co - lb, r.H * r.phi_n * make_rational(1, 4));
}
