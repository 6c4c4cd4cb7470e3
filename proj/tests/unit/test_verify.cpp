#include "dtn/verify.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Verify, SuiteBookkeeping) {
    CheckSuite s{"demo", {}};
    s.add({"a", "flat", 3, 0, true, ""});
    EXPECT_TRUE(s.pass());
    s.add({"b", "flat", 3, 1, false, "off by one"});
    EXPECT_FALSE(s.pass());
    EXPECT_EQ(s.failures(), 1u);
    EXPECT_EQ(s.first_failure()->check, "b");
    std::string text = suite_to_text(s, true);
    EXPECT_NE(text.find("off by one"), std::string::npos);
    EXPECT_EQ(text.find("] a n="), std::string::npos);
}

TEST(Verify, JsonIsDeterministic) {
    CheckSuite s = check_leading({2, 3});
    EXPECT_TRUE(s.pass());
    EXPECT_EQ(suite_to_json({s}), suite_to_json({check_leading({2, 3})}));
    EXPECT_NE(suite_to_json({s}).find("\"schema\": 1"), std::string::npos);
}

TEST(Verify, FirstOrderMatrixPasses) {
    MatrixConfig c;
    c.dims = {2, 3, 4};
    c.seeds = {1, 2};
    c.kmax = 1;
    auto r = run_matrix(c);
    EXPECT_TRUE(r.coefficients.pass()) << suite_to_text(r.coefficients, true);
    EXPECT_TRUE(r.factorization.pass());
    EXPECT_TRUE(r.explicit_forms.pass());
    EXPECT_FALSE(r.coefficients.records.empty());
}

TEST(Verify, CoordinateReadingMatchesSecondOrder) {
    MatrixConfig c;
    c.dims = {3, 4};
    c.seeds = {1};
    c.kmax = 2;
    c.top_only = true;
    c.reading = LaplaceReading::Coordinate;
    EXPECT_TRUE(run_matrix(c).coefficients.pass());
}

TEST(Verify, HarmonicBallAgreement) {
    MatrixConfig c;
    c.dims = {3, 4};
    c.seeds = {};
    c.kmax = 2;
    c.models = true;
    auto r = run_matrix(c);
    EXPECT_FALSE(r.harmonic.records.empty());
    EXPECT_TRUE(r.harmonic.pass()) << suite_to_text(r.harmonic, true);
}

TEST(Verify, GeometryAndMoments) {
    EXPECT_TRUE(check_geometry({3, 4}, {1}).pass());
    EXPECT_TRUE(check_moments({3, 4}, 3, 4, 1e-8).pass());
}
