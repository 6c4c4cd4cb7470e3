#include "dtn/steklov.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dtn;

namespace {

RadialProblem disk() { return RadialProblem{ModelGeometry::Disk, {}, {}}; }
RadialProblem ball() { return RadialProblem{ModelGeometry::Ball, {}, {}}; }
RadialProblem ball4() { return RadialProblem{ModelGeometry::Ball4, {}, {}}; }

} // namespace

TEST(Steklov, HarmonicEigenvaluesAreModeIndices) {
    for (auto p : {disk(), ball(), ball4()})
        for (int m = 0; m <= 60; ++m) EXPECT_NEAR(mode_eigenvalue(p, m), m, 1e-10) << geometry_name(p.geometry) << " " << m;
}

TEST(Steklov, Multiplicities) {
    EXPECT_EQ(disk().multiplicity(0), 1);
    EXPECT_EQ(disk().multiplicity(3), 2);
    EXPECT_EQ(ball().multiplicity(3), 7);
    EXPECT_DOUBLE_EQ(ball().angular_constant(2), 6.0);
    EXPECT_DOUBLE_EQ(disk().angular_constant(2), 4.0);
    EXPECT_EQ(ball4().multiplicity(2), 9);
    EXPECT_DOUBLE_EQ(ball4().angular_constant(2), 8.0);
}

TEST(Steklov, HarmonicTraceClosedForms) {
    auto sd = spectrum(disk(), 400);
    auto sb = spectrum(ball(), 400);
    for (double t : {0.1, 0.3, 1.0}) {
        EXPECT_NEAR(heat_trace(sd, t).value, 1.0 / std::tanh(t / 2), 1e-9);
        double x = std::exp(-t);
        EXPECT_NEAR(heat_trace(sb, t).value, (1 + x) / ((1 - x) * (1 - x)), 1e-8);
    }
}

TEST(Steklov, HarmonicBallCoefficients) {
    // disk: coth(t/2) = 2/t + t/6 + ...
    auto d = harmonic_ball_trace_coefficients(2, 3);
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 0);
    EXPECT_EQ(d[2], make_rational(1, 6));
    // 3-ball: (1+x)/(1-x)^2 = 2/t^2 + 1/t + 1/3 + ...
    auto b = harmonic_ball_trace_coefficients(3, 3);
    EXPECT_EQ(b[0], 2);
    EXPECT_EQ(b[1], 1);
    EXPECT_EQ(b[2], make_rational(1, 3));
    EXPECT_EQ(unit_ball_normalization(3), 2);
    EXPECT_EQ(unit_ball_normalization(5), make_rational(1, 3));
}

TEST(Steklov, FitRecoversSyntheticExpansion) {
    FitOptions o = default_fit_options(3);
    auto t = geometric_grid(o.t_min, o.t_max, o.points);
    std::vector<double> y;
    for (double s : t) y.push_back(2 / (s * s) + 1 / s + 1.0 / 3 + 0.2 * s * std::log(s) - 0.05 * s + 0.01 * s * s);
    auto f = fit_asymptotics(t, y, 3, 3, o);
    EXPECT_NEAR(f.coefficients[0], 2, 1e-8);
    EXPECT_NEAR(f.coefficients[1], 1, 1e-8);
    EXPECT_NEAR(f.coefficients[2], 1.0 / 3, 1e-8);
}

TEST(Steklov, FitRejectsUnknownGuard) {
    FitOptions o = default_fit_options(2);
    o.guard = {"sqrt"};
    auto t = geometric_grid(o.t_min, o.t_max, o.points);
    std::vector<double> y(t.size(), 1.0);
    EXPECT_THROW(fit_asymptotics(t, y, 2, 2, o), std::invalid_argument);
}

TEST(Steklov, WeightedDiskFirstCoefficient) {
    RadialProblem p{ModelGeometry::Disk, {0, 0, make_rational(1, 2)}, {}};
    FitOptions o = default_fit_options(2);
    auto s = spectrum(p, required_cutoff(p, o.t_min));
    auto t = geometric_grid(o.t_min, o.t_max, o.points);
    std::vector<double> y;
    for (double v : t) y.push_back(heat_trace(s, v).value);
    auto f = fit_asymptotics(t, y, 2, 2, o);
    EXPECT_NEAR(f.coefficients[0], 2, 1e-4);
    EXPECT_NEAR(f.coefficients[1], -1, 1e-3);
    auto pred = predict_coefficients(p, 2);
    EXPECT_EQ(pred[1], -1);
    EXPECT_EQ(engine_predictions(p, 2), pred);
}

TEST(Steklov, EigenvaluesIncreaseWithMode) {
    RadialProblem p{ModelGeometry::Ball, {0, 0, 1}, {make_rational(1, 2)}};
    auto s = spectrum(p, 40);
    for (std::size_t m = 1; m < s.by_mode.size(); ++m) EXPECT_GT(s.by_mode[m], s.by_mode[m - 1]);
}

TEST(Steklov, Validation) {
    RadialProblem p{ModelGeometry::Ball, {0, 1}, {}};
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_THROW(spectrum(disk(), -1), std::invalid_argument);
}

TEST(Steklov, WeylCount) {
    auto s = spectrum(disk(), 200);
    // 1 + 2 * 100 eigenvalues up to 100
    EXPECT_EQ(weyl_count(s, 100.5), 201);
    EXPECT_NEAR(weyl_constant(ModelGeometry::Disk), 2.0, 1e-12);
    EXPECT_NEAR(boundary_normalization(ball()), 2.0, 1e-12);
    EXPECT_NEAR(boundary_normalization(ball4()), 1.0, 1e-12);
}

TEST(Steklov, FourBallPredictions) {
    // harmonic 4-ball: (1 + x)/(1 - x)^3 = 2/t^3 + 2/t^2 + 1/t + 1/3 + ...
    auto exact = harmonic_ball_trace_coefficients(4, 4);
    auto eng = engine_predictions(ball4(), 4);
    EXPECT_EQ(eng, exact);
    EXPECT_EQ(predict_coefficients(ball4(), 3), std::vector<Rational>(exact.begin(), exact.begin() + 3));
}
