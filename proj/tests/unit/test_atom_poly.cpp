#include "dtn/atom_poly.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Atom, NamesRoundTrip) {
    for (Atom a : {Atom::metric_jet(1, 2, {3, 3}), Atom::phi({1, 2}), Atom::potential({}), Atom::kappa(2), Atom::k0(),
                   Atom::second_normal(1, 1), Atom::third_normal(2, 1)})
        EXPECT_EQ(Atom::parse(a.name()), a) << a.name();
    EXPECT_EQ(Atom::metric_jet(2, 1, {3, 1}), Atom::metric_jet(1, 2, {1, 3}));
    EXPECT_THROW(Atom::parse("zeta[1]"), ParseError);
}

TEST(Atom, OrderFollowsKindThenIndices) {
    EXPECT_LT(Atom::metric_jet(1, 1, {3}), Atom::phi({1}));
    EXPECT_LT(Atom::kappa(1), Atom::kappa(2));
}

TEST(AtomPoly, ArithmeticIsCanonical) {
    AtomPoly x(Atom::kappa(1)), y(Atom::kappa(2));
    AtomPoly a = (x + y) * (x - y);
    AtomPoly b = x * x - y * y;
    EXPECT_EQ(a, b);
    EXPECT_TRUE((a - b).is_zero());
    EXPECT_EQ((x * Rational(0)).size(), 0u);
    EXPECT_EQ(poly_mul(x, AtomPoly(make_rational(1, 3))), x * make_rational(1, 3));
    EXPECT_EQ(poly_add(x, -x), AtomPoly());
}

TEST(AtomPoly, ParsePrintRoundTrip) {
    AtomPoly p = AtomPoly::parse("1/2*phi[3] - 2*kappa[1]^2*K0 + 3");
    EXPECT_EQ(AtomPoly::parse(p.to_string()), p);
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.constant_term(), 3);
}

TEST(AtomPoly, EvalAndMissingAtom) {
    AtomPoly p = AtomPoly::parse("kappa[1]^2 + 1/2*phi[3]");
    Assignment v{{Atom::kappa(1), make_rational(2, 3)}, {Atom::phi({3}), Rational(4)}};
    EXPECT_EQ(poly_eval(p, v), make_rational(4, 9) + 2);
    v.erase(Atom::phi({3}));
    EXPECT_THROW(poly_eval(p, v), MissingAtom);
}

TEST(AtomPoly, SubstituteKeepsOtherAtoms) {
    AtomPoly p = AtomPoly::parse("kappa[0]*K0 + kappa[1]");
    AtomPoly q = p.substitute({{Atom::k0(), AtomPoly::parse("kappa[0]")}});
    EXPECT_EQ(q, AtomPoly::parse("kappa[0]^2 + kappa[1]"));
}

TEST(AtomPoly, RiemannComponentSymmetries) {
    EXPECT_EQ(riemann_component(1, 2, 1, 2), -riemann_component(2, 1, 1, 2));
    EXPECT_EQ(riemann_component(1, 2, 3, 4), riemann_component(3, 4, 1, 2));
    EXPECT_TRUE((riemann_component(1, 2, 3, 4) + riemann_component(1, 3, 4, 2) + riemann_component(1, 4, 2, 3)).is_zero());
    EXPECT_TRUE(riemann_component(1, 1, 2, 3).is_zero());
}

TEST(AtomPoly, SchwartzZippel) {
    AtomPoly x(Atom::kappa(1)), y(Atom::kappa(2));
    EXPECT_TRUE(poly_equal_probabilistic((x + y) * (x + y), x * x + x * y * Rational(2) + y * y, 20, 3));
    EXPECT_FALSE(poly_equal_probabilistic(x * y, y * y, 20, 3));
    EXPECT_TRUE(poly_equal_probabilistic(x, x, 1, 0));
}

TEST(AtomPoly, RandomAssignmentIsSeeded) {
    std::vector<Atom> atoms = {Atom::kappa(1), Atom::kappa(2), Atom::phi({1})};
    EXPECT_EQ(random_assignment(atoms, 5), random_assignment(atoms, 5));
    EXPECT_NE(random_assignment(atoms, 5), random_assignment(atoms, 6));
}

TEST(AtomPoly, Latex) {
    EXPECT_EQ(to_latex(AtomPoly::parse("1/2*kappa[1]^2 - phi[3]")), "-\\phi_{3} + \\tfrac{1}{2}\\kappa_{1}^{2}");
}
