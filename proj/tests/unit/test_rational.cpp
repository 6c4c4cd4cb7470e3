#include "dtn/rational.hpp"

#include <gtest/gtest.h>

using namespace dtn;

TEST(Rational, MakeRationalCanonicalizes) {
    Rational a = make_rational(2, 4);
    EXPECT_EQ(a, make_rational(1, 2));
    EXPECT_EQ(a.get_num(), 1);
    EXPECT_EQ(a.get_den(), 2);
    EXPECT_EQ(make_rational(3, -6), make_rational(-1, 2));
}

TEST(Rational, RatioOfIntegers) {
    EXPECT_EQ(ratio(Integer(10), Integer(-4)), make_rational(-5, 2));
    EXPECT_EQ(to_string(ratio(Integer(6), Integer(3))), "2");
}

TEST(Rational, ParseAndPrintRoundTrip) {
    for (const char* s : {"0", "7", "-3/4", "12345678901234567890/7"}) EXPECT_EQ(to_string(parse_rational(s)), s);
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, Factorials) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(0), 1);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_EQ(double_factorial(8), 384);
    EXPECT_EQ(gamma_int(1), 1);
    EXPECT_EQ(gamma_int(5), 24);
}
