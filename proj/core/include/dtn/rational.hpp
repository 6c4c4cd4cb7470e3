#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtn {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational ratio(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// n! for n >= 0.
Integer factorial(int n);
// (n)!! with (-1)!! = 0!! = 1.
Integer double_factorial(int n);
// Gamma(k) = (k-1)! for integer k >= 1.
Integer gamma_int(int k);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dtn
