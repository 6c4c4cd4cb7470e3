#include "dtn/rational.hpp"

#include <cctype>
#include <string>

namespace dtn {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw ParseError("bad rational literal: " + std::string(text));
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer double_factorial(int n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    if (n <= 0) return 1;
    Integer f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer gamma_int(int k) {
    if (k < 1) throw std::domain_error("Gamma pole at non-positive integer");
    return factorial(k - 1);
}

} // namespace dtn
