#pragma once

#include "dtn/atom_poly.hpp"
#include "dtn/rational.hpp"

#include <stdexcept>

namespace dtn {

class SingularLeadingCoefficient : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Value of a coefficient that must be a plain rational (no atoms).
inline Rational constant_value(const Rational& r) { return r; }
inline Rational constant_value(const AtomPoly& p) {
    if (!p.is_constant()) throw SingularLeadingCoefficient("coefficient is not a constant: " + p.to_string());
    return p.constant_term();
}

template <class C>
C ring_value(const Rational& r) { return C(r); }

// Rational evaluation of a coefficient under an atom assignment.
inline Rational evaluate(const Rational& r, const Assignment&) { return r; }
inline Rational evaluate(const AtomPoly& p, const Assignment& a) { return p.eval(a); }

} // namespace dtn
