#pragma once

#include "dtn/atom.hpp"
#include "dtn/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtn {

// Product of atom powers, factors sorted by atom with positive exponents.
class Monomial {
public:
    using Factor = std::pair<Atom, unsigned>;

    Monomial() = default;
    explicit Monomial(Atom a, unsigned e = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

using Assignment = std::map<Atom, Rational>;

class MissingAtom : public std::runtime_error {
public:
    explicit MissingAtom(Atom a);
    Atom atom;
};

// Multivariate polynomial over Q in atoms. Terms are kept sorted by
// monomial with no zero coefficients, so structural equality is equality.
class AtomPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    AtomPoly() = default;
    AtomPoly(const Rational& c);  // NOLINT: implicit promotion of scalars
    AtomPoly(long c) : AtomPoly(Rational(c)) {}  // NOLINT
    AtomPoly(int c) : AtomPoly(Rational(c)) {}  // NOLINT
    explicit AtomPoly(Atom a);

    static AtomPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const;
    std::vector<Atom> atoms() const;

    AtomPoly& operator+=(const AtomPoly& o);
    AtomPoly& operator-=(const AtomPoly& o);
    AtomPoly& operator*=(const AtomPoly& o);
    AtomPoly& operator*=(const Rational& r);

    friend AtomPoly operator+(AtomPoly a, const AtomPoly& b) { return a += b; }
    friend AtomPoly operator-(AtomPoly a, const AtomPoly& b) { return a -= b; }
    friend AtomPoly operator*(const AtomPoly& a, const AtomPoly& b);
    friend AtomPoly operator*(AtomPoly a, const Rational& r) { return a *= r; }
    friend AtomPoly operator*(const Rational& r, AtomPoly a) { return a *= r; }
    AtomPoly operator-() const;

    bool operator==(const AtomPoly& o) const = default;

    Rational eval(const Assignment& values) const;
    // Replaces every atom present in `values`; other atoms are kept.
    AtomPoly substitute(const std::map<Atom, AtomPoly>& values) const;

    std::string to_string() const;
    static AtomPoly parse(std::string_view text);

private:
    void normalize();
    std::vector<Term> terms_;
};

inline bool is_zero(const AtomPoly& p) { return p.is_zero(); }
std::string to_string(const AtomPoly& p);
std::string atom_latex(Atom a);
std::string to_latex(const AtomPoly& p);

AtomPoly poly_add(const AtomPoly& a, const AtomPoly& b);
AtomPoly poly_mul(const AtomPoly& a, const AtomPoly& b);
Rational poly_eval(const AtomPoly& p, const Assignment& values);

// R_{abcd} on the boundary expressed in the canonical basis. Pair
// antisymmetry, pair exchange and the first Bianchi identity are applied,
// so four distinct indices can yield a two-term combination.
AtomPoly riemann_component(int a, int b, int c, int d);

// Seeded rational values p/q with p in [-9, 9] and q in [1, 7]. Values are
// distinct across atoms while the pool of 89 reduced fractions lasts; after
// that the pool is refilled and repeats become possible.
Assignment random_assignment(const std::vector<Atom>& atoms, std::uint64_t seed);

// Schwartz-Zippel test. A nonzero difference of total degree d vanishes at
// a random point of the 89-value grid with probability at most d/89, so
// `trials` independent points give a false positive with probability at
// most (d/89)^trials. Structural equality short-circuits.
bool poly_equal_probabilistic(const AtomPoly& a, const AtomPoly& b, int trials,
                              std::uint64_t seed);

} // namespace dtn
