#include "dtn/atom_poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace dtn {

Monomial::Monomial(Atom a, unsigned e) {
    if (e > 0) factors_.emplace_back(a, e);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.first < y.first; });
    Monomial m;
    for (const auto& f : factors) {
        if (f.second == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == f.first)
            m.factors_.back().second += f.second;
        else
            m.factors_.push_back(f);
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += static_cast<int>(f.second);
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

MissingAtom::MissingAtom(Atom a) : std::runtime_error("missing atom value: " + a.name()), atom(a) {}

AtomPoly::AtomPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

AtomPoly::AtomPoly(Atom a) { terms_.emplace_back(Monomial(a), Rational(1)); }

AtomPoly AtomPoly::from_terms(std::vector<Term> terms) {
    AtomPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void AtomPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
        std::size_t s = r + 1;
        Rational c = terms_[r].second;
        while (s < terms_.size() && terms_[s].first == terms_[r].first) c += terms_[s++].second;
        if (sgn(c) != 0) {
            if (w != r) terms_[w].first = std::move(terms_[r].first);
            terms_[w].second = c;
            ++w;
        }
        r = s;
    }
    terms_.resize(w);
}

bool AtomPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational AtomPoly::constant_term() const {
    if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
    return Rational(0);
}

int AtomPoly::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

std::vector<Atom> AtomPoly::atoms() const {
    std::set<Atom> s;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors()) s.insert(f.first);
    return {s.begin(), s.end()};
}

namespace {

template <class Combine>
std::vector<AtomPoly::Term> merge_terms(const std::vector<AtomPoly::Term>& a,
                                        const std::vector<AtomPoly::Term>& b, Combine sign_b) {
    std::vector<AtomPoly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            out.emplace_back(j->first, sign_b(j->second));
            ++j;
        } else {
            Rational c = i->second + sign_b(j->second);
            if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    for (; j != b.end(); ++j) out.emplace_back(j->first, sign_b(j->second));
    return out;
}

} // namespace

AtomPoly& AtomPoly::operator+=(const AtomPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return c; });
    return *this;
}

AtomPoly& AtomPoly::operator-=(const AtomPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return Rational(-c); });
    return *this;
}

AtomPoly operator*(const AtomPoly& a, const AtomPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return AtomPoly();
    if (a.is_constant()) return b * a.terms_[0].second;
    if (b.is_constant()) return a * b.terms_[0].second;
    std::vector<AtomPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.emplace_back(x.first * y.first, Rational(x.second * y.second));
    return AtomPoly::from_terms(std::move(out));
}

AtomPoly& AtomPoly::operator*=(const AtomPoly& o) { return *this = *this * o; }

AtomPoly& AtomPoly::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= r;
    return *this;
}

AtomPoly AtomPoly::operator-() const {
    AtomPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Rational AtomPoly::eval(const Assignment& values) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.second;
        for (const auto& f : t.first.factors()) {
            auto it = values.find(f.first);
            if (it == values.end()) throw MissingAtom(f.first);
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), f.second);
            mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), f.second);
            v *= pw;
        }
        sum += v;
    }
    return sum;
}

AtomPoly AtomPoly::substitute(const std::map<Atom, AtomPoly>& values) const {
    AtomPoly out;
    for (const auto& t : terms_) {
        AtomPoly prod(t.second);
        std::vector<Monomial::Factor> kept;
        for (const auto& f : t.first.factors()) {
            auto it = values.find(f.first);
            if (it == values.end()) {
                kept.push_back(f);
                continue;
            }
            for (unsigned e = 0; e < f.second; ++e) prod *= it->second;
        }
        if (!kept.empty()) {
            AtomPoly m;
            m.terms_.emplace_back(Monomial::from_factors(std::move(kept)), Rational(1));
            prod *= m;
        }
        out += prod;
    }
    return out;
}

std::string AtomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.second;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        bool unit = (c == 1);
        if (!unit || t.first.is_one()) s += dtn::to_string(c);
        bool need_star = !unit || t.first.is_one();
        for (const auto& f : t.first.factors()) {
            if (need_star) s += '*';
            need_star = true;
            s += f.first.name();
            if (f.second != 1) s += '^' + std::to_string(f.second);
        }
    }
    return s;
}

AtomPoly AtomPoly::parse(std::string_view text) {
    std::string src;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) src += c;
    if (src.empty()) throw ParseError("empty polynomial");
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < src.size()) {
        bool neg = false;
        if (src[pos] == '+' || src[pos] == '-') {
            neg = src[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        int depth = 0;
        while (end < src.size()) {
            char c = src[end];
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (depth == 0 && (c == '+' || c == '-') && end > pos && src[end - 1] != '^') break;
            ++end;
        }
        std::string_view term(src.data() + pos, end - pos);
        if (term.empty()) throw ParseError("empty term in polynomial");
        Rational coeff(1);
        std::vector<Monomial::Factor> factors;
        std::size_t fp = 0;
        while (fp <= term.size()) {
            std::size_t fe = term.find('*', fp);
            if (fe == std::string_view::npos) fe = term.size();
            std::string_view fac = term.substr(fp, fe - fp);
            if (fac.empty()) throw ParseError("empty factor in polynomial");
            if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
                coeff *= parse_rational(fac);
            } else {
                unsigned e = 1;
                auto caret = fac.rfind('^');
                if (caret != std::string_view::npos) {
                    e = static_cast<unsigned>(std::stoul(std::string(fac.substr(caret + 1))));
                    fac = fac.substr(0, caret);
                }
                factors.emplace_back(Atom::parse(fac), e);
            }
            fp = fe + 1;
        }
        if (neg) coeff = -coeff;
        terms.emplace_back(Monomial::from_factors(std::move(factors)), coeff);
        pos = end;
    }
    return from_terms(std::move(terms));
}

std::string to_string(const AtomPoly& p) { return p.to_string(); }

std::string atom_latex(Atom a) {
    auto idx = a.indices();
    bool wide = false;
    for (int i : idx) wide = wide || i > 9;
    auto join = [&](std::size_t from, std::size_t to) {
        std::string s;
        for (std::size_t i = from; i < to; ++i) {
            if (wide && i > from) s += ',';
            s += std::to_string(idx[i]);
        }
        return s;
    };
    std::string sub;
    switch (a.kind()) {
    case AtomKind::K0: return "K_0";
    case AtomKind::Kappa:
        if (idx.size() == 1 && idx[0] == 0) return "\\kappa";
        return "\\kappa_{" + join(0, idx.size()) + "}";
    case AtomKind::MetricJet:
        sub = join(0, std::min<std::size_t>(2, idx.size()));
        if (idx.size() > 2) sub += "," + join(2, idx.size());
        return "g_{" + sub + "}";
    case AtomKind::PhiJet: return idx.empty() ? "\\phi" : "\\phi_{" + join(0, idx.size()) + "}";
    case AtomKind::VJet: return idx.empty() ? "V" : "V_{" + join(0, idx.size()) + "}";
    case AtomKind::BoundaryRiemann: return "R_{" + join(0, idx.size()) + "}";
    case AtomKind::SecondNormalJet: return "S_{" + join(0, idx.size()) + "}";
    case AtomKind::ThirdNormalJet: return "T_{" + join(0, idx.size()) + "}";
    case AtomKind::Aux: return "x_{" + join(0, idx.size()) + "}";
    }
    return a.name();
}

std::string to_latex(const AtomPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.second;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (c != 1 || t.first.is_one()) {
            if (c.get_den() == 1)
                s += c.get_num().get_str();
            else
                s += "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
        }
        for (const auto& f : t.first.factors()) {
            s += atom_latex(f.first);
            if (f.second != 1) s += "^{" + std::to_string(f.second) + "}";
        }
    }
    return s;
}

AtomPoly poly_add(const AtomPoly& a, const AtomPoly& b) { return a + b; }
AtomPoly poly_mul(const AtomPoly& a, const AtomPoly& b) { return a * b; }
Rational poly_eval(const AtomPoly& p, const Assignment& values) { return p.eval(values); }

AtomPoly riemann_component(int a, int b, int c, int d) {
    if (a == b || c == d) return AtomPoly();
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -sign;
    }
    if (c > d) {
        std::swap(c, d);
        sign = -sign;
    }
    if (std::pair(a, b) > std::pair(c, d)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    std::set<int> distinct{a, b, c, d};
    if (distinct.size() < 4) return AtomPoly(Atom::riemann_basis(a, b, c, d)) * Rational(sign);
    // a is the smallest index. With i<j<k<l the normalized pairings are
    // (ij|kl), (ik|jl), (il|jk); the last is eliminated by Bianchi:
    // R_iljk = R_ikjl - R_ijkl.
    int i = a;
    std::vector<int> rest;
    for (int v : distinct)
        if (v != i) rest.push_back(v);
    int j = rest[0], k = rest[1], l = rest[2];
    if (b == l) {
        AtomPoly r = AtomPoly(Atom::riemann_basis(i, k, j, l)) - AtomPoly(Atom::riemann_basis(i, j, k, l));
        return r * Rational(sign);
    }
    return AtomPoly(Atom::riemann_basis(a, b, c, d)) * Rational(sign);
}

namespace {

std::vector<Rational> value_pool() {
    std::set<Rational> s;
    for (long p = -9; p <= 9; ++p)
        for (long q = 1; q <= 7; ++q) s.insert(make_rational(p, q));
    return {s.begin(), s.end()};
}

} // namespace

Assignment random_assignment(const std::vector<Atom>& atoms, std::uint64_t seed) {
    static const std::vector<Rational> pool = value_pool();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::set<Rational> used;
    Assignment out;
    for (Atom a : atoms) {
        if (out.count(a)) continue;
        if (used.size() == pool.size()) used.clear();
        Rational v;
        do {
            v = make_rational(num(rng), den(rng));
        } while (used.count(v));
        used.insert(v);
        out.emplace(a, v);
    }
    return out;
}

bool poly_equal_probabilistic(const AtomPoly& a, const AtomPoly& b, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (a == b) return true;
    AtomPoly diff = a - b;
    auto atoms = diff.atoms();
    for (int t = 0; t < trials; ++t) {
        auto values = random_assignment(atoms, seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
        if (sgn(diff.eval(values)) != 0) return false;
    }
    return true;
}

} // namespace dtn
