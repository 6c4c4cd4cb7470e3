#include "dtn/reference.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dtn {

namespace {

using Q = Quantity;

Rational frac(long num, long den) { return make_rational(num, den); }

RefTermSpec term(std::string latex, std::function<Rational(long)> f, Quantity q) {
    return RefTermSpec{std::move(latex), std::move(f), q};
}

std::vector<RefTermSpec> tilde_a2_terms() {
    return {
        term("\\frac{n^3-4n^2+n+8}{2(n^2-1)}", [](long n) { return frac(n * n * n - 4 * n * n + n + 8, 2 * (n * n - 1)); }, Q::H2),
        term("\\frac{n(n-3)}{2(n^2-1)}", [](long n) { return frac(n * (n - 3), 2 * (n * n - 1)); }, Q::SumK2),
        term("\\frac{n-2}{2(n-1)}", [](long n) { return frac(n - 2, 2 * (n - 1)); }, Q::TildeR),
        term("-\\frac{n-4}{6(n-1)}", [](long n) { return frac(-(n - 4), 6 * (n - 1)); }, Q::R),
    };
}

std::vector<RefTermSpec> phi_v2_terms() {
    return {
        term("\\frac{n-2}{2}", [](long n) { return frac(n - 2, 2); }, Q::PhiN2),
        term("\\frac{n^2-5n+5}{n-1}", [](long n) { return frac(n * n - 5 * n + 5, n - 1); }, Q::HPhiN),
        term("1", [](long) { return Rational(1); }, Q::Group),
    };
}

std::vector<RefTermSpec> tilde_a3_terms() {
    return {
        term("\\frac{n^5-5n^4-10n^3+52n^2+2n-114}{6(n^2-1)(n+3)}",
             [](long n) { return frac(n * n * n * n * n - 5 * n * n * n * n - 10 * n * n * n + 52 * n * n + 2 * n - 114, 6 * (n * n - 1) * (n + 3)); },
             Q::H3),
        term("\\frac{n^4-n^3-12n^2+22n+6}{2(n^2-1)(n+3)}",
             [](long n) { return frac(n * n * n * n - n * n * n - 12 * n * n + 22 * n + 6, 2 * (n * n - 1) * (n + 3)); }, Q::HSumK2),
        term("-\\frac{4(n-3)(n-2)}{3(n^2-1)(n+3)}", [](long n) { return frac(-4 * (n - 3) * (n - 2), 3 * (n * n - 1) * (n + 3)); }, Q::SumK3),
        term("\\frac{n^3-6n^2+2n+14}{2(n^2-1)}", [](long n) { return frac(n * n * n - 6 * n * n + 2 * n + 14, 2 * (n * n - 1)); }, Q::HTildeR),
        term("-\\frac{3n^3-20n^2+12n+42}{6(n^2-1)}", [](long n) { return frac(-(3 * n * n * n - 20 * n * n + 12 * n + 42), 6 * (n * n - 1)); }, Q::HR),
        term("\\frac{2(n^2-3n+1)}{n^2-1}", [](long n) { return frac(2 * (n * n - 3 * n + 1), n * n - 1); }, Q::SumKTildeRic),
        term("-\\frac{2n(3n-8)}{3(n^2-1)}", [](long n) { return frac(-2 * n * (3 * n - 8), 3 * (n * n - 1)); }, Q::SumKRic),
        term("\\frac{n-2}{n-1}", [](long n) { return frac(n - 2, n - 1); }, Q::NablaRicNN),
    };
}

std::vector<RefTermSpec> phi_v3_terms() {
    return {
        term("\\frac{n^4-9n^3+20n^2+7n-31}{2(n^2-1)}", [](long n) { return frac(n * n * n * n - 9 * n * n * n + 20 * n * n + 7 * n - 31, 2 * (n * n - 1)); }, Q::H2PhiN),
        term("\\frac{(n-3)(n^2-6n+6)}{2(n-1)}", [](long n) { return frac((n - 3) * (n * n - 6 * n + 6), 2 * (n - 1)); }, Q::HPhiN2),
        term("\\frac{(n-2)(n-3)}{6}", [](long n) { return frac((n - 2) * (n - 3), 6); }, Q::PhiN3),
        term("\\frac{n^3-7n^2+9n+1}{2(n^2-1)}", [](long n) { return frac(n * n * n - 7 * n * n + 9 * n + 1, 2 * (n * n - 1)); }, Q::PhiNSumK2),
        term("1", [](long) { return Rational(1); }, Q::SumPhiA2K),
        term("-1", [](long) { return Rational(-1); }, Q::HPhiNN),
        term("\\frac{n^2-6n+7}{2(n-1)}", [](long n) { return frac(n * n - 6 * n + 7, 2 * (n - 1)); }, Q::TildeRPhiN),
        term("-\\frac{n^2-10n+15}{6(n-1)}", [](long n) { return frac(-(n * n - 10 * n + 15), 6 * (n - 1)); }, Q::RPhiN),
        term("\\frac{(n-2)(n-3)}{6(n-1)}", [](long n) { return frac((n - 2) * (n - 3), 6 * (n - 1)); }, Q::SumPhiNAA),
        term("1", [](long) { return Rational(1); }, Q::GroupOperator),
    };
}

std::vector<RefTermSpec> concat(std::vector<RefTermSpec> a, const std::vector<RefTermSpec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::map<RefKind, RefFormula> build_table() {
    std::map<RefKind, RefFormula> t;
    auto one = [] { return std::vector<RefTermSpec>{term("1", [](long) { return Rational(1); }, Q::One)}; };
    t[RefKind::A0] = {RefKind::A0, 0, one()};
    t[RefKind::TildeA0] = {RefKind::TildeA0, 0, one()};
    t[RefKind::PhiV0] = {RefKind::PhiV0, 0, {}};

    RefTermSpec h1 = term("\\frac{n-2}{n-1}", [](long n) { return frac(n - 2, n - 1); }, Q::H);
    RefTermSpec p1 = term("1", [](long) { return Rational(1); }, Q::PhiN);
    t[RefKind::A1] = {RefKind::A1, 1, {h1, p1}};
    t[RefKind::TildeA1] = {RefKind::TildeA1, 1, {h1}};
    t[RefKind::PhiV1] = {RefKind::PhiV1, 1, {p1}};

    t[RefKind::A2] = {RefKind::A2, 2, concat(tilde_a2_terms(), phi_v2_terms())};
    t[RefKind::TildeA2] = {RefKind::TildeA2, 2, tilde_a2_terms()};
    t[RefKind::PhiV2] = {RefKind::PhiV2, 2, phi_v2_terms()};

    t[RefKind::A3] = {RefKind::A3, 3, concat(tilde_a3_terms(), phi_v3_terms())};
    t[RefKind::TildeA3] = {RefKind::TildeA3, 3, tilde_a3_terms()};
    t[RefKind::PhiV3] = {RefKind::PhiV3, 3, phi_v3_terms()};

    t[RefKind::B2] = {RefKind::B2, 2, {
        term("\\frac{(n-2)(n^2-n-4)}{2(n^2-1)}", [](long n) { return frac((n - 2) * (n * n - n - 4), 2 * (n * n - 1)); }, Q::H2),
        term("-\\frac{2(n^2-3n-1)}{3(n^2-1)}", [](long n) { return frac(-2 * (n * n - 3 * n - 1), 3 * (n * n - 1)); }, Q::R),
        term("\\frac{n(n-1)(n-2)}{n+1}", [](long n) { return frac(n * (n - 1) * (n - 2), n + 1); }, Q::K0),
        term("\\frac{n-2}{2}", [](long n) { return frac(n - 2, 2); }, Q::PhiN2),
        term("\\frac{n^2-5n+5}{n-1}", [](long n) { return frac(n * n - 5 * n + 5, n - 1); }, Q::HPhiN),
        term("1", [](long) { return Rational(1); }, Q::Group),
    }};

    t[RefKind::B3] = {RefKind::B3, 3, {
        term("\\frac{n^5-2n^4-25n^3+12n^2+164n-96}{6(n^2-1)(n+3)}",
             [](long n) { return frac(n * n * n * n * n - 2 * n * n * n * n - 25 * n * n * n + 12 * n * n + 164 * n - 96, 6 * (n * n - 1) * (n + 3)); }, Q::H3),
        term("\\frac{n(n-2)(3n^4-12n^3-38n^2+108n-21)}{3(n^2-1)(n+3)}",
             [](long n) { return frac(n * (n - 2) * (3 * n * n * n * n - 12 * n * n * n - 38 * n * n + 108 * n - 21), 3 * (n * n - 1) * (n + 3)); }, Q::HK0),
        term("-\\frac{3n^4-13n^3-44n^2+120n+72}{3(n^2-1)(n+3)}",
             [](long n) { return frac(-(3 * n * n * n * n - 13 * n * n * n - 44 * n * n + 120 * n + 72), 3 * (n * n - 1) * (n + 3)); }, Q::HR),
        term("\\frac{2(3n^3-n^2-14n-12)}{3(n^2-1)(n+3)}", [](long n) { return frac(2 * (3 * n * n * n - n * n - 14 * n - 12), 3 * (n * n - 1) * (n + 3)); }, Q::SumK3),
        term("\\frac{(n-3)(n-5)(n^2-2)}{2(n^2-1)}", [](long n) { return frac((n - 3) * (n - 5) * (n * n - 2), 2 * (n * n - 1)); }, Q::H2PhiN),
        term("\\frac{(n-3)(n^2-6n+6)}{2(n-1)}", [](long n) { return frac((n - 3) * (n * n - 6 * n + 6), 2 * (n - 1)); }, Q::HPhiN2),
        term("\\frac{(n-2)(n-3)}{6}", [](long n) { return frac((n - 2) * (n - 3), 6); }, Q::PhiN3),
        term("1", [](long) { return Rational(1); }, Q::SumPhiA2K),
        term("-1", [](long) { return Rational(-1); }, Q::HPhiNN),
        term("-\\frac{2n^3-15n^2+16n+9}{3(n^2-1)}", [](long n) { return frac(-(2 * n * n * n - 15 * n * n + 16 * n + 9), 3 * (n * n - 1)); }, Q::RPhiN),
        term("\\frac{(n-1)(n^3-6n^2+6n+1)}{n+1}", [](long n) { return frac((n - 1) * (n * n * n - 6 * n * n + 6 * n + 1), n + 1); }, Q::K0PhiN),
        term("\\frac{(n-2)(n-3)}{6(n-1)}", [](long n) { return frac((n - 2) * (n - 3), 6 * (n - 1)); }, Q::SumPhiNAA),
        term("1", [](long) { return Rational(1); }, Q::GroupOperator),
    }};
    return t;
}

} // namespace

std::string ref_kind_name(RefKind k) {
    switch (k) {
    case RefKind::A0: return "a0";
    case RefKind::A1: return "a1";
    case RefKind::A2: return "a2";
    case RefKind::A3: return "a3";
    case RefKind::TildeA0: return "tilde_a0";
    case RefKind::TildeA1: return "tilde_a1";
    case RefKind::TildeA2: return "tilde_a2";
    case RefKind::TildeA3: return "tilde_a3";
    case RefKind::PhiV0: return "phiv_a0";
    case RefKind::PhiV1: return "phiv_a1";
    case RefKind::PhiV2: return "phiv_a2";
    case RefKind::PhiV3: return "phiv_a3";
    case RefKind::B2: return "b2";
    case RefKind::B3: return "b3";
    }
    return "?";
}

RefKind parse_ref_kind(const std::string& s) {
    for (RefKind k : {RefKind::A0, RefKind::A1, RefKind::A2, RefKind::A3, RefKind::TildeA0, RefKind::TildeA1, RefKind::TildeA2,
                      RefKind::TildeA3, RefKind::PhiV0, RefKind::PhiV1, RefKind::PhiV2, RefKind::PhiV3, RefKind::B2, RefKind::B3})
        if (ref_kind_name(k) == s) return k;
    throw std::invalid_argument("unknown reference formula: " + s);
}

const RefFormula& ref_formula(RefKind kind) {
    static const std::map<RefKind, RefFormula> table = build_table();
    return table.at(kind);
}

int ref_index(RefKind k) { return ref_formula(k).k; }

int ref_min_dimension(RefKind k) {
    int idx = ref_index(k);
    return idx == 0 ? 2 : idx + 1;
}

Rational ref_prefactor(RefKind kind, int n) {
    int k = ref_index(kind);
    if (n - k < 1) throw OutOfRange("Gamma prefactor undefined");
    return ratio(gamma_int(n - std::max(k, 1)), Integer(1) << k);
}

std::string quantity_latex(Quantity q) {
    switch (q) {
    case Q::One: return "1";
    case Q::H: return "H";
    case Q::H2: return "H^2";
    case Q::H3: return "H^3";
    case Q::SumK2: return "\\sum_{\\alpha}\\kappa_\\alpha^2";
    case Q::SumK3: return "\\sum_{\\alpha}\\kappa_\\alpha^3";
    case Q::HSumK2: return "H\\sum_{\\alpha}\\kappa_\\alpha^2";
    case Q::TildeR: return "\\tilde{R}";
    case Q::R: return "R";
    case Q::HTildeR: return "H\\tilde{R}";
    case Q::HR: return "HR";
    case Q::SumKTildeRic: return "\\sum_{\\alpha}\\kappa_\\alpha\\tilde{R}_{\\alpha\\alpha}";
    case Q::SumKRic: return "\\sum_{\\alpha}\\kappa_\\alpha R_{\\alpha\\alpha}";
    case Q::NablaRicNN: return "\\nabla_{n}\\tilde{R}_{nn}";
    case Q::PhiN: return "\\phi_n";
    case Q::PhiN2: return "\\phi_n^2";
    case Q::PhiN3: return "\\phi_n^3";
    case Q::HPhiN: return "H\\phi_n";
    case Q::H2PhiN: return "H^2\\phi_n";
    case Q::HPhiN2: return "H\\phi_n^2";
    case Q::PhiNSumK2: return "\\phi_n\\sum_{\\alpha}\\kappa_\\alpha^2";
    case Q::SumPhiA2K: return "\\sum_{\\alpha}\\phi_\\alpha^2\\kappa_\\alpha";
    case Q::HPhiNN: return "H\\phi_{nn}";
    case Q::TildeRPhiN: return "\\tilde{R}\\phi_n";
    case Q::RPhiN: return "R\\phi_n";
    case Q::SumPhiNAA: return "\\sum_{\\alpha}\\phi_{n\\alpha\\alpha}";
    case Q::Group: return "\\Big(\\Delta\\phi - \\frac{1}{2}|\\nabla\\phi|^2 + 2V\\Big)";
    case Q::GroupOperator:
        return "\\Big(\\partial_n + (n-3)\\phi_n + (n-4)H\\Big)\\Big(\\Delta\\phi - \\frac{1}{2}|\\nabla\\phi|^2 + 2V\\Big)";
    case Q::K0: return "K_0";
    case Q::HK0: return "HK_0";
    case Q::K0PhiN: return "K_0\\phi_n";
    }
    return "?";
}

std::string ref_latex(RefKind kind) {
    const RefFormula& f = ref_formula(kind);
    std::ostringstream os;
    os << "\\frac{\\Gamma(n-" << std::max(f.k, 1) << ")}{" << (1 << f.k) << "}\\Big[";
    if (f.terms.empty()) os << "0";
    bool first = true;
    for (const auto& t : f.terms) {
        bool neg = !t.coeff_latex.empty() && t.coeff_latex[0] == '-';
        std::string body = neg ? t.coeff_latex.substr(1) : t.coeff_latex;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (body != "1") os << body;
        else if (t.quantity == Q::One) os << "1";
        if (t.quantity != Q::One) os << quantity_latex(t.quantity);
    }
    os << "\\Big]";
    return os.str();
}

std::string quantity_text(Quantity q) {
    switch (q) {
    case Q::One: return "1";
    case Q::H: return "H";
    case Q::H2: return "H^2";
    case Q::H3: return "H^3";
    case Q::SumK2: return "sum kappa^2";
    case Q::SumK3: return "sum kappa^3";
    case Q::HSumK2: return "H sum kappa^2";
    case Q::TildeR: return "tildeR";
    case Q::R: return "R";
    case Q::HTildeR: return "H tildeR";
    case Q::HR: return "H R";
    case Q::SumKTildeRic: return "sum kappa_a tildeRic_aa";
    case Q::SumKRic: return "sum kappa_a Ric_aa";
    case Q::NablaRicNN: return "nabla_n tildeRic_nn";
    case Q::PhiN: return "phi_n";
    case Q::PhiN2: return "phi_n^2";
    case Q::PhiN3: return "phi_n^3";
    case Q::HPhiN: return "H phi_n";
    case Q::H2PhiN: return "H^2 phi_n";
    case Q::HPhiN2: return "H phi_n^2";
    case Q::PhiNSumK2: return "phi_n sum kappa^2";
    case Q::SumPhiA2K: return "sum phi_a^2 kappa_a";
    case Q::HPhiNN: return "H phi_nn";
    case Q::TildeRPhiN: return "tildeR phi_n";
    case Q::RPhiN: return "R phi_n";
    case Q::SumPhiNAA: return "sum phi_naa";
    case Q::Group: return "G";
    case Q::GroupOperator: return "(d_n + (n-3) phi_n + (n-4) H) G";
    case Q::K0: return "K0";
    case Q::HK0: return "H K0";
    case Q::K0PhiN: return "K0 phi_n";
    }
    return "?";
}

std::string ref_instance(RefKind kind, int n, bool latex) {
    if (n < ref_min_dimension(kind))
        throw OutOfRange(ref_kind_name(kind) + " requires n >= " + std::to_string(ref_min_dimension(kind)));
    const RefFormula& f = ref_formula(kind);
    std::ostringstream os;
    Rational pre = ref_prefactor(kind, n);
    if (!latex)
        os << "(" << to_string(pre) << ") * [";
    else if (pre.get_den() == 1)
        os << pre.get_num().get_str() << "\\Big[";
    else
        os << "\\tfrac{" << pre.get_num().get_str() << "}{" << pre.get_den().get_str() << "}\\Big[";
    bool first = true;
    for (const auto& t : f.terms) {
        Rational c = t.coeff(n);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = a == 1;
        if (latex) {
            if (!unit || t.quantity == Q::One) {
                if (a.get_den() == 1) os << a.get_num().get_str();
                else os << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
            }
            if (t.quantity != Q::One) os << quantity_latex(t.quantity);
        } else {
            if (!unit || t.quantity == Q::One) os << to_string(a);
            if (t.quantity != Q::One) os << (unit ? "" : " ") << quantity_text(t.quantity);
        }
    }
    if (first) os << "0";
    os << (latex ? "\\Big]" : "]");
    return os.str();
}

} // namespace dtn
