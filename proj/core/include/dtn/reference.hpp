#pragma once

#include "dtn/geometry.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtn {

// Closed-form heat coefficients, normalized so that
// a_k(x') = omega_{n-2} / (2 pi)^{n-1} * value.
enum class RefKind { A0, A1, A2, A3, TildeA0, TildeA1, TildeA2, TildeA3, PhiV0, PhiV1, PhiV2, PhiV3, B2, B3 };

std::string ref_kind_name(RefKind k);
RefKind parse_ref_kind(const std::string& s);
int ref_index(RefKind k);        // the k of a_k
int ref_min_dimension(RefKind k);

class OutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class MissingReportField : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scalar invariants the formulas are built from.
enum class Quantity {
    One, H, H2, H3, SumK2, SumK3, HSumK2, TildeR, R, HTildeR, HR, SumKTildeRic, SumKRic, NablaRicNN,
    PhiN, PhiN2, PhiN3, HPhiN, H2PhiN, HPhiN2, PhiNSumK2, SumPhiA2K, HPhiNN, TildeRPhiN, RPhiN, SumPhiNAA,
    Group, GroupOperator, K0, HK0, K0PhiN
};

std::string quantity_latex(Quantity q);

// How Delta phi inside the phi/V group is read: the Laplace-Beltrami
// operator of the ambient metric, or the plain coordinate sum of phi_jj in
// boundary normal coordinates.
enum class LaplaceReading { LaplaceBeltrami, Coordinate };

struct RefTermSpec {
    std::string coeff_latex;
    std::function<Rational(long)> coeff;
    Quantity quantity;
};

// Overall factor Gamma(n - k) / 2^k in front of the bracket, and the
// bracketed summands.
struct RefFormula {
    RefKind kind;
    int k;
    std::vector<RefTermSpec> terms;
};

const RefFormula& ref_formula(RefKind kind);
Rational ref_prefactor(RefKind kind, int n);
std::string ref_latex(RefKind kind);
std::string quantity_text(Quantity q);
// The formula at a fixed dimension, coefficients evaluated; G stands for
// Delta phi - |grad phi|^2/2 + 2V.
std::string ref_instance(RefKind kind, int n, bool latex);

template <class C>
C quantity_value(Quantity q, const CurvatureReport<C>& r, LaplaceReading reading = LaplaceReading::LaplaceBeltrami) {
    const C& H = r.H;
    auto need = [](const std::optional<C>& v, const char* what) -> const C& {
        if (!v) throw MissingReportField(what);
        return *v;
    };
    bool coord = reading == LaplaceReading::Coordinate;
    const C& lap = coord ? r.laplacePhiCoordinate : r.laplacePhi;
    auto group = [&]() { return C(lap - C(r.gradPhiSq * make_rational(1, 2)) + C(r.V0 * Rational(2))); };
    switch (q) {
    case Quantity::One: return C(1);
    case Quantity::H: return H;
    case Quantity::H2: return C(H * H);
    case Quantity::H3: return C(C(H * H) * H);
    case Quantity::SumK2: return r.sum_kappa_pow(2);
    case Quantity::SumK3: return r.sum_kappa_pow(3);
    case Quantity::HSumK2: return C(H * r.sum_kappa_pow(2));
    case Quantity::TildeR: return r.tildeScalar;
    case Quantity::R: return r.boundaryScalar;
    case Quantity::HTildeR: return C(H * r.tildeScalar);
    case Quantity::HR: return C(H * r.boundaryScalar);
    case Quantity::SumKTildeRic: return r.sum_kappa_tilde_ricci();
    case Quantity::SumKRic: return r.sum_kappa_ricci();
    case Quantity::NablaRicNN: return need(r.nablaRicNN, "nabla_n tildeRic_nn");
    case Quantity::PhiN: return r.phi_n;
    case Quantity::PhiN2: return C(r.phi_n * r.phi_n);
    case Quantity::PhiN3: return C(C(r.phi_n * r.phi_n) * r.phi_n);
    case Quantity::HPhiN: return C(H * r.phi_n);
    case Quantity::H2PhiN: return C(C(H * H) * r.phi_n);
    case Quantity::HPhiN2: return C(H * C(r.phi_n * r.phi_n));
    case Quantity::PhiNSumK2: return C(r.phi_n * r.sum_kappa_pow(2));
    case Quantity::SumPhiA2K: return r.sum_phi_alpha_sq_kappa();
    case Quantity::HPhiNN: return C(H * r.phi_nn);
    case Quantity::TildeRPhiN: return C(r.tildeScalar * r.phi_n);
    case Quantity::RPhiN: return C(r.boundaryScalar * r.phi_n);
    case Quantity::SumPhiNAA:
        if (r.phi_naa.empty()) throw MissingReportField("phi_{n alpha alpha}");
        return r.sum_phi_naa();
    case Quantity::Group: return group();
    case Quantity::GroupOperator: {
        C g = group();
        const C& dn = need(coord ? r.normalDerivGroupCoordinate : r.normalDerivGroup,
                           "d_n(Delta phi - |grad phi|^2/2 + 2V)");
        return C(dn + C(C(r.phi_n * Rational(r.n - 3)) * g) + C(C(H * Rational(r.n - 4)) * g));
    }
    case Quantity::K0: return r.K0;
    case Quantity::HK0: return C(H * r.K0);
    case Quantity::K0PhiN: return C(r.K0 * r.phi_n);
    }
    throw std::logic_error("unknown quantity");
}

template <class C>
struct RefTermValue {
    Rational coeff;
    Quantity quantity;
    C value;
};

template <class C>
std::vector<RefTermValue<C>> ref_terms(RefKind kind, const CurvatureReport<C>& report,
                                       LaplaceReading reading = LaplaceReading::LaplaceBeltrami) {
    int n = report.n;
    if (n < ref_min_dimension(kind))
        throw OutOfRange(ref_kind_name(kind) + " requires n >= " + std::to_string(ref_min_dimension(kind)));
    std::vector<RefTermValue<C>> out;
    for (const auto& t : ref_formula(kind).terms)
        out.push_back(RefTermValue<C>{t.coeff(n), t.quantity, quantity_value(t.quantity, report, reading)});
    return out;
}

template <class C>
C ref_eval(RefKind kind, const CurvatureReport<C>& report, LaplaceReading reading = LaplaceReading::LaplaceBeltrami) {
    C bracket(0);
    for (const auto& t : ref_terms(kind, report, reading)) bracket += C(t.value * t.coeff);
    return C(bracket * ref_prefactor(kind, report.n));
}

// For a constant-curvature report: the general a2 closed form agrees with
// the constant-curvature one (B2), and a3 with B3 when n >= 4. Returns the names of the failing pairs.
template <class C>
std::vector<std::string> space_form_consistency(const CurvatureReport<C>& report) {
    std::vector<std::string> bad;
    int n = report.n;
    if (n >= 3 && !(ref_eval(RefKind::A2, report) == ref_eval(RefKind::B2, report))) bad.push_back("a2 != b2");
    if (n >= 4 && !(ref_eval(RefKind::A3, report) == ref_eval(RefKind::B3, report))) bad.push_back("a3 != b3");
    return bad;
}

} // namespace dtn
