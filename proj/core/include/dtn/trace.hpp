#pragma once

#include "dtn/parametrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtn {

class InvalidPower : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivergentMoment : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonRealResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Residue weight of s_{-1}^q: (1/2 pi i) int_C s_{-1}^q e^{-tau} dtau is
// -e^{-w1}/(q-1)!; with the sign of the trace prefactor the contribution
// is +1/(q-1)! times the xi-moment.
Rational contour_weight(int q);

// (1/omega_{n-2}) int_{R^{n-1}} xi^m |xi|^p e^{-|xi|} dxi.
Rational moment(int n, int p, const std::vector<int>& m);

// Independent numerical value of the same integral (Gauss-Laguerre radial
// rule times a product rule over hyperspherical angles).
double moment_quadrature(int n, int p, const std::vector<int>& m, int radial_nodes = 24, int angular_nodes = 24);

// a_k(x0) = omega_{n-2} / (2 pi)^{n-1} * value.
template <class C>
struct CoefficientResult {
    int n = 0;
    int k = 0;
    C value;
    bool beyond_validity = false;  // k = n - 1
};

template <class C>
C heat_coefficient(const Symbol<C>& s_part) {
    C re{};
    C im{};
    int n = s_part.dim();
    for (const auto& t : s_part.terms()) {
        C v = t.coeff.value();
        if (dtn::is_zero(v)) continue;
        std::vector<int> m = xi_exponents(t.xi, n - 1);
        Rational w = contour_weight(t.q) * moment(n, t.p, m);
        if (sgn(w) == 0) continue;
        if (t.imag)
            im += C(v * w);
        else
            re += C(v * w);
    }
    if (!dtn::is_zero(im)) throw NonRealResult("heat coefficient has a nonzero imaginary part");
    return re;
}

template <class C>
std::vector<CoefficientResult<C>> engine_coefficients(const GaugeJets<C>& jets, int kmax) {
    if (kmax > jets.order) throw OrderTooLow("coefficient index exceeds the jet order");
    int n = jets.n;
    if (kmax > n - 1) throw std::domain_error("coefficient index beyond n - 1");
    Parametrix<C> p = build_parametrix(jets, kmax);
    std::vector<CoefficientResult<C>> out;
    for (int k = 0; k <= kmax; ++k) {
        CoefficientResult<C> r;
        r.n = n;
        r.k = k;
        r.value = heat_coefficient(p.part(-1 - k));
        r.beyond_validity = (k == n - 1);
        out.push_back(std::move(r));
    }
    return out;
}

template <class C>
C engine_coefficient(const GaugeJets<C>& jets, int k) {
    return engine_coefficients(jets, k).back().value;
}

// Full coefficient and the part carried by phi and V.
template <class C>
struct PhiVSplit {
    C full;
    C geometric;
    C phiV;
};

template <class C>
PhiVSplit<C> phi_v_split(const GaugeJets<C>& jets, int k) {
    if (k > 3) throw std::invalid_argument("phi/V split is provided for k <= 3");
    PhiVSplit<C> s;
    s.full = engine_coefficient(jets, k);
    s.geometric = engine_coefficient(without_phi_v(jets), k);
    s.phiV = C(s.full - s.geometric);
    return s;
}

} // namespace dtn
