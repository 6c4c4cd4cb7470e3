#pragma once

#include "dtn/gauge.hpp"
#include "dtn/symbol.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dtn {

// Coefficients of d_n^2 + B d_n + C for the weighted operator in
// boundary normal coordinates: b(x), and c = c2 + c1 + c0 as symbols.
template <class C>
struct OperatorSymbols {
    Jet<C> b;
    Symbol<C> c2, c1, c0;

    const Symbol<C>* c_part(int degree) const {
        if (degree == 2) return &c2;
        if (degree == 1) return &c1;
        if (degree == 0) return &c0;
        return nullptr;
    }
};

template <class C>
OperatorSymbols<C> build_b_c(const GaugeJets<C>& jets) {
    int n = jets.n;
    int d = n - 1;
    int T = jets.order;
    OperatorSymbols<C> out;

    Jet<C> b(n, T - 1);
    for (int a = 1; a <= d; ++a)
        for (int c = 1; c <= d; ++c) b += jets.inverse(a, c) * jets.metric(a, c).derivative(n);
    b.scale(make_rational(1, 2));
    b -= jets.phi.derivative(n);
    out.b = b.truncated(T - 1);

    out.c2 = Symbol<C>(n);
    for (int a = 1; a <= d; ++a)
        for (int c = 1; c <= d; ++c) {
            Jet<C> x = -jets.inverse(a, c);
            out.c2 += Symbol<C>::single(n, std::move(x), xi_add(xi_unit(a), xi_unit(c)), 0, 0);
        }

    // log-volume gradient L_a = sum g^{cr} g_{cr,a}
    std::vector<Jet<C>> L;
    for (int a = 1; a <= d; ++a) {
        Jet<C> s(n, T - 1);
        for (int c = 1; c <= d; ++c)
            for (int r = 1; r <= d; ++r) s += jets.inverse(c, r) * jets.metric(c, r).derivative(a);
        L.push_back(std::move(s));
    }
    out.c1 = Symbol<C>(n);
    for (int beta = 1; beta <= d; ++beta) {
        Jet<C> e(n, T - 1);
        for (int a = 1; a <= d; ++a) {
            Jet<C> half = jets.inverse(a, beta) * L[static_cast<std::size_t>(a - 1)];
            half.scale(make_rational(1, 2));
            e += half;
            e += jets.inverse(a, beta).derivative(a);
            e -= jets.inverse(a, beta) * jets.phi.derivative(a);
        }
        out.c1 += Symbol<C>::single(n, e.truncated(T - 1), xi_unit(beta), 0, 0, true);
    }
    out.c0 = Symbol<C>::single(n, jets.V.truncated(T - 2), 0, 0, 0);
    return out;
}

// The symbols w_1, w_0, ..., w_{1-K} of the factor W in
// d_n^2 + B d_n + C = (d_n + B - W)(d_n + W).
template <class C>
struct Factorization {
    int n = 0;
    int K = 0;
    int order = 0;
    std::unique_ptr<SymbolContext<C>> ctx;
    OperatorSymbols<C> ops;
    std::unique_ptr<GradedFamily<C>> w;

    const Symbol<C>& part(int degree) const { return w->part(degree); }
};

template <class C>
Symbol<C> w_top(int n, int order) {
    return Symbol<C>::single(n, Jet<C>::constant(n, order, C(1)), 0, 1, 0);
}

// Degree -m part of the symbol equation with the two w1 w_{-1-m} terms
// left out:
//   sum' (-i)^{|J|}/J! d_xi^J w_j d_x'^J w_k - b w_{-m} - d_n w_{-m} + c_{-m}.
template <class C>
Symbol<C> equation_remainder(GradedFamily<C>& w, const OperatorSymbols<C>& ops, int m) {
    const auto& ctx = w.context();
    int n = ctx.n;
    Symbol<C> r = product_expansion(w, w, m, -m, 1, -m, 1);
    const Symbol<C>& wm = w.part(-m);
    Symbol<C> bs = Symbol<C>::single(n, ops.b, 0, 0, 0);
    r -= bs * wm;
    r -= sym_dx(wm, n, ctx);
    if (const Symbol<C>* c = ops.c_part(-m)) r += *c;
    return r;
}

// w_{-1-m} = -(1/2) w1^{-1} [equation remainder at degree -m], m >= -1.
template <class C>
Symbol<C> w_next(GradedFamily<C>& w, const OperatorSymbols<C>& ops, int m) {
    return equation_remainder(w, ops, m).shift_p(-1).scaled(make_rational(-1, 2));
}

template <class C>
Factorization<C> factorize(const GaugeJets<C>& jets, int K) {
    if (K < 0) throw std::invalid_argument("negative factorization depth");
    if (K > jets.order) throw OrderTooLow("factorization depth exceeds the jet order");
    Factorization<C> f;
    f.n = jets.n;
    f.K = K;
    f.order = jets.order;
    f.ctx = std::make_unique<SymbolContext<C>>(make_symbol_context(jets, false));
    f.ops = build_b_c(jets);
    f.w = std::make_unique<GradedFamily<C>>(f.ctx.get());
    f.w->set(1, w_top<C>(jets.n, jets.order));
    // w_{1-j} is determined to jet order T - j
    for (int m = -1; m <= K - 2; ++m) f.w->set(-1 - m, w_next(*f.w, f.ops, m).truncated(jets.order - 2 - m));
    return f;
}

// Decides whether a symbol with q = 0 vanishes identically as a function
// of (x, xi'): multiply by a power of w1 so every exponent is >= 0,
// replace w1^{2k} by Q^k with Q = sum g^{ab} xi_a xi_b, and require both
// the even part and the coefficient of w1 to be zero.
template <class C>
bool symbol_vanishes(const Symbol<C>& s, const SymbolContext<C>& ctx) {
    if (s.is_zero()) return true;
    int pmin = 0;
    for (const auto& t : s.terms()) {
        if (t.q != 0) throw std::invalid_argument("symbol_vanishes expects a resolvent-free symbol");
        pmin = std::min(pmin, t.p);
    }
    int n = ctx.n;
    int d = n - 1;
    std::vector<Symbol<C>> qpow;  // Q^k as a pure xi-polynomial, computed lazily
    auto Q = [&](int k) -> const Symbol<C>& {
        while (static_cast<int>(qpow.size()) <= k) {
            if (qpow.empty()) {
                int ord = s.min_order();
                qpow.push_back(Symbol<C>::single(n, Jet<C>::constant(n, std::max(ord, 0), C(1)), 0, 0, 0));
                continue;
            }
            Symbol<C> q1(n);
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b)
                    q1 += Symbol<C>::single(n, ctx.ginv[static_cast<std::size_t>((a - 1) * d + (b - 1))],
                                            xi_add(xi_unit(a), xi_unit(b)), 0, 0);
            qpow.push_back(qpow.back() * q1);
        }
        return qpow[static_cast<std::size_t>(k)];
    };
    std::vector<SymbolTerm<C>> even, odd;
    for (const auto& t : s.terms()) {
        int p = t.p - pmin;
        Symbol<C> mono = Symbol<C>::single(n, t.coeff, t.xi, 0, 0, t.imag);
        Symbol<C> conv = mono * Q(p / 2);
        auto& dst = (p % 2 == 0) ? even : odd;
        for (const auto& u : conv.terms()) dst.push_back(u);
    }
    return Symbol<C>::from_terms(n, std::move(even)).is_zero() && Symbol<C>::from_terms(n, std::move(odd)).is_zero();
}

struct ResidualReport {
    std::vector<int> degrees_checked;
    std::vector<int> failing_degrees;
    bool ok() const { return failing_degrees.empty(); }
};

// Substitutes the computed w back into the full symbol equation and checks
// degrees 2 .. 2-K (each degree involves parts down to the deepest one).
template <class C>
ResidualReport factorization_residual(Factorization<C>& f) {
    ResidualReport rep;
    auto& w = *f.w;
    int n = f.n;
    for (int m = -2; m <= f.K - 2; ++m) {
        Symbol<C> r(n);
        if (m == -2) {
            r = w.part(1) * w.part(1) + f.ops.c2;
        } else {
            r = equation_remainder(w, f.ops, m);
            r += (w.part(1) * w.part(-1 - m)).scaled(Rational(2));
        }
        // the degree -m equation is known to jet order T - 2 - m
        r = r.truncated(f.order - 2 - m);
        rep.degrees_checked.push_back(-m);
        if (!symbol_vanishes(r, *f.ctx)) rep.failing_degrees.push_back(-m);
    }
    return rep;
}

} // namespace dtn
