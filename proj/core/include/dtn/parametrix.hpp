#pragma once

#include "dtn/factorization.hpp"

namespace dtn {

// Symbols s_{-1}, ..., s_{-1-K} of the parametrix of (Lambda - tau) on the
// boundary, with s_{-1} = (w1 - tau)^{-1}.
template <class C>
struct Parametrix {
    int n = 0;
    int K = 0;
    int order = 0;
    std::unique_ptr<SymbolContext<C>> ctx;  // boundary context
    std::unique_ptr<GradedFamily<C>> sigma;  // w_j restricted to x_n = 0
    std::unique_ptr<GradedFamily<C>> s;

    const Symbol<C>& part(int degree) const { return s->part(degree); }
};

// Full symbol of Lambda on the boundary: the w_j at x_n = 0.
template <class C>
std::unique_ptr<GradedFamily<C>> dtn_symbol(const Factorization<C>& f, const SymbolContext<C>* boundary_ctx) {
    auto g = std::make_unique<GradedFamily<C>>(boundary_ctx);
    for (const auto& [deg, sym] : f.w->parts()) g->set(deg, sym.restricted_to_boundary());
    return g;
}

template <class C>
Symbol<C> s_init(int n, int order) {
    return Symbol<C>::single(n, Jet<C>::constant(n, order, C(1)), 0, 0, 1);
}

// s_{-1-m} = -s_{-1} sum_{1-m <= j <= 1, -m <= k <= -1, |J| = j+k+m}
//            (-i)^{|J|}/J! d_xi^J sigma_j d_x'^J s_k,  m >= 1.
template <class C>
Symbol<C> s_next(GradedFamily<C>& sigma, GradedFamily<C>& s, int m) {
    Symbol<C> inner = product_expansion(sigma, s, m, 1 - m, 1, -m, -1);
    return -(s.part(-1) * inner);
}

template <class C>
Parametrix<C> build_parametrix(const GaugeJets<C>& jets, const Factorization<C>& f) {
    if (f.K < 0) throw std::invalid_argument("negative parametrix depth");
    Parametrix<C> p;
    p.n = jets.n;
    p.K = f.K;
    p.order = jets.order;
    p.ctx = std::make_unique<SymbolContext<C>>(make_symbol_context(jets, true));
    p.sigma = dtn_symbol(f, p.ctx.get());
    p.s = std::make_unique<GradedFamily<C>>(p.ctx.get());
    p.s->set(-1, s_init<C>(jets.n, jets.order));
    // s_{-1-m} is determined to jet order T - m
    for (int m = 1; m <= f.K; ++m) p.s->set(-1 - m, s_next(*p.sigma, *p.s, m).truncated(jets.order - m));
    return p;
}

template <class C>
Parametrix<C> build_parametrix(const GaugeJets<C>& jets, int K) {
    Factorization<C> f = factorize(jets, K);
    return build_parametrix(jets, f);
}

// The written-out forms of s_{-2}, s_{-3}, s_{-4}, assembled term by term
// from explicit derivatives (no multi-index enumeration).
template <class C>
Symbol<C> explicit_s(Parametrix<C>& p, int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("explicit parametrix forms are written out for 1 <= m <= 3");
    const auto& ctx = *p.ctx;
    auto& w = *p.sigma;
    auto& s = *p.s;
    int d = p.n - 1;
    auto dxi = [&](int deg, std::vector<int> J) { return w.dxi(deg, J); };
    auto dx = [&](const Symbol<C>& a, std::vector<int> J) {
        Symbol<C> r = a;
        for (int j : J) r = sym_dx(r, j, ctx);
        return r;
    };
    Symbol<C> sum(p.n);
    if (m >= 1) {
        // zeroth order products w_j s_k with j + k = -m
        for (int j = 0; j >= 1 - m; --j) sum += w.part(j) * s.part(-m - j);
        // -i sum_a dw_j/dxi_a ds_k/dx_a with j + k = 1 - m
        Symbol<C> first(p.n);
        for (int j = 1; j >= 1 - m; --j) {
            int k = 1 - m - j;
            if (k > -1) continue;
            for (int a = 1; a <= d; ++a) first += dxi(j, {a}) * dx(s.part(k), {a});
        }
        sum += first.times_i(3);
    }
    if (m >= 2) {
        Symbol<C> second(p.n);
        for (int j = 1; j >= 2 - m; --j) {
            int k = 2 - m - j;
            if (k > -1) continue;
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b) second += dxi(j, {std::min(a, b), std::max(a, b)}) * dx(s.part(k), {a, b});
        }
        sum -= second.scaled(make_rational(1, 2));
    }
    if (m >= 3) {
        Symbol<C> third(p.n);
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b)
                for (int c = 1; c <= d; ++c) {
                    std::vector<int> J{a, b, c};
                    std::sort(J.begin(), J.end());
                    third += dxi(1, J) * dx(s.part(-1), {a, b, c});
                }
        sum += third.scaled(make_rational(1, 6)).times_i(1);
    }
    return (-(s.part(-1) * sum)).truncated(p.order - m);
}

} // namespace dtn
