#pragma once

#include "dtn/gauge.hpp"
#include "dtn/jet.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dtn {

// Curvature of a metric given by jets g_{jk}, g^{jk} in the first `dim`
// coordinates of the jet variables. Christoffel jets are cached.
template <class C>
class MetricGeometry {
public:
    MetricGeometry(const std::vector<Jet<C>>& g, const std::vector<Jet<C>>& ginv, int dim, int stride)
        : dim_(dim), stride_(stride), g_(g), ginv_(ginv) {}

    const Jet<C>& metric(int j, int k) const { return g_[at(j, k)]; }
    const Jet<C>& inverse(int j, int k) const { return ginv_[at(j, k)]; }
    int dim() const { return dim_; }

    // Gamma_{m,jk} = (g_{jm,k} + g_{km,j} - g_{jk,m}) / 2
    const Jet<C>& christoffel_lower(int m, int j, int k) {
        if (j > k) std::swap(j, k);
        auto key = std::tuple(m, j, k);
        auto it = lower_.find(key);
        if (it != lower_.end()) return it->second;
        Jet<C> s = metric(j, m).derivative(k);
        s += metric(k, m).derivative(j);
        s -= metric(j, k).derivative(m);
        s.scale(Rational(1, 2));
        return lower_.emplace(key, std::move(s)).first->second;
    }

    // Gamma^l_{jk} = sum_m g^{lm} Gamma_{m,jk}
    const Jet<C>& christoffel(int l, int j, int k) {
        if (j > k) std::swap(j, k);
        auto key = std::tuple(l, j, k);
        auto it = upper_.find(key);
        if (it != upper_.end()) return it->second;
        const Jet<C>& first = christoffel_lower(1, j, k);
        Jet<C> s(first.dim(), first.order());
        for (int m = 1; m <= dim_; ++m) {
            const Jet<C>& gi = inverse(l, m);
            if (gi.is_zero()) continue;
            const Jet<C>& cl = christoffel_lower(m, j, k);
            if (cl.is_zero()) continue;
            s += gi * cl;
        }
        return upper_.emplace(key, std::move(s)).first->second;
    }

    // R_{jklm} from the coordinate formula
    // (g_{jl,km} + g_{km,jl} - g_{jm,kl} - g_{kl,jm})/2
    //   + sum_{p,h} g_{ph} (Gamma^p_{jl} Gamma^h_{km} - Gamma^p_{jm} Gamma^h_{kl}),
    // truncated at `order`.
    Jet<C> riemann_jet(int j, int k, int l, int m, int order) {
        Jet<C> s = metric(j, l).derivative(k).derivative(m);
        s += metric(k, m).derivative(j).derivative(l);
        s -= metric(j, m).derivative(k).derivative(l);
        s -= metric(k, l).derivative(j).derivative(m);
        s = s.truncated(order);
        s.scale(Rational(1, 2));
        for (int p = 1; p <= dim_; ++p)
            for (int h = 1; h <= dim_; ++h) {
                const Jet<C>& gph = metric(p, h);
                if (gph.is_zero()) continue;
                Jet<C> t = Jet<C>::multiply(christoffel(p, j, l), christoffel(h, k, m), order);
                t -= Jet<C>::multiply(christoffel(p, j, m), christoffel(h, k, l), order);
                if (t.is_zero()) continue;
                s += Jet<C>::multiply(gph, t, order);
            }
        return s;
    }

    // R_{jklm} = sum_p g_{mp} R^p_{jkl} with
    // R^p_{jkl} = d_j Gamma^p_{kl} - d_k Gamma^p_{jl}
    //           + sum_q (Gamma^q_{kl} Gamma^p_{jq} - Gamma^q_{jl} Gamma^p_{kq}).
    Jet<C> riemann_jet_tensor(int j, int k, int l, int m, int order) {
        Jet<C> s;
        bool init = false;
        for (int p = 1; p <= dim_; ++p) {
            const Jet<C>& gmp = metric(m, p);
            if (gmp.is_zero()) continue;
            Jet<C> r = christoffel(p, k, l).derivative(j).truncated(order);
            r -= christoffel(p, j, l).derivative(k).truncated(order);
            for (int q = 1; q <= dim_; ++q) {
                r += Jet<C>::multiply(christoffel(q, k, l), christoffel(p, j, q), order);
                r -= Jet<C>::multiply(christoffel(q, j, l), christoffel(p, k, q), order);
            }
            Jet<C> t = Jet<C>::multiply(gmp, r, order);
            if (!init) {
                s = t;
                init = true;
            } else {
                s += t;
            }
        }
        return s;
    }

    // Ric_{jk} = sum_{l,m} g^{lm} R_{jlmk}
    Jet<C> ricci_jet(int j, int k, int order) {
        Jet<C> s;
        bool init = false;
        for (int l = 1; l <= dim_; ++l)
            for (int m = 1; m <= dim_; ++m) {
                const Jet<C>& gi = inverse(l, m);
                if (gi.is_zero()) continue;
                Jet<C> t = Jet<C>::multiply(gi, riemann_jet(j, l, m, k, order), order);
                if (!init) {
                    s = t;
                    init = true;
                } else {
                    s += t;
                }
            }
        return s;
    }

private:
    std::size_t at(int j, int k) const { return static_cast<std::size_t>((j - 1) * stride_ + (k - 1)); }

    int dim_;
    int stride_;
    const std::vector<Jet<C>>& g_;
    const std::vector<Jet<C>>& ginv_;
    std::map<std::tuple<int, int, int>, Jet<C>> lower_;
    std::map<std::tuple<int, int, int>, Jet<C>> upper_;
};

// Every quantity of the coefficient formulas, at the base point.
template <class C>
struct CurvatureReport {
    int n = 0;
    int order = 0;
    std::vector<C> kappa;  // kappa_1..kappa_{n-1}
    C H;
    std::vector<C> h;                // (n-1)^2, h_{ab}(x0)
    std::vector<C> tildeRiemann;     // n^4
    std::vector<C> tildeRicci;       // n^2
    C tildeScalar;
    std::vector<C> boundaryRiemann;  // (n-1)^4, intrinsic
    std::vector<C> boundaryRicci;    // (n-1)^2
    C boundaryScalar;
    C K0;  // tildeScalar / (n(n-1))
    std::optional<C> nablaRicNN;
    C laplacePhi;
    C laplacePhiCoordinate;  // sum_j phi_jj, no Christoffel term
    C gradPhiSq;
    C phi_n, phi_nn;
    std::optional<C> phi_nnn;
    std::vector<C> phi_alpha;       // n-1
    std::vector<C> phi_ab;          // (n-1)^2
    std::vector<C> phi_naa;         // n-1, empty below order 3
    C V0;
    std::optional<C> V_n;
    std::optional<C> normalDerivGroup;
    std::optional<C> normalDerivGroupCoordinate;

    int d() const { return n - 1; }
    const C& tR(int j, int k, int l, int m) const {
        return tildeRiemann[static_cast<std::size_t>((((j - 1) * n + (k - 1)) * n + (l - 1)) * n + (m - 1))];
    }
    const C& tRic(int j, int k) const { return tildeRicci[static_cast<std::size_t>((j - 1) * n + (k - 1))]; }
    const C& R(int a, int b, int c, int e) const {
        int q = d();
        return boundaryRiemann[static_cast<std::size_t>((((a - 1) * q + (b - 1)) * q + (c - 1)) * q + (e - 1))];
    }
    const C& Ric(int a, int b) const { return boundaryRicci[static_cast<std::size_t>((a - 1) * d() + (b - 1))]; }
    const C& hh(int a, int b) const { return h[static_cast<std::size_t>((a - 1) * d() + (b - 1))]; }

    C sum_kappa_pow(int p) const {
        C s(0);
        for (const auto& k : kappa) {
            C t(1);
            for (int i = 0; i < p; ++i) t = C(t * k);
            s += t;
        }
        return s;
    }
    // sum_a kappa_a tildeRic_{aa}
    C sum_kappa_tilde_ricci() const {
        C s(0);
        for (int a = 1; a <= d(); ++a) s += C(kappa[static_cast<std::size_t>(a - 1)] * tRic(a, a));
        return s;
    }
    // sum_a kappa_a Ric_{aa}
    C sum_kappa_ricci() const {
        C s(0);
        for (int a = 1; a <= d(); ++a) s += C(kappa[static_cast<std::size_t>(a - 1)] * Ric(a, a));
        return s;
    }
    // sum_a phi_a^2 kappa_a
    C sum_phi_alpha_sq_kappa() const {
        C s(0);
        for (int a = 1; a <= d(); ++a) {
            const C& p = phi_alpha[static_cast<std::size_t>(a - 1)];
            s += C(C(p * p) * kappa[static_cast<std::size_t>(a - 1)]);
        }
        return s;
    }
    C sum_phi_naa() const {
        C s(0);
        for (const auto& x : phi_naa) s += x;
        return s;
    }
    C tRic_nn() const { return tRic(n, n); }
};

template <class C>
Jet<C> christoffel(const GaugeJets<C>& jets, int l, int j, int k) {
    MetricGeometry<C> geo(jets.g, jets.ginv, jets.n, jets.n);
    return geo.christoffel(l, j, k);
}

template <class C>
C riemann(const GaugeJets<C>& jets, int j, int k, int l, int m) {
    if (jets.order < 2) throw OrderTooLow("Riemann tensor needs second-order jets");
    MetricGeometry<C> geo(jets.g, jets.ginv, jets.n, jets.n);
    return geo.riemann_jet(j, k, l, m, 0).value();
}

// d/dx_n tildeRic_nn - 2 sum_j Gamma^j_nn tildeRic_jn at x0.
template <class C>
C nabla_ric_nn(const GaugeJets<C>& jets) {
    if (jets.order < 3) throw OrderTooLow("normal derivative of Ricci needs third-order jets");
    int n = jets.n;
    MetricGeometry<C> geo(jets.g, jets.ginv, n, n);
    Jet<C> ric_nn = geo.ricci_jet(n, n, 1);
    C s = ric_nn.derivative(n).value();
    for (int j = 1; j <= n; ++j) {
        C gam = geo.christoffel(j, n, n).value();
        if (is_zero(gam)) continue;
        s -= C(Rational(2) * C(gam * geo.ricci_jet(j, n, 0).value()));
    }
    return s;
}

template <class C>
CurvatureReport<C> curvature_report(const GaugeJets<C>& jets) {
    CurvatureReport<C> r;
    int n = jets.n;
    int d = n - 1;
    int T = jets.order;
    r.n = n;
    r.order = T;
    if (T < 1) throw OrderTooLow("curvature report needs first-order jets");
    MetricGeometry<C> amb(jets.g, jets.ginv, n, n);

    r.h.assign(static_cast<std::size_t>(d * d), C(0));
    r.kappa.assign(static_cast<std::size_t>(d), C(0));
    r.H = C(0);
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            C v = jets.metric(a, b).coefficient(mono_unit(n));
            v = C(v * Rational(-1, 2));
            r.h[static_cast<std::size_t>((a - 1) * d + (b - 1))] = v;
            if (a == b) {
                r.kappa[static_cast<std::size_t>(a - 1)] = v;
                r.H += v;
            }
        }

    r.tildeRiemann.assign(static_cast<std::size_t>(n * n * n * n), C(0));
    r.tildeRicci.assign(static_cast<std::size_t>(n * n), C(0));
    r.boundaryRiemann.assign(static_cast<std::size_t>(d * d * d * d), C(0));
    r.boundaryRicci.assign(static_cast<std::size_t>(d * d), C(0));
    r.tildeScalar = C(0);
    r.boundaryScalar = C(0);
    if (T >= 2) {
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m) {
                        if (std::pair(l, m) < std::pair(j, k)) continue;
                        C v = amb.riemann_jet(j, k, l, m, 0).value();
                        auto put = [&](int a, int b, int c, int e, const C& x) {
                            r.tildeRiemann[static_cast<std::size_t>((((a - 1) * n + (b - 1)) * n + (c - 1)) * n + (e - 1))] = x;
                        };
                        C nv = C(-v);
                        put(j, k, l, m, v);
                        put(k, j, l, m, nv);
                        put(j, k, m, l, nv);
                        put(k, j, m, l, v);
                        put(l, m, j, k, v);
                        put(m, l, j, k, nv);
                        put(l, m, k, j, nv);
                        put(m, l, k, j, v);
                    }
        // At x0 g^{jk} = delta.
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                C s(0);
                for (int l = 1; l <= n; ++l)
                    for (int m = 1; m <= n; ++m) {
                        C gi = jets.inverse(l, m).value();
                        if (is_zero(gi)) continue;
                        s += C(gi * r.tR(j, l, m, k));
                    }
                r.tildeRicci[static_cast<std::size_t>((j - 1) * n + (k - 1))] = s;
            }
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                C gi = jets.inverse(j, k).value();
                if (!is_zero(gi)) r.tildeScalar += C(gi * r.tRic(j, k));
            }

        // Intrinsic boundary curvature from g_{ab}(x', 0).
        if (d >= 2) {
            std::vector<Jet<C>> bg, bgi;
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b) {
                    bg.push_back(restrict_to_boundary(jets.metric(a, b)));
                    bgi.push_back(restrict_to_boundary(jets.inverse(a, b)));
                }
            MetricGeometry<C> bd(bg, bgi, d, d);
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b)
                    for (int c = 1; c <= d; ++c)
                        for (int e = 1; e <= d; ++e)
                            r.boundaryRiemann[static_cast<std::size_t>((((a - 1) * d + (b - 1)) * d + (c - 1)) * d + (e - 1))] =
                                (a == b || c == e) ? C(0) : bd.riemann_jet(a, b, c, e, 0).value();
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b) {
                    C s(0);
                    for (int c = 1; c <= d; ++c)
                        for (int e = 1; e <= d; ++e) {
                            C gi = bgi[static_cast<std::size_t>((c - 1) * d + (e - 1))].value();
                            if (!is_zero(gi)) s += C(gi * r.R(a, c, e, b));
                        }
                    r.boundaryRicci[static_cast<std::size_t>((a - 1) * d + (b - 1))] = s;
                }
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= d; ++b) {
                    C gi = bgi[static_cast<std::size_t>((a - 1) * d + (b - 1))].value();
                    if (!is_zero(gi)) r.boundaryScalar += C(gi * r.Ric(a, b));
                }
        }
    }
    r.K0 = C(r.tildeScalar * make_rational(1, n * (n - 1)));
    if (T >= 3) r.nablaRicNN = nabla_ric_nn(jets);

    // phi and V relays.
    auto phi_d = [&](std::initializer_list<int> vars) {
        Jet<C> x = jets.phi;
        for (int v : vars) x = x.derivative(v);
        return x;
    };
    r.phi_n = phi_d({n}).value();
    r.phi_nn = T >= 2 ? phi_d({n, n}).value() : C(0);
    if (T >= 3) r.phi_nnn = phi_d({n, n, n}).value();
    r.phi_alpha.assign(static_cast<std::size_t>(d), C(0));
    r.phi_ab.assign(static_cast<std::size_t>(d * d), C(0));
    for (int a = 1; a <= d; ++a) {
        r.phi_alpha[static_cast<std::size_t>(a - 1)] = phi_d({a}).value();
        if (T >= 2)
            for (int b = 1; b <= d; ++b) r.phi_ab[static_cast<std::size_t>((a - 1) * d + (b - 1))] = phi_d({a, b}).value();
        if (T >= 3) r.phi_naa.push_back(phi_d({n, a, a}).value());
    }
    r.V0 = jets.V.order() >= 0 ? jets.V.value() : C(0);
    if (T >= 3) r.V_n = jets.V.derivative(n).value();

    // grad phi and Laplacian as jets, for the group and its normal derivative.
    std::vector<Jet<C>> dphi;
    for (int j = 1; j <= n; ++j) dphi.push_back(jets.phi.derivative(j));
    Jet<C> grad(n, T - 1);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const Jet<C>& gi = jets.inverse(j, k);
            if (gi.is_zero() || dphi[j - 1].is_zero() || dphi[k - 1].is_zero()) continue;
            grad += gi * dphi[static_cast<std::size_t>(j - 1)] * dphi[static_cast<std::size_t>(k - 1)];
        }
    r.gradPhiSq = grad.value();
    if (T >= 2) {
        Jet<C> lap(n, T - 2);
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const Jet<C>& gi = jets.inverse(j, k);
                if (gi.is_zero()) continue;
                Jet<C> inner = dphi[static_cast<std::size_t>(j - 1)].derivative(k);
                for (int l = 1; l <= n; ++l) {
                    const Jet<C>& gam = amb.christoffel(l, j, k);
                    if (gam.is_zero() || dphi[static_cast<std::size_t>(l - 1)].is_zero()) continue;
                    inner -= gam * dphi[static_cast<std::size_t>(l - 1)];
                }
                lap += gi * inner;
            }
        Jet<C> coord(n, T - 2);
        for (int j = 1; j <= n; ++j) coord += dphi[static_cast<std::size_t>(j - 1)].derivative(j);
        r.laplacePhi = lap.value();
        r.laplacePhiCoordinate = coord.value();
        if (T >= 3) {
            Jet<C> rest = grad;
            rest.scale(Rational(-1, 2));
            Jet<C> v2 = jets.V;
            rest += v2.scale(Rational(2));
            Jet<C> group = lap;
            group += rest;
            r.normalDerivGroup = group.derivative(n).value();
            coord += rest;
            r.normalDerivGroupCoordinate = coord.derivative(n).value();
        }
    } else {
        r.laplacePhi = C(0);
        r.laplacePhiCoordinate = C(0);
    }
    return r;
}

// Normal second derivatives of the metric and Gauss-type identities at x0.
// Each returns a list of the violated relations (empty on success).
template <class C>
std::vector<std::string> normal_second_derivative_violations(const GaugeJets<C>& jets, const CurvatureReport<C>& r) {
    std::vector<std::string> bad;
    int n = jets.n;
    C sg(0), sgi(0);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(n - 1)] = 2;
    for (int a = 1; a < n; ++a) {
        sg += jets.metric(a, a).derivative_at_origin(e);
        sgi += jets.inverse(a, a).derivative_at_origin(e);
    }
    C k2 = r.sum_kappa_pow(2);
    C H2 = C(r.H * r.H);
    C rhs1 = C(Rational(3) * k2) - H2 - r.tildeScalar + r.boundaryScalar;
    C rhs2 = C(Rational(5) * k2) + H2 + r.tildeScalar - r.boundaryScalar;
    if (!(sg == rhs1)) bad.push_back("sum g_{aa,nn} = 3 sum kappa^2 - H^2 - tildeR + R");
    if (!(sgi == rhs2)) bad.push_back("sum g^{aa,nn} = 5 sum kappa^2 + H^2 + tildeR - R");
    if (!(C(sg + sgi) == C(Rational(8) * k2))) bad.push_back("sum (g_{aa,nn} + g^{aa,nn}) = 8 sum kappa^2");
    return bad;
}

template <class C>
bool normal_second_derivative_check(const GaugeJets<C>& jets) {
    return normal_second_derivative_violations(jets, curvature_report(jets)).empty();
}

template <class C>
std::vector<std::string> gauss_violations(const CurvatureReport<C>& r) {
    std::vector<std::string> bad;
    int d = r.d();
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b)
            for (int c = 1; c <= d; ++c)
                for (int e = 1; e <= d; ++e) {
                    C rhs = r.tR(a, b, c, e) + C(r.hh(a, e) * r.hh(b, c)) - C(r.hh(a, c) * r.hh(b, e));
                    if (!(rhs == r.R(a, b, c, e)))
                        bad.push_back("Gauss equation at (" + std::to_string(a) + std::to_string(b) +
                                      std::to_string(c) + std::to_string(e) + ")");
                }
    int n = r.n;
    for (int a = 1; a <= d; ++a) {
        const C& ka = r.kappa[static_cast<std::size_t>(a - 1)];
        C rhs = r.tRic(a, a) - r.tR(n, a, a, n) + C(r.H * ka) - C(ka * ka);
        if (!(rhs == r.Ric(a, a))) bad.push_back("contracted Gauss equation at a=" + std::to_string(a));
    }
    C rhs = r.tildeScalar - C(Rational(2) * r.tRic_nn()) + C(r.H * r.H) - r.sum_kappa_pow(2);
    if (!(rhs == r.boundaryScalar)) bad.push_back("scalar Gauss equation");
    return bad;
}

template <class C>
std::vector<std::string> riemann_symmetry_violations(const CurvatureReport<C>& r) {
    std::vector<std::string> bad;
    auto check = [&](int dim, auto get, const char* what) {
        for (int j = 1; j <= dim; ++j)
            for (int k = 1; k <= dim; ++k)
                for (int l = 1; l <= dim; ++l)
                    for (int m = 1; m <= dim; ++m) {
                        const C& v = get(j, k, l, m);
                        bool ok = (v == get(l, m, j, k)) && (v == C(-get(k, j, l, m))) && (v == C(-get(j, k, m, l)));
                        C bianchi = v + get(k, l, j, m) + get(l, j, k, m);
                        ok = ok && is_zero(bianchi);
                        if (!ok) {
                            bad.push_back(std::string(what) + " symmetry at (" + std::to_string(j) + std::to_string(k) +
                                          std::to_string(l) + std::to_string(m) + ")");
                            return;
                        }
                    }
    };
    check(r.n, [&](int a, int b, int c, int e) -> const C& { return r.tR(a, b, c, e); }, "ambient");
    if (r.d() >= 2) check(r.d(), [&](int a, int b, int c, int e) -> const C& { return r.R(a, b, c, e); }, "boundary");
    return bad;
}

// The coordinate formula and sum_p g_{mp} R^p_{jkl} agree at x0.
template <class C>
std::vector<std::string> riemann_route_violations(const GaugeJets<C>& jets) {
    std::vector<std::string> bad;
    int n = jets.n;
    MetricGeometry<C> geo(jets.g, jets.ginv, n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m)
                    if (!(geo.riemann_jet(j, k, l, m, 0).value() == geo.riemann_jet_tensor(j, k, l, m, 0).value()))
                        bad.push_back("Riemann routes differ at (" + std::to_string(j) + std::to_string(k) +
                                      std::to_string(l) + std::to_string(m) + ")");
    return bad;
}

// Constant-curvature relations: ambient tensor of space-form shape,
// tildeR = n(n-1)K0, nabla_n tildeRic_nn = 0,
// sum kappa^2 = (n-1)(n-2)K0 + H^2 - R,
// sum kappa R_aa = H^3 + n(n-2) H K0 - H R - sum kappa^3.
template <class C>
std::vector<std::string> space_form_violations(const CurvatureReport<C>& r, const C& k0) {
    std::vector<std::string> bad;
    int n = r.n;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    int v = (j == m && k == l ? 1 : 0) - (j == l && k == m ? 1 : 0);
                    if (!(r.tR(j, k, l, m) == C(k0 * Rational(v)))) {
                        bad.push_back("ambient curvature is not K0(g_jm g_kl - g_jl g_km)");
                        j = k = l = m = n + 1;
                    }
                }
    Rational nn(n);
    if (!(r.tildeScalar == C(k0 * Rational(n * (n - 1))))) bad.push_back("tildeR = n(n-1)K0");
    if (r.nablaRicNN && !is_zero(*r.nablaRicNN)) bad.push_back("nabla_n tildeRic_nn = 0");
    C H2 = C(r.H * r.H);
    if (!(r.sum_kappa_pow(2) == C(k0 * Rational((n - 1) * (n - 2))) + H2 - r.boundaryScalar))
        bad.push_back("sum kappa^2 = (n-1)(n-2)K0 + H^2 - R");
    C rhs = C(H2 * r.H) + C(C(r.H * k0) * Rational(n * (n - 2))) - C(r.H * r.boundaryScalar) - r.sum_kappa_pow(3);
    if (!(r.sum_kappa_ricci() == rhs)) bad.push_back("sum kappa R_aa = H^3 + n(n-2)HK0 - HR - sum kappa^3");
    return bad;
}

std::string curvature_report_json(const CurvatureReport<AtomPoly>& r);

} // namespace dtn
