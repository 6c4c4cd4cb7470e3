#pragma once

#include "dtn/atom_poly.hpp"
#include "dtn/jet.hpp"
#include "dtn/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dtn {

class UnsupportedOrder : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidRadius : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Taylor data of g_{jk}, g^{jk}, phi and V at a boundary point in boundary
// normal coordinates. Indices are 1-based; x_n is the inward normal.
template <class C>
struct GaugeJets {
    int n = 0;
    int order = 0;
    std::vector<Jet<C>> g;     // n*n, row-major
    std::vector<Jet<C>> ginv;  // n*n, row-major
    Jet<C> phi;
    Jet<C> V;
    std::vector<Atom> atoms;

    const Jet<C>& metric(int j, int k) const { return g[idx(j, k)]; }
    const Jet<C>& inverse(int j, int k) const { return ginv[idx(j, k)]; }
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>((j - 1) * n + (k - 1)); }
};

// Inverse of a matrix of jets whose value at the origin is a constant
// invertible rational matrix. Exact through the common truncation order.
template <class C>
std::vector<Jet<C>> jet_invert_metric(const std::vector<Jet<C>>& g, int n) {
    if (g.size() != static_cast<std::size_t>(n * n)) throw DimensionMismatch();
    int order = g[0].order();
    for (const auto& e : g) order = std::min(order, e.order());
    int vars = g[0].dim();
    auto at = [n](int j, int k) { return static_cast<std::size_t>(j * n + k); };

    // Rational inverse of the leading matrix by Gauss-Jordan.
    std::vector<Rational> a(static_cast<std::size_t>(n * n)), inv(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            a[at(j, k)] = constant_value(g[at(j, k)].value());
            inv[at(j, k)] = (j == k) ? 1 : 0;
        }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (sgn(a[at(r, c)]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularLeadingCoefficient("metric is singular at the base point");
        for (int k = 0; k < n; ++k) {
            std::swap(a[at(c, k)], a[at(piv, k)]);
            std::swap(inv[at(c, k)], inv[at(piv, k)]);
        }
        Rational p = a[at(c, c)];
        for (int k = 0; k < n; ++k) {
            a[at(c, k)] /= p;
            inv[at(c, k)] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(a[at(r, c)]) == 0) continue;
            Rational f = a[at(r, c)];
            for (int k = 0; k < n; ++k) {
                a[at(r, k)] -= f * a[at(c, k)];
                inv[at(r, k)] -= f * inv[at(c, k)];
            }
        }
    }

    // g = G0 (I + E) with E = G0^{-1}(g - G0) vanishing at the origin, so
    // g^{-1} = (sum_{k<=order} (-E)^k) G0^{-1}.
    std::vector<Jet<C>> e(static_cast<std::size_t>(n * n), Jet<C>(vars, order));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Jet<C> acc(vars, order);
            for (int l = 0; l < n; ++l) {
                if (sgn(inv[at(j, l)]) == 0) continue;
                Jet<C> term = g[at(l, k)].truncated(order);
                term -= Jet<C>::constant(vars, order, g[at(l, k)].value());
                acc += term.scale(inv[at(j, l)]);
            }
            e[at(j, k)] = std::move(acc);
        }
    auto matmul = [&](const std::vector<Jet<C>>& x, const std::vector<Jet<C>>& y) {
        std::vector<Jet<C>> z(static_cast<std::size_t>(n * n), Jet<C>(vars, order));
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                if (x[at(j, l)].is_zero()) continue;
                for (int k = 0; k < n; ++k) {
                    if (y[at(l, k)].is_zero()) continue;
                    z[at(j, k)] += x[at(j, l)] * y[at(l, k)];
                }
            }
        return z;
    };
    std::vector<Jet<C>> sum(static_cast<std::size_t>(n * n), Jet<C>(vars, order));
    std::vector<Jet<C>> power(static_cast<std::size_t>(n * n), Jet<C>(vars, order));
    for (int j = 0; j < n; ++j) {
        sum[at(j, j)] = Jet<C>::constant(vars, order, C(1));
        power[at(j, j)] = sum[at(j, j)];
    }
    std::vector<Jet<C>> neg_e = e;
    for (auto& x : neg_e) x = -x;
    for (int k = 1; k <= order; ++k) {
        power = matmul(power, neg_e);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += power[i];
    }
    std::vector<Jet<C>> out(static_cast<std::size_t>(n * n), Jet<C>(vars, order));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Jet<C> acc(vars, order);
            for (int l = 0; l < n; ++l) {
                if (sgn(inv[at(l, k)]) == 0 || sum[at(j, l)].is_zero()) continue;
                Jet<C> t = sum[at(j, l)];
                acc += t.scale(inv[at(l, k)]);
            }
            out[at(j, k)] = std::move(acc);
        }
    return out;
}

enum class ScenarioKind { RandomGauge, EuclideanBall, SpaceFormBall, Flat, Explicit };

struct Scenario {
    ScenarioKind kind = ScenarioKind::Flat;
    std::uint64_t seed = 0;
    // Ball scenarios: K0 and the boundary principal curvature kappa
    // (EuclideanBall: K0 = 0, kappa = 1/r0). Either may be symbolic.
    AtomPoly k0;
    AtomPoly kappa;
    // Optional radial data phi(r), V(r) as polynomial coefficients in r,
    // evaluated on the boundary sphere r = r0 (ball scenarios only).
    std::vector<Rational> radial_phi;
    std::vector<Rational> radial_v;
    Rational radius = 1;
    std::string explicit_json;

    static Scenario random_gauge(std::uint64_t seed);
    static Scenario euclidean_ball(const Rational& r0);
    static Scenario space_form_ball(const AtomPoly& k0, const AtomPoly& kappa);
    // Symbolic K0 and kappa atoms.
    static Scenario symbolic_space_form();
    static Scenario flat();
    static Scenario explicit_jets(std::string json);

    std::string describe() const;
};

GaugeJets<AtomPoly> build_gauge_jets(const Scenario& scenario, int n, int order);

// Atom values a verification run uses for this scenario and seed.
Assignment verification_assignment(const GaugeJets<AtomPoly>& jets, std::uint64_t seed);

GaugeJets<Rational> substitute(const GaugeJets<AtomPoly>& jets, const Assignment& values);

// Replaces K0/kappa atoms etc. by polynomials (keeps the jets symbolic).
GaugeJets<AtomPoly> substitute_symbolic(const GaugeJets<AtomPoly>& jets, const std::map<Atom, AtomPoly>& values);

template <class C>
GaugeJets<C> without_phi_v(const GaugeJets<C>& jets) {
    GaugeJets<C> out = jets;
    out.phi = Jet<C>(jets.phi.dim(), jets.phi.order());
    out.V = Jet<C>(jets.V.dim(), jets.V.order());
    return out;
}

// Checks every gauge constraint by coefficient inspection; returns the
// list of violations (empty when the jets are in gauge).
std::vector<std::string> gauge_violations(const GaugeJets<AtomPoly>& jets);

std::string gauge_to_json(const GaugeJets<AtomPoly>& jets);
GaugeJets<AtomPoly> gauge_from_json(const std::string& json);

} // namespace dtn
