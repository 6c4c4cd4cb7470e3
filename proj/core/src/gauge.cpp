#include "dtn/gauge.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace dtn {

namespace {

using PJet = Jet<AtomPoly>;

MonoKey key_of(std::initializer_list<int> vars) {
    MonoKey k = 0;
    for (int v : vars) k += mono_unit(v);
    return k;
}

void check_dims(int n, int order) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    if (n > 12) throw std::invalid_argument("dimension above 12 is not supported");
    if (order < 0) throw std::invalid_argument("negative jet order");
    if (order > 3) throw UnsupportedOrder("jet order above 3 is not supported");
}

GaugeJets<AtomPoly> empty_jets(int n, int order) {
    GaugeJets<AtomPoly> j;
    j.n = n;
    j.order = order;
    j.g.assign(static_cast<std::size_t>(n * n), PJet(n, order));
    for (int a = 1; a <= n; ++a) j.g[j.idx(a, a)] = PJet::constant(n, order, AtomPoly(1));
    j.phi = PJet(n, order);
    j.V = PJet(n, std::max(order - 2, 0));
    return j;
}

void finish(GaugeJets<AtomPoly>& j) {
    j.ginv = jet_invert_metric(j.g, j.n);
    std::set<Atom> atoms;
    auto collect = [&](const PJet& x) {
        for (const auto& t : x.terms())
            for (Atom a : t.second.atoms()) atoms.insert(a);
    };
    for (const auto& x : j.g) collect(x);
    collect(j.phi);
    collect(j.V);
    j.atoms.assign(atoms.begin(), atoms.end());
}

// Taylor coefficients of f(r0 - t) in t for f(r) = sum c_i r^i.
std::vector<Rational> radial_shift(const std::vector<Rational>& c, const Rational& r0, int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order + 1), Rational(0));
    for (int k = 0; k <= order; ++k) {
        // f^{(k)}(r0)/k! * (-1)^k
        Rational s(0);
        for (std::size_t i = static_cast<std::size_t>(k); i < c.size(); ++i) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
            Rational pw(1);
            for (std::size_t e = static_cast<std::size_t>(k); e < i; ++e) pw *= r0;
            s += c[i] * Rational(binom) * pw;
        }
        out[static_cast<std::size_t>(k)] = (k % 2 == 0) ? s : Rational(-s);
    }
    return out;
}

GaugeJets<AtomPoly> random_gauge_jets(int n, int order) {
    auto j = empty_jets(n, order);
    int d = n - 1;
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            PJet& x = j.g[j.idx(a, b)];
            if (order >= 1 && a == b) x.add_term(mono_unit(n), AtomPoly(Atom::kappa(a)) * Rational(-2));
            if (order >= 2) {
                x.add_term(key_of({n, n}), AtomPoly(Atom::second_normal(a, b)) * make_rational(1, 2));
                // (1/3) sum_{c,r} R_{a c b r} x_c x_r
                for (int c = 1; c <= d; ++c)
                    for (int r = 1; r <= d; ++r) {
                        AtomPoly coeff = riemann_component(a, c, b, r) * make_rational(1, 3);
                        x.add_term(key_of({c, r}), coeff);
                    }
            }
            if (order >= 3) x.add_term(key_of({n, n, n}), AtomPoly(Atom::third_normal(a, b)) * make_rational(1, 6));
        }
    // phi: free derivatives of orders 1..T, phi(x0) = 0.
    std::vector<int> idx;
    auto add_phi = [&](auto&& self, int start, int depth) -> void {
        if (!idx.empty()) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (int v : idx) ++e[static_cast<std::size_t>(v - 1)];
            MonoKey k = mono_key(e);
            j.phi.add_term(k, AtomPoly(Atom::phi(idx)) * ratio(1, mono_factorial(k, n)));
        }
        if (depth == order) return;
        for (int v = start; v <= n; ++v) {
            idx.push_back(v);
            self(self, v, depth + 1);
            idx.pop_back();
        }
    };
    add_phi(add_phi, 1, 0);
    if (order >= 2) {
        j.V.add_term(0, AtomPoly(Atom::potential({})));
        if (order >= 3)
            for (int v = 1; v <= n; ++v) j.V.add_term(mono_unit(v), AtomPoly(Atom::potential({v})));
    }
    finish(j);
    return j;
}

GaugeJets<AtomPoly> ball_jets(int n, int order, const AtomPoly& k0, const AtomPoly& kappa,
                              const Scenario& sc) {
    auto j = empty_jets(n, order);
    int d = n - 1;
    // Warp factor of the geodesic sphere, w(t) = sn(r0 - t)/sn(r0).
    PJet w = PJet::constant(n, order, AtomPoly(1));
    w.add_term(mono_unit(n), -kappa);
    w.add_term(key_of({n, n}), k0 * make_rational(-1, 2));
    w.add_term(key_of({n, n, n}), k0 * kappa * make_rational(1, 6));
    PJet w2 = w * w;
    // Round metric of curvature c = K0 + kappa^2 in normal coordinates.
    AtomPoly c = k0 + kappa * kappa;
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            PJet h(n, order);
            if (a == b) {
                h.add_term(0, AtomPoly(1));
                for (int e = 1; e <= d; ++e) h.add_term(key_of({e, e}), c * make_rational(-1, 3));
            }
            h.add_term(key_of({a, b}), c * make_rational(1, 3));
            j.g[j.idx(a, b)] = w2 * h;
        }
    if (!sc.radial_phi.empty() || !sc.radial_v.empty()) {
        if (!(k0.is_zero() && kappa.is_constant()))
            throw std::invalid_argument("radial data is supported on Euclidean balls only");
        auto ph = radial_shift(sc.radial_phi, sc.radius, order);
        for (int k = 1; k <= order; ++k) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(n - 1)] = k;
            j.phi.add_term(mono_key(e), AtomPoly(ph[static_cast<std::size_t>(k)]));
        }
        if (order >= 2) {
            auto vv = radial_shift(sc.radial_v, sc.radius, order - 2);
            for (int k = 0; k <= order - 2; ++k) {
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(n - 1)] = k;
                j.V.add_term(mono_key(e), AtomPoly(vv[static_cast<std::size_t>(k)]));
            }
        }
    }
    finish(j);
    return j;
}

nlohmann::json jet_json(const PJet& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : x.terms()) terms.push_back({mono_exponents(t.first, x.dim()), t.second.to_string()});
    return {{"order", x.order()}, {"terms", terms}};
}

PJet jet_from_json(const nlohmann::json& js, int n) {
    PJet x(n, js.at("order").get<int>());
    for (const auto& t : js.at("terms")) {
        auto e = t.at(0).get<std::vector<int>>();
        if (static_cast<int>(e.size()) != n) throw ParseError("jet exponent vector has wrong length");
        x.add_term(mono_key(e), AtomPoly::parse(t.at(1).get<std::string>()));
    }
    return x;
}

} // namespace

Scenario Scenario::random_gauge(std::uint64_t seed) {
    Scenario s;
    s.kind = ScenarioKind::RandomGauge;
    s.seed = seed;
    return s;
}

Scenario Scenario::euclidean_ball(const Rational& r0) {
    if (sgn(r0) <= 0) throw InvalidRadius("ball radius must be positive");
    Scenario s;
    s.kind = ScenarioKind::EuclideanBall;
    s.radius = r0;
    s.k0 = AtomPoly();
    s.kappa = AtomPoly(Rational(1 / r0));
    return s;
}

Scenario Scenario::space_form_ball(const AtomPoly& k0, const AtomPoly& kappa) {
    Scenario s;
    s.kind = ScenarioKind::SpaceFormBall;
    s.k0 = k0;
    s.kappa = kappa;
    return s;
}

Scenario Scenario::symbolic_space_form() {
    return space_form_ball(AtomPoly(Atom::k0()), AtomPoly(Atom::kappa(0)));
}

Scenario Scenario::flat() { return Scenario{}; }

Scenario Scenario::explicit_jets(std::string json) {
    Scenario s;
    s.kind = ScenarioKind::Explicit;
    s.explicit_json = std::move(json);
    return s;
}

std::string Scenario::describe() const {
    switch (kind) {
    case ScenarioKind::RandomGauge: return "random-gauge(seed=" + std::to_string(seed) + ")";
    case ScenarioKind::EuclideanBall: return "euclidean-ball(r0=" + to_string(radius) + ")";
    case ScenarioKind::SpaceFormBall: return "space-form-ball(K0=" + k0.to_string() + ", kappa=" + kappa.to_string() + ")";
    case ScenarioKind::Flat: return "flat";
    case ScenarioKind::Explicit: return "explicit";
    }
    return "?";
}

GaugeJets<AtomPoly> build_gauge_jets(const Scenario& scenario, int n, int order) {
    if (scenario.kind == ScenarioKind::Explicit) {
        auto j = gauge_from_json(scenario.explicit_json);
        if (j.n != n) throw std::invalid_argument("explicit jets have a different dimension");
        if (j.order < order) throw OrderTooLow("explicit jets are truncated below the requested order");
        return j;
    }
    check_dims(n, order);
    switch (scenario.kind) {
    case ScenarioKind::RandomGauge: return random_gauge_jets(n, order);
    case ScenarioKind::EuclideanBall:
    case ScenarioKind::SpaceFormBall: return ball_jets(n, order, scenario.k0, scenario.kappa, scenario);
    case ScenarioKind::Flat: {
        auto j = empty_jets(n, order);
        finish(j);
        return j;
    }
    default: break;
    }
    throw std::invalid_argument("unknown scenario");
}

Assignment verification_assignment(const GaugeJets<AtomPoly>& jets, std::uint64_t seed) {
    return random_assignment(jets.atoms, seed);
}

GaugeJets<Rational> substitute(const GaugeJets<AtomPoly>& jets, const Assignment& values) {
    auto f = [&](const AtomPoly& p) { return p.eval(values); };
    GaugeJets<Rational> out;
    out.n = jets.n;
    out.order = jets.order;
    for (const auto& x : jets.g) out.g.push_back(x.map<Rational>(f));
    for (const auto& x : jets.ginv) out.ginv.push_back(x.map<Rational>(f));
    out.phi = jets.phi.map<Rational>(f);
    out.V = jets.V.map<Rational>(f);
    return out;
}

GaugeJets<AtomPoly> substitute_symbolic(const GaugeJets<AtomPoly>& jets, const std::map<Atom, AtomPoly>& values) {
    auto f = [&](const AtomPoly& p) { return p.substitute(values); };
    GaugeJets<AtomPoly> out;
    out.n = jets.n;
    out.order = jets.order;
    for (const auto& x : jets.g) out.g.push_back(x.map<AtomPoly>(f));
    out.ginv = jet_invert_metric(out.g, out.n);
    out.phi = jets.phi.map<AtomPoly>(f);
    out.V = jets.V.map<AtomPoly>(f);
    std::set<Atom> atoms;
    for (const auto& x : out.g)
        for (const auto& t : x.terms())
            for (Atom a : t.second.atoms()) atoms.insert(a);
    for (const auto* x : {&out.phi, &out.V})
        for (const auto& t : x->terms())
            for (Atom a : t.second.atoms()) atoms.insert(a);
    out.atoms.assign(atoms.begin(), atoms.end());
    return out;
}

std::vector<std::string> gauge_violations(const GaugeJets<AtomPoly>& j) {
    std::vector<std::string> bad;
    int n = j.n;
    auto name = [](const char* what, int a, int b) {
        std::ostringstream os;
        os << what << "(" << a << "," << b << ")";
        return os.str();
    };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const auto& x = j.metric(a, b);
            if (a == n || b == n) {
                if (!(x == PJet::constant(n, x.order(), AtomPoly(a == b ? 1 : 0))))
                    bad.push_back(name("normal block not trivial", a, b));
                continue;
            }
            if (!(x.value() == AtomPoly(a == b ? 1 : 0))) bad.push_back(name("g(x0) != delta", a, b));
            for (int c = 1; c < n; ++c)
                if (!x.coefficient(mono_unit(c)).is_zero()) bad.push_back(name("tangential first derivative", a, b));
            if (a != b && !x.coefficient(mono_unit(n)).is_zero()) bad.push_back(name("second fundamental form not diagonal", a, b));
            if (j.order >= 2)
                for (int c = 1; c < n; ++c)
                    if (!x.coefficient(mono_unit(n) + mono_unit(c)).is_zero()) bad.push_back(name("g_{ab,nc} != 0", a, b));
        }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            PJet s(n, j.order);
            for (int k = 1; k <= n; ++k) s += j.metric(a, k) * j.inverse(k, b);
            if (!(s == PJet::constant(n, j.order, AtomPoly(a == b ? 1 : 0)))) bad.push_back(name("g g^-1 != delta", a, b));
        }
    if (!j.phi.value().is_zero()) bad.push_back("phi(x0) != 0");
    return bad;
}

std::string gauge_to_json(const GaugeJets<AtomPoly>& j) {
    nlohmann::json metric = nlohmann::json::array();
    for (int a = 1; a <= j.n; ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (int b = 1; b <= j.n; ++b) row.push_back(jet_json(j.metric(a, b)));
        metric.push_back(row);
    }
    nlohmann::json atoms = nlohmann::json::array();
    for (Atom a : j.atoms) atoms.push_back(a.name());
    nlohmann::json out = {{"schema", 1}, {"dim", j.n},      {"order", j.order}, {"atoms", atoms},
                          {"metric", metric}, {"phi", jet_json(j.phi)}, {"V", jet_json(j.V)}};
    return out.dump(1);
}

GaugeJets<AtomPoly> gauge_from_json(const std::string& text) {
    nlohmann::json js;
    try {
        js = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("gauge json: ") + e.what());
    }
    try {
        GaugeJets<AtomPoly> j;
        j.n = js.at("dim").get<int>();
        j.order = js.at("order").get<int>();
        if (j.n < 2 || j.n > 12) throw ParseError("gauge json: dimension out of range");
        const auto& metric = js.at("metric");
        for (int a = 0; a < j.n; ++a)
            for (int b = 0; b < j.n; ++b) j.g.push_back(jet_from_json(metric.at(a).at(b), j.n));
        j.phi = jet_from_json(js.at("phi"), j.n);
        j.V = jet_from_json(js.at("V"), j.n);
        finish(j);
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("gauge json: ") + e.what());
    }
}

} // namespace dtn
