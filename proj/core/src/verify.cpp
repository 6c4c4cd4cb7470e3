#include "dtn/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace dtn {

bool CheckSuite::pass() const { return failures() == 0; }

std::size_t CheckSuite::failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

const CheckRecord* CheckSuite::first_failure() const {
    for (const auto& r : records)
        if (!r.pass) return &r;
    return nullptr;
}

void CheckSuite::append(const CheckSuite& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }

std::string suite_to_json(const std::vector<CheckSuite>& suites) {
    using nlohmann::ordered_json;
    ordered_json out;
    out["schema"] = 1;
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const auto& s : suites) {
        ordered_json js;
        js["suite"] = s.name;
        js["pass"] = s.pass();
        js["failures"] = s.failures();
        ordered_json recs = ordered_json::array();
        for (const auto& r : s.records) {
            ordered_json jr;
            jr["check"] = r.check;
            jr["scenario"] = r.scenario;
            jr["n"] = r.n;
            if (r.k >= 0) jr["k"] = r.k;
            jr["pass"] = r.pass;
            jr["detail"] = r.detail;
            recs.push_back(std::move(jr));
        }
        js["records"] = std::move(recs);
        all = all && s.pass();
        arr.push_back(std::move(js));
    }
    out["pass"] = all;
    out["suites"] = std::move(arr);
    return out.dump(2);
}

std::string suite_to_text(const CheckSuite& suite, bool failures_only) {
    std::ostringstream os;
    os << suite.name << ": " << (suite.pass() ? "PASS" : "FAIL") << " (" << suite.records.size() - suite.failures()
       << "/" << suite.records.size() << " checks)\n";
    for (const auto& r : suite.records) {
        if (failures_only && r.pass) continue;
        os << "  [" << (r.pass ? "ok" : "FAIL") << "] " << r.check << " n=" << r.n;
        if (r.k >= 0) os << " k=" << r.k;
        os << " " << r.scenario;
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
    }
    return os.str();
}

namespace {

std::string clip(const std::string& s, std::size_t limit = 400) {
    if (s.size() <= limit) return s;
    return s.substr(0, limit) + " ...";
}

std::string difference_detail(const AtomPoly& engine, const AtomPoly& reference) {
    AtomPoly d = engine - reference;
    if (d.is_zero()) return "";
    return "engine - reference = " + clip(d.to_string()) + " (" + std::to_string(d.size()) + " terms)";
}

RefKind a_kind(int k) {
    static const RefKind kinds[] = {RefKind::A0, RefKind::A1, RefKind::A2, RefKind::A3};
    return kinds[k];
}

RefKind tilde_kind(int k) {
    static const RefKind kinds[] = {RefKind::TildeA0, RefKind::TildeA1, RefKind::TildeA2, RefKind::TildeA3};
    return kinds[k];
}

CheckRecord compare(const std::string& check, const std::string& scenario, int n, int k, const AtomPoly& engine,
                    const AtomPoly& reference, int trials = 0, std::uint64_t seed = 0) {
    bool same = trials > 0 ? poly_equal_probabilistic(engine, reference, trials, seed) : engine == reference;
    CheckRecord r{check, scenario, n, k, same, ""};
    r.detail = r.pass ? engine.to_string() : difference_detail(engine, reference);
    r.detail = clip(r.detail);
    return r;
}

CheckRecord from_violations(const std::string& check, const std::string& scenario, int n,
                            const std::vector<std::string>& bad) {
    CheckRecord r{check, scenario, n, -1, bad.empty(), ""};
    if (!bad.empty()) {
        r.detail = bad.front();
        if (bad.size() > 1) r.detail += " (+" + std::to_string(bad.size() - 1) + " more)";
    }
    return r;
}

} // namespace

AtomPoly engine_ahat(const Scenario& scenario, int n, int k) {
    auto jets = build_gauge_jets(scenario, n, std::max(k, 1));
    return engine_coefficient(jets, k);
}

MatrixResult run_matrix(const MatrixConfig& config) {
    MatrixResult out;
    out.coefficients.name = "coefficients";
    out.factorization.name = "factorization";
    out.explicit_forms.name = "explicit-forms";
    out.phi_v.name = "phi-v";
    out.models.name = "models";
    out.harmonic.name = "harmonic-ball";
    for (int n : config.dims) {
        int K = std::min(config.kmax, n - 1);
        if (K < 0) continue;
        std::vector<Scenario> scenarios;
        for (auto seed : config.seeds) scenarios.push_back(Scenario::random_gauge(seed));
        if (config.models) {
            scenarios.push_back(Scenario::euclidean_ball(Rational(1)));
            scenarios.push_back(Scenario::symbolic_space_form());
        }
        for (const auto& sc : scenarios) {
            std::string name = sc.describe();
            auto jets = build_gauge_jets(sc, n, std::max(K, 1));
            Factorization<AtomPoly> f = factorize(jets, K);
            ResidualReport res = factorization_residual(f);
            CheckRecord rr{"residual", name, n, -1, res.ok(), ""};
            if (!res.ok()) {
                rr.detail = "nonzero homogeneous components at degrees";
                for (int d : res.failing_degrees) rr.detail += " " + std::to_string(d);
            } else {
                rr.detail = "degrees " + std::to_string(res.degrees_checked.front()) + ".." +
                            std::to_string(res.degrees_checked.back()) + " vanish";
            }
            out.factorization.add(rr);

            Parametrix<AtomPoly> p = build_parametrix(jets, f);
            if (config.explicit_forms)
                for (int m = 1; m <= std::min(3, K); ++m) {
                    bool same = explicit_s(p, m).same_terms(p.part(-1 - m));
                    out.explicit_forms.add(CheckRecord{"s_{-" + std::to_string(m + 1) + "}", name, n, -1, same,
                                                       same ? "" : "recursion and written-out form differ"});
                }

            auto report = curvature_report(jets);
            int k_lo = config.top_only ? K : 0;
            std::vector<AtomPoly> ahat(static_cast<std::size_t>(K + 1));
            for (int k = k_lo; k <= K; ++k) ahat[static_cast<std::size_t>(k)] = heat_coefficient(p.part(-1 - k));

            if (sc.kind == ScenarioKind::RandomGauge) {
                for (int k = k_lo; k <= K; ++k)
                    out.coefficients.add(compare("a" + std::to_string(k), name, n, k, ahat[static_cast<std::size_t>(k)],
                                                 ref_eval(a_kind(k), report, config.reading), config.trials,
                                                 config.trial_seed));
                if (config.phi_v_split && K >= 1) {
                    AtomPoly geometric = engine_coefficient(without_phi_v(jets), K);
                    AtomPoly phiv = ahat[static_cast<std::size_t>(K)] - geometric;
                    AtomPoly expected =
                        ref_eval(a_kind(K), report, config.reading) - ref_eval(tilde_kind(K), report, config.reading);
                    out.phi_v.add(compare("phiV" + std::to_string(K), name, n, K, phiv, expected, config.trials,
                                          config.trial_seed));
                }
            } else {
                for (int k = k_lo; k <= K; ++k) {
                    const AtomPoly& a = ahat[static_cast<std::size_t>(k)];
                    out.models.add(compare("a" + std::to_string(k), name, n, k, a, ref_eval(a_kind(k), report, config.reading)));
                    if (k >= 2) {
                        RefKind b = k == 2 ? RefKind::B2 : RefKind::B3;
                        out.models.add(compare("b" + std::to_string(k), name, n, k, a, ref_eval(b, report, config.reading)));
                    }
                }
                if (sc.kind == ScenarioKind::EuclideanBall) {
                    auto exact = harmonic_ball_trace_coefficients(n, K + 1);
                    Rational norm = unit_ball_normalization(n);
                    for (int k = k_lo; k <= K; ++k) {
                        Rational expected = exact[static_cast<std::size_t>(k)] / norm;
                        out.harmonic.add(compare("a" + std::to_string(k), name, n, k, ahat[static_cast<std::size_t>(k)],
                                                 AtomPoly(expected)));
                    }
                }
            }
        }
    }
    return out;
}

CheckSuite check_leading(const std::vector<int>& dims) {
    CheckSuite s;
    s.name = "leading";
    for (int n : dims) {
        std::vector<Scenario> scenarios = {Scenario::flat(), Scenario::random_gauge(1), Scenario::random_gauge(2),
                                           Scenario::euclidean_ball(Rational(1)), Scenario::symbolic_space_form()};
        for (const auto& sc : scenarios)
            s.add(compare("a0", sc.describe(), n, 0, engine_ahat(sc, n, 0), AtomPoly(Rational(gamma_int(n - 1)))));
    }
    return s;
}

CheckSuite check_geometry(const std::vector<int>& dims, const std::vector<std::uint64_t>& seeds) {
    CheckSuite s;
    s.name = "geometry";
    for (int n : dims) {
        for (auto seed : seeds) {
            Scenario sc = Scenario::random_gauge(seed);
            std::string name = sc.describe();
            auto jets = build_gauge_jets(sc, n, 3);
            auto report = curvature_report(jets);
            s.add(from_violations("gauge", name, n, gauge_violations(jets)));
            s.add(from_violations("normal-second-derivatives", name, n, normal_second_derivative_violations(jets, report)));
            s.add(from_violations("gauss", name, n, gauss_violations(report)));
            s.add(from_violations("riemann-symmetries", name, n, riemann_symmetry_violations(report)));
            s.add(from_violations("riemann-routes", name, n, riemann_route_violations(jets)));
        }
        Scenario sf = Scenario::symbolic_space_form();
        auto jets = build_gauge_jets(sf, n, 3);
        auto report = curvature_report(jets);
        s.add(from_violations("space-form-relations", sf.describe(), n, space_form_violations(report, AtomPoly(Atom::k0()))));
        s.add(from_violations("a-b-agreement", sf.describe(), n, space_form_consistency(report)));
    }
    return s;
}

CheckSuite check_moments(const std::vector<int>& dims, int max_p, int max_degree, double rel_tol) {
    CheckSuite s;
    s.name = "moments";
    for (int n : dims) {
        int d = n - 1;
        std::vector<std::vector<int>> exps;
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == d) {
                exps.push_back(e);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[static_cast<std::size_t>(i)] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, max_degree);
        int count = 0;
        int skipped = 0;
        double worst = 0.0;
        std::string worst_at;
        for (int p = -max_p; p <= max_p; ++p)
            for (const auto& m : exps) {
                int total = 0;
                for (int x : m) total += x;
                if (n - 1 + p + total < 1) {
                    ++skipped;
                    continue;
                }
                double exact = moment(n, p, m).get_d();
                double quad = moment_quadrature(n, p, m);
                double err = exact != 0.0 ? std::fabs(quad - exact) / std::fabs(exact)
                                          : std::fabs(quad) / std::tgamma(n - 1 + p + total);
                ++count;
                if (err > worst) {
                    worst = err;
                    std::ostringstream os;
                    os << "p=" << p << " m=(";
                    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
                    os << ")";
                    worst_at = os.str();
                }
            }
        std::ostringstream os;
        os.precision(3);
        os << count << " moments (" << skipped << " divergent skipped), worst relative error " << worst << " at "
           << worst_at;
        s.add(CheckRecord{"quadrature", "", n, -1, worst <= rel_tol, os.str()});
    }
    return s;
}

namespace {

bool is_harmonic(const RadialProblem& p) {
    for (std::size_t i = 1; i < p.phi.size(); ++i)
        if (sgn(p.phi[i]) != 0) return false;
    for (const auto& v : p.V)
        if (sgn(v) != 0) return false;
    return true;
}

} // namespace

NumericReport run_numeric(const RadialProblem& problem, const FitOptions& options, int K, int cutoff) {
    auto start = std::chrono::steady_clock::now();
    problem.validate();
    NumericReport r;
    r.problem = problem;
    r.options = options;
    int n = problem.dim();
    bool harmonic = is_harmonic(problem);
    r.cutoff = cutoff > 0 ? cutoff : std::max(required_cutoff(problem, options.t_min), 60);
    r.spectrum = spectrum(problem, r.cutoff);
    const SteklovSpectrum& s = r.spectrum;
    r.t = geometric_grid(options.t_min, options.t_max, options.points);
    for (double t : r.t) {
        TraceValue v = heat_trace(s, t);
        r.trace.push_back(v.value);
        r.max_tail = std::max(r.max_tail, v.tail_bound);
    }
    r.fit = fit_asymptotics(r.t, r.trace, n, K, options);
    r.reference = predict_coefficients(problem, K);
    r.engine = engine_predictions(problem, K);
    double tau = 50.0;
    r.weyl_ratio = static_cast<double>(weyl_count(s, tau)) / std::pow(tau, n - 1);
    r.weyl_constant = weyl_constant(problem.geometry);
    if (harmonic) {
        r.harmonic_error = 0.0;
        int top = std::min(60, static_cast<int>(s.by_mode.size()) - 1);
        for (int m = 0; m <= top; ++m)
            r.harmonic_error = std::max(r.harmonic_error, std::fabs(s.by_mode[static_cast<std::size_t>(m)] - m));
    }
    for (std::size_t m = 1; m < s.by_mode.size(); ++m)
        if (!(s.by_mode[m] > s.by_mode[m - 1])) r.monotone = false;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string numeric_to_json(const NumericReport& r) {
    using nlohmann::ordered_json;
    auto rationals = [](const std::vector<Rational>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& x : v) a.push_back(to_string(x));
        return a;
    };
    ordered_json out;
    out["schema"] = 1;
    out["geometry"] = geometry_name(r.problem.geometry);
    out["dim"] = r.problem.dim();
    out["phi"] = rationals(r.problem.phi);
    out["V"] = rationals(r.problem.V);
    out["cutoff"] = r.cutoff;
    out["t_window"] = {r.options.t_min, r.options.t_max};
    out["points"] = r.options.points;
    out["basis"] = r.fit.basis;
    out["fitted"] = r.fit.coefficients;
    out["standard_errors"] = r.fit.errors;
    out["guard_coefficients"] = r.fit.guard_coefficients;
    out["condition"] = r.fit.condition;
    out["rms_residual"] = r.fit.rms_residual;
    out["max_tail_bound"] = r.max_tail;
    out["reference"] = rationals(r.reference);
    out["engine"] = rationals(r.engine);
    out["weyl_ratio"] = r.weyl_ratio;
    out["weyl_constant"] = r.weyl_constant;
    if (r.harmonic_error >= 0) out["harmonic_eigenvalue_error"] = r.harmonic_error;
    out["monotone"] = r.monotone;
    return out.dump(2);
}

} // namespace dtn
