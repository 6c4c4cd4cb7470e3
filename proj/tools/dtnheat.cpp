#include "dtn/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace dtn;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "3..6", "3,5,8" or a single value.
std::vector<long> parse_range(const std::string& text) {
    std::vector<long> out;
    auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            long lo = std::stol(text.substr(0, dots));
            long hi = std::stol(text.substr(dots + 2));
            if (hi < lo) throw UsageError("empty range " + text);
            for (long v = lo; v <= hi; ++v) out.push_back(v);
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse range '" + text + "'");
    }
    if (out.empty()) throw UsageError("empty range");
    return out;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> out;
    for (long v : parse_range(text)) {
        if (v < 2 || v > 12) throw UsageError("dimension " + std::to_string(v) + " outside 2..12");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (long v : parse_range(text)) {
        if (v < 0) throw UsageError("seeds are non-negative");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

std::vector<Rational> parse_coefficients(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::exception&) {
            // decimal input such as 0.5
            std::size_t dot = item.find('.');
            if (dot == std::string::npos) throw UsageError("bad coefficient '" + item + "'");
            std::string digits = item.substr(0, dot) + item.substr(dot + 1);
            Integer den = 1;
            for (std::size_t i = dot + 1; i < item.size(); ++i) den *= 10;
            try {
                out.push_back(ratio(Integer(digits), den));
            } catch (const std::exception&) {
                throw UsageError("bad coefficient '" + item + "'");
            }
        }
    }
    return out;
}

Scenario parse_scenario(const std::string& name, std::uint64_t seed, const std::string& jets_file) {
    if (name == "random") return Scenario::random_gauge(seed);
    if (name == "flat") return Scenario::flat();
    if (name == "ball") return Scenario::euclidean_ball(Rational(1));
    if (name == "space-form") return Scenario::symbolic_space_form();
    if (name == "json") {
        std::ifstream in(jets_file);
        if (!in) throw UsageError("cannot read jets file '" + jets_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return Scenario::explicit_jets(ss.str());
    }
    throw UsageError("unknown scenario '" + name + "'");
}

RefKind a_kind(int k) {
    static const RefKind kinds[] = {RefKind::A0, RefKind::A1, RefKind::A2, RefKind::A3};
    return kinds[k];
}

// ---------------------------------------------------------------- expand

struct ExpandConfig {
    int dim = 0;
    int max_k = 1;
    std::string scenario = "random";
    std::uint64_t seed = 0;
    std::string jets_file;
    std::string format = "text";
};

int cmd_expand(const ExpandConfig& c) {
    if (c.dim < 2) throw UsageError("--dim must be at least 2");
    if (c.max_k < 0) throw UsageError("--max-k must be non-negative");
    if (c.max_k > std::min(3, c.dim - 1))
        throw UsageError("k = " + std::to_string(c.max_k) + " exceeds the validity range k <= min(3, n - 1) = " +
                         std::to_string(std::min(3, c.dim - 1)));
    Scenario sc = parse_scenario(c.scenario, c.seed, c.jets_file);
    auto jets = build_gauge_jets(sc, c.dim, std::max(c.max_k, 1));
    auto coeffs = engine_coefficients(jets, c.max_k);
    auto report = curvature_report(jets);
    int n = c.dim;

    std::string norm_text = "a_k(x') = omega_{n-2} / (2 pi)^{n-1} * ahat_k, omega_{n-2} = |S^{n-2}|";
    std::string norm_latex = "a_k(x') = \\frac{\\omega_{" + std::to_string(n - 2) + "}}{(2\\pi)^{" + std::to_string(n - 1) +
                             "}}\\,\\hat a_k(x')";
    if (c.format == "json") {
        ordered_json out;
        out["schema"] = 1;
        out["dim"] = n;
        out["scenario"] = sc.describe();
        out["normalization"] = norm_text;
        ordered_json arr = ordered_json::array();
        for (const auto& r : coeffs) {
            ordered_json e;
            e["k"] = r.k;
            e["ahat"] = r.value.to_string();
            e["prefactor"] = to_string(ref_prefactor(a_kind(r.k), n));
            e["invariant_form"] = ref_instance(a_kind(r.k), n, false);
            e["matches_invariant_form"] = r.value == ref_eval(a_kind(r.k), report);
            e["beyond_validity"] = r.beyond_validity;
            arr.push_back(std::move(e));
        }
        out["coefficients"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else if (c.format == "latex") {
        std::cout << "% " << sc.describe() << ", n = " << n << "\n";
        std::cout << "% " << norm_latex << "\n";
        for (const auto& r : coeffs) {
            std::cout << "\\hat a_{" << r.k << "} &= " << to_latex(r.value) << " \\\\\n";
            std::cout << "  &= " << ref_instance(a_kind(r.k), n, true)
                      << (r.value == ref_eval(a_kind(r.k), report) ? "" : " \\quad\\text{(differs)}") << " \\\\\n";
        }
    } else {
        std::cout << "scenario: " << sc.describe() << ", n = " << n << "\n";
        std::cout << norm_text << "\n";
        for (const auto& r : coeffs) {
            std::cout << "ahat_" << r.k << " = " << r.value.to_string() << "\n";
            bool same = r.value == ref_eval(a_kind(r.k), report);
            std::cout << "  invariant form: " << ref_instance(a_kind(r.k), n, false)
                      << (same ? "" : "  [engine differs]") << "\n";
            if (r.beyond_validity) std::cout << "  (k = n - 1: last coefficient before the o(1) remainder)\n";
        }
    }
    return kExitPass;
}

// ---------------------------------------------------------------- report

int cmd_report(int dim, int order, const std::string& scenario, std::uint64_t seed, const std::string& jets_file) {
    if (dim < 2) throw UsageError("--dim must be at least 2");
    if (order < 1 || order > 4) throw UsageError("--order must be in 1..4");
    Scenario sc = parse_scenario(scenario, seed, jets_file);
    auto jets = build_gauge_jets(sc, dim, order);
    std::cout << curvature_report_json(curvature_report(jets)) << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyConfig {
    std::string what;
    std::string dims = "3..6";
    int dim = 0;
    int max_k = 2;
    int depth = 3;
    std::string seeds;
    std::uint64_t seed = 1;
    int trials = 0;
    int max_degree = 6;
    int max_p = 6;
    double tol = 1e-6;
    std::string reading = "laplace-beltrami";
    bool models = false;
    std::string format = "text";
};

int emit_suites(const std::vector<CheckSuite>& suites, const std::string& format) {
    bool ok = true;
    for (const auto& s : suites) ok = ok && s.pass();
    if (format == "json") {
        std::cout << suite_to_json(suites) << "\n";
    } else {
        for (const auto& s : suites) std::cout << suite_to_text(s, false);
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyConfig& c) {
    std::vector<std::uint64_t> seeds = c.seeds.empty() ? std::vector<std::uint64_t>{c.seed} : parse_seeds(c.seeds);
    LaplaceReading reading;
    if (c.reading == "laplace-beltrami")
        reading = LaplaceReading::LaplaceBeltrami;
    else if (c.reading == "coordinate")
        reading = LaplaceReading::Coordinate;
    else
        throw UsageError("--reading is laplace-beltrami or coordinate");

    if (c.what == "coefficients") {
        if (c.max_k < 0 || c.max_k > 3) throw UsageError("--max-k must be in 0..3");
        MatrixConfig m;
        m.dims = parse_dims(c.dims);
        m.seeds = seeds;
        m.kmax = c.max_k;
        m.explicit_forms = false;
        m.phi_v_split = c.max_k >= 2;
        m.models = c.models;
        m.reading = reading;
        m.trials = c.trials;
        m.trial_seed = c.seed;
        MatrixResult r = run_matrix(m);
        std::vector<CheckSuite> suites = {r.coefficients};
        if (m.phi_v_split) suites.push_back(r.phi_v);
        if (m.models) {
            suites.push_back(r.models);
            suites.push_back(r.harmonic);
        }
        return emit_suites(suites, c.format);
    }
    if (c.what == "factorization") {
        if (c.dim < 2) throw UsageError("--dim must be at least 2");
        if (c.depth < 0 || c.depth > 3) throw UsageError("--depth must be in 0..3");
        MatrixConfig m;
        m.dims = {c.dim};
        m.seeds = seeds;
        m.kmax = c.depth;
        m.top_only = true;
        m.models = c.models;
        MatrixResult r = run_matrix(m);
        return emit_suites({r.factorization, r.explicit_forms}, c.format);
    }
    if (c.what == "moments") {
        std::vector<int> dims = c.dim > 0 ? std::vector<int>{c.dim} : parse_dims(c.dims);
        if (c.max_degree < 0 || c.max_p < 0) throw UsageError("degrees must be non-negative");
        return emit_suites({check_moments(dims, c.max_p, c.max_degree, c.tol)}, c.format);
    }
    if (c.what == "geometry") {
        std::vector<int> dims = c.dim > 0 ? std::vector<int>{c.dim} : parse_dims(c.dims);
        for (int n : dims)
            if (n < 3) throw UsageError("geometry checks need n >= 3");
        return emit_suites({check_geometry(dims, seeds)}, c.format);
    }
    if (c.what == "leading") {
        std::vector<int> dims = c.dim > 0 ? std::vector<int>{c.dim} : parse_dims(c.dims);
        return emit_suites({check_leading(dims)}, c.format);
    }
    throw UsageError("unknown verify target '" + c.what + "'");
}

// ---------------------------------------------------------------- numeric

struct NumericConfig {
    std::string geometry;
    std::string phi;
    std::string V;
    int terms = 0;
    int cutoff = 0;
    double t_min = 0;
    double t_max = 0;
    int points = 0;
    std::string guard;
    double tol = 1e-3;
    std::string against = "reference";
    std::string spectrum_csv;
    std::string trace_csv;
    std::string format = "text";
};

void write_csv(const std::string& path, const std::string& header, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << std::setprecision(17) << header << "\n";
    body(out);
}

int cmd_numeric(const NumericConfig& c) {
    RadialProblem p;
    if (c.geometry == "disk")
        p.geometry = ModelGeometry::Disk;
    else if (c.geometry == "ball")
        p.geometry = ModelGeometry::Ball;
    else if (c.geometry == "ball4")
        p.geometry = ModelGeometry::Ball4;
    else
        throw UsageError("geometry is disk, ball or ball4");
    p.phi = parse_coefficients(c.phi);
    p.V = parse_coefficients(c.V);
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    int n = p.dim();
    int K = c.terms > 0 ? c.terms : n;
    if (K > n) throw UsageError("--terms is at most n");
    FitOptions o = default_fit_options(n);
    if (c.t_min > 0) o.t_min = c.t_min;
    if (c.t_max > 0) o.t_max = c.t_max;
    if (c.points > 0) o.points = c.points;
    if (!(o.t_min < o.t_max)) throw UsageError("empty t-window");
    if (!c.guard.empty()) {
        o.guard.clear();
        if (c.guard != "none") {
            std::stringstream ss(c.guard);
            std::string item;
            while (std::getline(ss, item, ',')) o.guard.push_back(item);
        }
    }
    if (c.against != "reference" && c.against != "engine") throw UsageError("--against is reference or engine");

    NumericReport r = run_numeric(p, o, K, c.cutoff);
    const auto& target = c.against == "engine" ? r.engine : r.reference;
    bool ok = true;
    std::vector<bool> within;
    for (int k = 0; k < K; ++k) {
        bool w = std::fabs(r.fit.coefficients[static_cast<std::size_t>(k)] - target[static_cast<std::size_t>(k)].get_d()) <= c.tol;
        within.push_back(w);
        ok = ok && w;
    }

    if (!c.spectrum_csv.empty())
        write_csv(c.spectrum_csv, "mode,lambda,multiplicity", [&](std::ostream& out) {
            for (std::size_t m = 0; m < r.spectrum.by_mode.size(); ++m)
                out << m << "," << r.spectrum.by_mode[m] << "," << p.multiplicity(static_cast<int>(m)) << "\n";
        });
    if (!c.trace_csv.empty())
        write_csv(c.trace_csv, "t,trace", [&](std::ostream& out) {
            for (std::size_t i = 0; i < r.t.size(); ++i) out << r.t[i] << "," << r.trace[i] << "\n";
        });

    if (c.format == "json") {
        auto j = ordered_json::parse(numeric_to_json(r));
        j["tolerance"] = c.tol;
        j["against"] = c.against;
        j["within_tolerance"] = within;
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << geometry_name(p.geometry) << " (n = " << n << "), modes 0.." << r.cutoff << ", t in [" << o.t_min
                  << ", " << o.t_max << "], " << o.points << " points\n";
        std::cout << "fit condition " << std::scientific << std::setprecision(2) << r.fit.condition << ", rms residual "
                  << r.fit.rms_residual << ", tail bound " << r.max_tail << "\n"
                  << std::defaultfloat;
        std::cout << std::left << std::setw(4) << "k" << std::setw(16) << "fitted" << std::setw(12) << "std.err"
                  << std::setw(16) << "reference" << std::setw(16) << "engine" << "\n";
        for (int k = 0; k < K; ++k) {
            auto i = static_cast<std::size_t>(k);
            std::ostringstream fit, err;
            fit << std::fixed << std::setprecision(8) << r.fit.coefficients[i];
            err << std::scientific << std::setprecision(1) << r.fit.errors[i];
            std::cout << std::setw(4) << k << std::setw(16) << fit.str() << std::setw(12) << err.str() << std::setw(16)
                      << to_string(r.reference[i]) << std::setw(16) << to_string(r.engine[i])
                      << (within[i] ? "ok" : "outside tolerance") << "\n";
        }
        std::cout << std::right;
        if (r.harmonic_error >= 0)
            std::cout << "max |lambda_m - m| for m <= 60: " << std::scientific << std::setprecision(2) << r.harmonic_error
                      << std::defaultfloat << "\n";
        std::cout << "N(50)/50^" << n - 1 << " = " << std::fixed << std::setprecision(4) << r.weyl_ratio << " (Weyl constant "
                  << r.weyl_constant << ")\n"
                  << std::defaultfloat;
        std::cout << (ok ? "PASS" : "FAIL") << " (tolerance " << c.tol << " against " << c.against << ")\n";
    }
    return ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat-trace coefficients of the weighted Dirichlet-to-Neumann map"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
    };

    ExpandConfig ec;
    auto* expand = app.add_subcommand("expand", "Symbolic coefficients a_0..a_k");
    expand->add_option("--dim", ec.dim, "Manifold dimension n")->required();
    expand->add_option("--max-k", ec.max_k, "Highest coefficient index");
    expand->add_option("--scenario", ec.scenario, "random, flat, ball, space-form or json");
    expand->add_option("--seed", ec.seed, "Seed of the random gauge");
    expand->add_option("--jets", ec.jets_file, "Jets file for --scenario json");
    add_format(expand);

    int rdim = 0, rorder = 3;
    std::string rscenario = "random", rjets;
    std::uint64_t rseed = 0;
    auto* report = app.add_subcommand("report", "Curvature and phi/V report of a scenario (JSON)");
    report->add_option("--dim", rdim, "Manifold dimension n")->required();
    report->add_option("--order", rorder, "Jet order");
    report->add_option("--scenario", rscenario, "random, flat, ball, space-form or json");
    report->add_option("--seed", rseed, "Seed of the random gauge");
    report->add_option("--jets", rjets, "Jets file for --scenario json");

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("what", vc.what, "coefficients, factorization, moments, geometry or leading")->required();
    verify->add_option("--dims", vc.dims, "Dimension range, e.g. 3..6");
    verify->add_option("--dim", vc.dim, "Single dimension");
    verify->add_option("--max-k", vc.max_k, "Highest coefficient index");
    verify->add_option("--depth", vc.depth, "Factorization depth");
    verify->add_option("--seed", vc.seed, "Random gauge seed (and Schwartz-Zippel seed)");
    verify->add_option("--seeds", vc.seeds, "Seed range, e.g. 1..10");
    verify->add_option("--trials", vc.trials, "Schwartz-Zippel trials instead of exact identity (0 = exact)");
    verify->add_option("--max-degree", vc.max_degree, "Moments: largest |m|");
    verify->add_option("--max-p", vc.max_p, "Moments: largest |p|");
    verify->add_option("--tol", vc.tol, "Moments: relative tolerance");
    verify->add_option("--reading", vc.reading, "Delta phi in the phi/V group: laplace-beltrami or coordinate");
    verify->add_flag("--models", vc.models, "Also run the Euclidean ball and the symbolic space form");
    add_format(verify);

    NumericConfig nc;
    auto* numeric = app.add_subcommand("numeric", "Steklov spectrum, heat trace and fitted coefficients");
    numeric->add_option("geometry", nc.geometry, "disk, ball (3-ball) or ball4 (4-ball)")->required();
    numeric->add_option("--phi", nc.phi, "Coefficients of phi(r) in powers of r, e.g. 0,0,1/2");
    numeric->add_option("--V", nc.V, "Coefficients of V(r) in powers of r");
    numeric->add_option("--terms", nc.terms, "Number of fitted coefficients (default n)");
    numeric->add_option("--cutoff", nc.cutoff, "Highest angular mode (default from the tail bound)");
    numeric->add_option("--t-min", nc.t_min, "Fit window start");
    numeric->add_option("--t-max", nc.t_max, "Fit window end");
    numeric->add_option("--points", nc.points, "Number of geometric grid points");
    numeric->add_option("--guard", nc.guard, "Guard terms, e.g. tlog,t,t2log,t2,t3 or none");
    numeric->add_option("--tol", nc.tol, "Absolute tolerance on each fitted coefficient");
    numeric->add_option("--against", nc.against, "Compare with reference (closed forms) or engine");
    numeric->add_option("--spectrum-csv", nc.spectrum_csv, "Write the spectrum as CSV");
    numeric->add_option("--trace-csv", nc.trace_csv, "Write the trace samples as CSV");
    add_format(numeric);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*expand) {
            ec.format = format;
            return cmd_expand(ec);
        }
        if (*report) return cmd_report(rdim, rorder, rscenario, rseed, rjets);
        if (*verify) {
            vc.format = format == "latex" ? "text" : format;
            return cmd_verify(vc);
        }
        if (*numeric) {
            nc.format = format == "latex" ? "text" : format;
            return cmd_numeric(nc);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
