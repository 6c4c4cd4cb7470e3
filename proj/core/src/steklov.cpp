#include "dtn/steklov.hpp"

#include "dtn/gauge.hpp"
#include "dtn/reference.hpp"
#include "dtn/trace.hpp"

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace dtn {

namespace odeint = boost::numeric::odeint;

std::string geometry_name(ModelGeometry g) {
    switch (g) {
    case ModelGeometry::Disk: return "disk";
    case ModelGeometry::Ball: return "ball";
    case ModelGeometry::Ball4: return "ball4";
    }
    return "?";
}

int RadialProblem::multiplicity(int mode) const {
    switch (geometry) {
    case ModelGeometry::Disk: return mode == 0 ? 1 : 2;
    case ModelGeometry::Ball: return 2 * mode + 1;
    case ModelGeometry::Ball4: return (mode + 1) * (mode + 1);
    }
    return 0;
}

double RadialProblem::angular_constant(int mode) const {
    double m = mode;
    return m * (m + dim() - 2);
}

void RadialProblem::validate() const {
    if (geometry == ModelGeometry::Disk) return;
    for (std::size_t i = 1; i < phi.size(); i += 2)
        if (sgn(phi[i]) != 0) throw std::invalid_argument("ball problems need phi even in r");
    for (std::size_t i = 1; i < V.size(); i += 2)
        if (sgn(V[i]) != 0) throw std::invalid_argument("ball problems need V even in r");
}

namespace {

struct Coefficients {
    std::vector<double> dphi;  // phi'(r) = sum dphi[i] r^i
    std::vector<double> v;     // V(r) = sum v[i] r^i
    int d = 2;
    double c = 0;

    explicit Coefficients(const RadialProblem& p, int mode) : d(p.dim()), c(p.angular_constant(mode)) {
        for (std::size_t i = 1; i < p.phi.size(); ++i) dphi.push_back(static_cast<double>(i) * p.phi[i].get_d());
        for (const auto& x : p.V) v.push_back(x.get_d());
    }

    static double poly(const std::vector<double>& c, double r) {
        double s = 0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * r + c[i];
        return s;
    }
    double p(double r) const { return poly(dphi, r); }
    double V(double r) const { return poly(v, r); }
};

// Frobenius coefficients of u = r^m sum a_J r^J:
// a_J J (2m + J + d - 2) = sum_j f_{J-1-j} (m + j) a_j - sum_j v_{J-2-j} a_j.
std::vector<double> frobenius(const Coefficients& k, int mode, int terms) {
    std::vector<double> a(static_cast<std::size_t>(terms), 0.0);
    a[0] = 1.0;
    for (int J = 1; J < terms; ++J) {
        double s = 0;
        for (int j = 0; j < J; ++j) {
            int i = J - 1 - j;
            if (i < static_cast<int>(k.dphi.size())) s += k.dphi[static_cast<std::size_t>(i)] * (mode + j) * a[static_cast<std::size_t>(j)];
            int iv = J - 2 - j;
            if (iv >= 0 && iv < static_cast<int>(k.v.size())) s -= k.v[static_cast<std::size_t>(iv)] * a[static_cast<std::size_t>(j)];
        }
        a[static_cast<std::size_t>(J)] = s / (J * (2.0 * mode + J + k.d - 2));
    }
    return a;
}

constexpr double kStart = 1e-6;
constexpr double kRelTol = 1e-12;
constexpr long kMaxSteps = 5'000'000;

double linear_eigenvalue(const Coefficients& k, int mode) {
    using State = std::array<double, 2>;
    auto a = frobenius(k, mode, 3);
    double r0 = kStart;
    State x{0.0, 0.0};
    for (int J = 0; J < 3; ++J) {
        x[0] += a[static_cast<std::size_t>(J)] * std::pow(r0, mode + J);
        if (mode + J > 0) x[1] += a[static_cast<std::size_t>(J)] * (mode + J) * std::pow(r0, mode + J - 1);
    }
    auto rhs = [&](const State& s, State& ds, double r) {
        ds[0] = s[1];
        ds[1] = -((k.d - 1) / r - k.p(r)) * s[1] + k.c / (r * r) * s[0] - k.V(r) * s[0];
    };
    double umax = std::abs(x[0]);
    long steps = 0;
    auto obs = [&](const State& s, double) {
        umax = std::max(umax, std::abs(s[0]));
        if (++steps > kMaxSteps) throw NonConvergent("radial integration did not converge");
    };
    odeint::integrate_adaptive(odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-300, kRelTol), rhs, x, r0, 1.0,
                               r0 * 1e-3, obs);
    if (!std::isfinite(x[0]) || !std::isfinite(x[1])) throw NonConvergent("radial integration overflowed");
    if (std::abs(x[0]) < 1e-10 * umax) throw NodalBoundary("u(1) vanishes: 0 is a Dirichlet eigenvalue");
    return x[1] / x[0];
}

double riccati_eigenvalue(const Coefficients& k, int mode) {
    using State = std::array<double, 1>;
    auto a = frobenius(k, mode, 3);
    double r0 = kStart;
    double num = 0, den = 0;
    for (int J = 0; J < 3; ++J) {
        num += a[static_cast<std::size_t>(J)] * (mode + J) * std::pow(r0, J);
        den += a[static_cast<std::size_t>(J)] * std::pow(r0, J);
    }
    State y{num / den};
    // y = r u'/u in s = log r:
    // dy/ds = c - y^2 - (d-2) y + r phi'(r) y - r^2 V(r)
    auto rhs = [&](const State& s, State& ds, double logr) {
        double r = std::exp(logr);
        ds[0] = k.c - s[0] * s[0] - (k.d - 2) * s[0] + r * k.p(r) * s[0] - r * r * k.V(r);
    };
    long steps = 0;
    auto obs = [&](const State& s, double) {
        if (!std::isfinite(s[0]) || std::abs(s[0]) > 1e12) throw NodalBoundary("logarithmic derivative blew up");
        if (++steps > kMaxSteps) throw NonConvergent("Riccati integration did not converge");
    };
    odeint::integrate_adaptive(odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-14, kRelTol), rhs, y,
                               std::log(r0), 0.0, 1e-3, obs);
    return y[0];
}

int thread_count() {
    if (const char* e = std::getenv("DTN_THREADS")) {
        int n = std::atoi(e);
        if (n > 0) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(std::min(h, 16u));
}

} // namespace

double mode_eigenvalue(const RadialProblem& problem, int mode) {
    if (mode < 0) throw std::invalid_argument("mode must be non-negative");
    problem.validate();
    Coefficients k(problem, mode);
    return mode <= kRiccatiThreshold ? linear_eigenvalue(k, mode) : riccati_eigenvalue(k, mode);
}

SteklovSpectrum spectrum(const RadialProblem& problem, int cutoff) {
    problem.validate();
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    SteklovSpectrum s;
    s.problem = problem;
    s.by_mode.assign(static_cast<std::size_t>(cutoff + 1), 0.0);
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(thread_count()));
    std::vector<std::thread> pool;
    for (int w = 0; w < thread_count(); ++w)
        pool.emplace_back([&, w] {
            try {
                for (int m = next++; m <= cutoff; m = next++) s.by_mode[static_cast<std::size_t>(m)] = mode_eigenvalue(problem, m);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                next = cutoff + 1;
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (int m = 0; m <= cutoff; ++m) s.levels.emplace_back(s.by_mode[static_cast<std::size_t>(m)], problem.multiplicity(m));
    std::stable_sort(s.levels.begin(), s.levels.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
}

int required_cutoff(const RadialProblem& problem, double t_min) {
    int m = 10;
    while (true) {
        double tail = 0;
        for (int j = m + 1; j < m + 4000; ++j) {
            double term = problem.multiplicity(j) * std::exp(-t_min * 0.9 * j);
            tail += term;
            if (term < 1e-30) break;
        }
        if (tail < 1e-13) return m;
        m += 10;
    }
}

TraceValue heat_trace(const SteklovSpectrum& s, double t, double max_tail) {
    if (t <= 0) throw std::invalid_argument("heat trace needs t > 0");
    TraceValue out;
    // smallest terms first for a deterministic, well-conditioned sum
    std::vector<double> terms;
    for (const auto& [lam, mult] : s.levels) terms.push_back(mult * std::exp(-t * lam));
    std::sort(terms.begin(), terms.end());
    for (double x : terms) out.value += x;

    int M = static_cast<int>(s.by_mode.size()) - 1;
    if (M < 10) throw CutoffTooSmall("too few modes for a tail estimate");
    double slope = std::numeric_limits<double>::infinity();
    for (int m = M - 9; m <= M; ++m) slope = std::min(slope, s.by_mode[static_cast<std::size_t>(m)] / m);
    slope *= 0.98;
    double tail = 0;
    for (int m = M + 1;; ++m) {
        double term = s.problem.multiplicity(m) * std::exp(-t * slope * m);
        tail += term;
        if (term < 1e-40 * std::max(1.0, tail) || m > M + 1'000'000) break;
    }
    out.tail_bound = tail;
    if (tail > max_tail) throw CutoffTooSmall("tail bound " + std::to_string(tail) + " exceeds " + std::to_string(max_tail));
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (points < 2 || lo <= 0 || hi <= lo) throw std::invalid_argument("bad grid");
    std::vector<double> t;
    for (int i = 0; i < points; ++i) t.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return t;
}

FitOptions default_fit_options(int n) {
    FitOptions o;
    (void)n;
    o.guard = {"tlog", "t", "t2log", "t2", "t3", "t3log"};
    return o;
}

namespace {

double guard_value(const std::string& name, double t) {
    // Accepted names: "t", "t<k>", "log", "tlog", "t<k>log".
    std::string body = name;
    bool with_log = false;
    if (body.size() >= 3 && body.compare(body.size() - 3, 3, "log") == 0) {
        with_log = true;
        body.resize(body.size() - 3);
    }
    int power = 0;
    if (!body.empty()) {
        if (body[0] != 't') throw std::invalid_argument("unknown guard term " + name);
        power = 1;
        if (body.size() > 1) {
            std::size_t used = 0;
            try {
                power = std::stoi(body.substr(1), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("unknown guard term " + name);
            }
            if (used != body.size() - 1 || power < 1) throw std::invalid_argument("unknown guard term " + name);
        }
    } else if (!with_log) {
        throw std::invalid_argument("unknown guard term " + name);
    }
    double v = std::pow(t, power);
    return with_log ? v * std::log(t) : v;
}

} // namespace

FitResult fit_asymptotics(const std::vector<double>& t, const std::vector<double>& trace, int n, int K,
                          const FitOptions& options) {
    if (t.size() != trace.size()) throw std::invalid_argument("grid and samples differ in length");
    if (K < 1 || K > n) throw std::invalid_argument("number of fitted coefficients must be in 1..n");
    int cols = K + static_cast<int>(options.guard.size());
    int P = static_cast<int>(t.size());
    if (P <= cols) throw std::invalid_argument("not enough samples for the fit");
    Eigen::MatrixXd A(P, cols);
    Eigen::VectorXd y(P);
    FitResult r;
    r.t = t;
    for (int k = 0; k < K; ++k) r.basis.push_back("t^" + std::to_string(k - n + 1));
    for (const auto& g : options.guard) r.basis.push_back(g);
    for (int i = 0; i < P; ++i) {
        double ti = t[static_cast<std::size_t>(i)];
        for (int k = 0; k < K; ++k) A(i, k) = std::pow(ti, k - n + 1);
        for (int g = 0; g < static_cast<int>(options.guard.size()); ++g) A(i, K + g) = guard_value(options.guard[static_cast<std::size_t>(g)], ti);
        y(i) = trace[static_cast<std::size_t>(i)];
    }
    Eigen::VectorXd scale = A.colwise().norm().transpose();
    Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    r.condition = sv(0) / sv(sv.size() - 1);
    if (!(r.condition < options.max_condition))
        throw IllConditioned("fit condition number " + std::to_string(r.condition) + " exceeds the threshold");
    Eigen::VectorXd xs = svd.solve(y);
    Eigen::VectorXd resid = As * xs - y;
    r.rms_residual = std::sqrt(resid.squaredNorm() / P);
    double s2 = resid.squaredNorm() / (P - cols);
    Eigen::MatrixXd Vm = svd.matrixV();
    Eigen::VectorXd inv2 = sv.array().square().inverse();
    for (int c = 0; c < cols; ++c) {
        double var = s2 * (Vm.row(c).array().square() * inv2.transpose().array()).sum();
        double value = xs(c) / scale(c);
        double err = std::sqrt(var) / scale(c);
        if (c < K) {
            r.coefficients.push_back(value);
            r.errors.push_back(err);
        } else {
            r.guard_coefficients.push_back(value);
        }
    }
    return r;
}

namespace {

GaugeJets<Rational> model_jets(const RadialProblem& problem) {
    problem.validate();
    Scenario sc = Scenario::euclidean_ball(Rational(1));
    sc.radial_phi = problem.phi;
    sc.radial_v = problem.V;
    return substitute(build_gauge_jets(sc, problem.dim(), 3), Assignment{});
}

} // namespace

double boundary_normalization(const RadialProblem& problem) {
    int n = problem.dim();
    auto sphere = [](int dim) { return 2.0 * std::pow(std::numbers::pi, (dim + 1) / 2.0) / std::tgamma((dim + 1) / 2.0); };
    return sphere(n - 2) * sphere(n - 1) / std::pow(2.0 * std::numbers::pi, n - 1);
}

std::vector<Rational> predict_coefficients(const RadialProblem& problem, int K) {
    auto jets = model_jets(problem);
    auto report = curvature_report(jets);
    const RefKind kinds[] = {RefKind::A0, RefKind::A1, RefKind::A2, RefKind::A3};
    if (K > 4) throw OutOfRange("closed forms are available for k <= 3");
    std::vector<Rational> out;
    Rational norm = unit_ball_normalization(problem.dim());
    for (int k = 0; k < K; ++k) out.push_back(norm * ref_eval(kinds[k], report));
    return out;
}

std::vector<Rational> engine_predictions(const RadialProblem& problem, int K) {
    auto jets = model_jets(problem);
    std::vector<Rational> out;
    Rational norm = unit_ball_normalization(problem.dim());
    for (const auto& c : engine_coefficients(jets, K - 1)) out.push_back(norm * c.value);
    return out;
}

long weyl_count(const SteklovSpectrum& s, double tau) {
    // eigenvalues within 1e-9 relative of tau count as equal to it
    long n = 0;
    for (const auto& [lam, mult] : s.levels)
        if (lam <= tau * (1 + 1e-9)) n += mult;
    return n;
}

double weyl_constant(ModelGeometry g) {
    // |B^1| |S^1| / (2 pi) = 2, |B^2| |S^2| / (2 pi)^2 = 1, |B^3| |S^3| / (2 pi)^3 = 1/3
    switch (g) {
    case ModelGeometry::Disk: return 2.0;
    case ModelGeometry::Ball: return 1.0;
    case ModelGeometry::Ball4: return 1.0 / 3.0;
    }
    return 0.0;
}

std::vector<Rational> harmonic_ball_trace_coefficients(int n, int K) {
    if (n < 2 || K < 1) throw std::invalid_argument("need n >= 2 and K >= 1");
    auto len = static_cast<std::size_t>(K);
    auto mul = [len](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> c(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    // (1 - e^{-t}) / t = sum_i (-1)^i t^i / (i+1)!
    std::vector<Rational> u(len), inv(len, Rational(0)), ex(len);
    for (std::size_t i = 0; i < len; ++i) {
        u[i] = ratio(i % 2 ? -1 : 1, factorial(static_cast<int>(i) + 1));
        ex[i] = ratio(i % 2 ? -1 : 1, factorial(static_cast<int>(i)));
    }
    inv[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc -= u[j] * inv[i - j];
        inv[i] = acc;
    }
    std::vector<Rational> out(len, Rational(0));
    out[0] = 1;
    for (int i = 0; i < n - 1; ++i) out = mul(out, inv);
    ex[0] += 1;
    return mul(out, ex);
}

Rational unit_ball_normalization(int n) { return ratio(2, gamma_int(n - 1)); }

} // namespace dtn
