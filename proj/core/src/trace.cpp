#include "dtn/trace.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace dtn {

Rational contour_weight(int q) {
    if (q < 1) throw InvalidPower("resolvent power must be at least 1");
    return ratio(1, factorial(q - 1));
}

Rational moment(int n, int p, const std::vector<int>& m) {
    int total = 0;
    for (int e : m) total += e;
    int N = n - 1 + p + total;
    if (N < 1) throw DivergentMoment("xi-moment diverges: n - 1 + p + |m| = " + std::to_string(N));
    for (int e : m)
        if (e % 2 != 0) return Rational(0);
    Integer num = gamma_int(N);
    for (int e : m) num *= double_factorial(e - 1);
    Integer den = 1;
    for (int i = 1; i <= total / 2; ++i) den *= (n - 3 + 2 * i);
    return ratio(num, den);
}

namespace {

struct Rule {
    std::vector<double> x, w;
};

// Golub-Welsch on the Jacobi matrix with diagonal a and off-diagonal b.
Rule golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0) {
    int N = static_cast<int>(a.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) J(i, i) = a[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < N; ++i) J(i, i + 1) = J(i + 1, i) = b[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule r;
    for (int i = 0; i < N; ++i) {
        r.x.push_back(es.eigenvalues()(i));
        double v = es.eigenvectors()(0, i);
        r.w.push_back(mu0 * v * v);
    }
    return r;
}

Rule gauss_legendre(int N, double lo, double hi) {
    std::vector<double> a(static_cast<std::size_t>(N), 0.0), b;
    for (int k = 1; k < N; ++k) b.push_back(k / std::sqrt(4.0 * k * k - 1.0));
    Rule r = golub_welsch(a, b, 2.0);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        r.x[i] = lo + (hi - lo) * (r.x[i] + 1.0) / 2.0;
        r.w[i] *= (hi - lo) / 2.0;
    }
    return r;
}

Rule gauss_laguerre(int N) {
    std::vector<double> a, b;
    for (int k = 0; k < N; ++k) a.push_back(2.0 * k + 1.0);
    for (int k = 1; k < N; ++k) b.push_back(k);
    return golub_welsch(a, b, 1.0);
}

// Rules are reused across calls; the moment grid evaluates thousands of them.
const Rule& cached_rule(char family, int N) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, Rule> cache;
    std::lock_guard lock(mu);
    auto key = std::pair(family, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, family == 'L' ? gauss_laguerre(N) : gauss_legendre(N, 0.0, std::numbers::pi)).first;
    return it->second;
}

double sphere_area(int d) {
    // area of the unit sphere in R^d
    return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

} // namespace

double moment_quadrature(int n, int p, const std::vector<int>& m, int radial_nodes, int angular_nodes) {
    int d = n - 1;
    if (d < 1 || static_cast<int>(m.size()) != d) throw std::invalid_argument("moment_quadrature: bad dimension");
    int total = 0;
    for (int e : m) total += e;
    int N = n - 1 + p + total;
    if (N < 1) throw DivergentMoment("xi-moment diverges");

    const Rule& lag = cached_rule('L', radial_nodes);
    double radial = 0.0;
    for (std::size_t i = 0; i < lag.x.size(); ++i) radial += lag.w[i] * std::pow(lag.x[i], N - 1);

    if (d == 1) {
        double s = 1.0 + ((m[0] % 2 == 0) ? 1.0 : -1.0);
        return radial * s / 2.0;
    }

    const Rule& leg = cached_rule('P', angular_nodes);
    // Product rule: Gauss-Legendre on theta_1..theta_{d-2} in [0, pi] and
    // the trapezoid rule on the last angle. With
    //   xi_i = sin(theta_1)...sin(theta_{i-1}) cos(theta_i)
    // the integrand is a product of one-angle factors, so the tensor sum is
    // evaluated as a product of one-dimensional sums.
    double angular = 1.0;
    int inner = d - 2;
    for (int i = 0; i < inner; ++i) {
        int sin_power = d - 2 - i;
        for (int k = i + 1; k < d; ++k) sin_power += m[static_cast<std::size_t>(k)];
        double sum = 0.0;
        for (std::size_t k = 0; k < leg.x.size(); ++k)
            sum += leg.w[k] * std::pow(std::sin(leg.x[k]), sin_power) * std::pow(std::cos(leg.x[k]), m[static_cast<std::size_t>(i)]);
        angular *= sum;
    }
    int L = 2 * angular_nodes;
    double last = 0.0;
    for (int j = 0; j < L; ++j) {
        double t = 2.0 * std::numbers::pi * j / L;
        last += std::pow(std::cos(t), m[static_cast<std::size_t>(d - 2)]) * std::pow(std::sin(t), m[static_cast<std::size_t>(d - 1)]);
    }
    angular *= last * (2.0 * std::numbers::pi / L);
    return radial * angular / sphere_area(d);
}

} // namespace dtn
