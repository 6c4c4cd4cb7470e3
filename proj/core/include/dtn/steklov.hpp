#pragma once

#include "dtn/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtn {

// Unit disk, unit 3-ball and unit 4-ball.
enum class ModelGeometry { Disk, Ball, Ball4 };

std::string geometry_name(ModelGeometry g);

// Steklov problem for the weighted operator with radial phi(r) and V(r) on
// the unit disk (n = 2) or the unit n-ball (n = 3, 4). phi and V are
// polynomial coefficient lists in r (index i multiplies r^i).
struct RadialProblem {
    ModelGeometry geometry = ModelGeometry::Disk;
    std::vector<Rational> phi;
    std::vector<Rational> V;

    int dim() const {
        switch (geometry) {
        case ModelGeometry::Disk: return 2;
        case ModelGeometry::Ball: return 3;
        case ModelGeometry::Ball4: return 4;
        }
        return 0;
    }
    // Multiplicity of angular mode m (Fourier index |k| or degree l).
    int multiplicity(int mode) const;
    // c_m in the radial equation: l(l + n - 2).
    double angular_constant(int mode) const;
    void validate() const;
};

class NodalBoundary : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CutoffTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IllConditioned : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Modes up to this index are integrated in linear form, higher modes as a
// Riccati equation for the logarithmic derivative.
inline constexpr int kRiccatiThreshold = 20;

// lambda = u'(1)/u(1) for the regular solution of
// u'' + ((d-1)/r - phi'(r)) u' - c_m/r^2 u + V u = 0.
double mode_eigenvalue(const RadialProblem& problem, int mode);

struct SteklovSpectrum {
    RadialProblem problem;
    std::vector<std::pair<double, int>> levels;  // (lambda, multiplicity), sorted by lambda
    std::vector<double> by_mode;                 // lambda indexed by mode
};

// Modes 0..cutoff, evaluated in parallel over modes.
SteklovSpectrum spectrum(const RadialProblem& problem, int cutoff);

// Smallest cutoff for which the tail of the trace at t_min is expected to
// be below 1e-13 (assuming lambda_m ~ m).
int required_cutoff(const RadialProblem& problem, double t_min);

struct TraceValue {
    double value = 0;
    double tail_bound = 0;
};

// sum mult * exp(-t lambda) over the computed modes plus a bound on the
// omitted tail from the observed lambda_m / m ratio of the last modes.
TraceValue heat_trace(const SteklovSpectrum& s, double t, double max_tail = 1e-12);

struct FitOptions {
    double t_min = 0.02;
    double t_max = 0.3;
    int points = 40;
    // Extra basis functions absorbing the remainder: "log", "t<k>" and
    // "t<k>log" (t^k log t), with "t" and "tlog" for k = 1.
    std::vector<std::string> guard;
    double max_condition = 1e10;
};

FitOptions default_fit_options(int n);
std::vector<double> geometric_grid(double lo, double hi, int points);

struct FitResult {
    std::vector<double> coefficients;  // a_0..a_{K-1}
    std::vector<double> errors;        // standard errors
    std::vector<double> guard_coefficients;
    std::vector<std::string> basis;
    std::vector<double> t;
    double rms_residual = 0;
    double condition = 0;  // of the column-scaled design matrix
};

// Least squares for sum_k a_k t^{k-n+1} + guard terms.
FitResult fit_asymptotics(const std::vector<double>& t, const std::vector<double>& trace, int n, int K,
                          const FitOptions& options);

// (a_0, ..., a_{K-1}) from the closed forms on the model boundary,
// integrated over the boundary sphere.
std::vector<Rational> predict_coefficients(const RadialProblem& problem, int K);
// Same from the symbolic engine on the model's boundary jets.
std::vector<Rational> engine_predictions(const RadialProblem& problem, int K);
// omega_{n-2} Vol(boundary) / (2 pi)^{n-1} = 2 / Gamma(n - 1).
double boundary_normalization(const RadialProblem& problem);

// Harmonic Steklov spectrum of the unit n-ball: eigenvalue l with the
// multiplicity of degree-l spherical harmonics on S^{n-1}. Returns the
// exact coefficients of t^{k-n+1}, k = 0..K-1, in the small-t expansion of
// its trace sum_l dim H_l e^{-lt} = (1 + e^{-t}) / (1 - e^{-t})^{n-1}.
std::vector<Rational> harmonic_ball_trace_coefficients(int n, int K);
// omega_{n-2} Vol(S^{n-1}) / (2 pi)^{n-1} = 2 / Gamma(n - 1).
Rational unit_ball_normalization(int n);

// N(tau) = number of eigenvalues <= tau counted with multiplicity.
long weyl_count(const SteklovSpectrum& s, double tau);
// Vol(B^{n-1}) Vol(boundary) / (2 pi)^{n-1}.
double weyl_constant(ModelGeometry g);

} // namespace dtn
