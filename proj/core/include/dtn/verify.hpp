#pragma once

#include "dtn/reference.hpp"
#include "dtn/steklov.hpp"
#include "dtn/trace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dtn {

// One comparison. `scenario`, `n` and `k` locate it; `detail` carries the
// discrepancy (or a short note when it passes).
struct CheckRecord {
    std::string check;
    std::string scenario;
    int n = 0;
    int k = -1;
    bool pass = false;
    std::string detail;
};

struct CheckSuite {
    std::string name;
    std::vector<CheckRecord> records;

    bool pass() const;
    std::size_t failures() const;
    const CheckRecord* first_failure() const;
    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void append(const CheckSuite& o);
};

std::string suite_to_json(const std::vector<CheckSuite>& suites);
std::string suite_to_text(const CheckSuite& suite, bool failures_only);

// Engine coefficient k on the scenario, with the parametrix built to depth k.
AtomPoly engine_ahat(const Scenario& scenario, int n, int k);

struct MatrixConfig {
    std::vector<int> dims;
    std::vector<std::uint64_t> seeds;
    int kmax = 2;
    // Compare only the top coefficient k = min(kmax, n - 1).
    bool top_only = false;
    bool explicit_forms = true;
    bool phi_v_split = false;
    // EuclideanBall and symbolic space-form runs next to the random gauges.
    bool models = false;
    LaplaceReading reading = LaplaceReading::LaplaceBeltrami;
    // 0: exact polynomial identity. Otherwise Schwartz-Zippel with this many
    // random points drawn from `trial_seed`.
    int trials = 0;
    std::uint64_t trial_seed = 0;
};

struct MatrixResult {
    CheckSuite coefficients;   // engine vs the closed form A_k on RandomGauge
    CheckSuite factorization;  // residual of the factorization
    CheckSuite explicit_forms; // recursion vs written-out s_{-2..-4}
    CheckSuite phi_v;          // phi,V part vs A_k - TildeA_k
    CheckSuite models;         // ball and space-form runs vs A_k and B_k
    CheckSuite harmonic;       // EuclideanBall engine vs the exact ball spectrum
};

MatrixResult run_matrix(const MatrixConfig& config);

// a_0 = Gamma(n - 1) on flat, random, ball and space-form scenarios.
CheckSuite check_leading(const std::vector<int>& dims);

// Gauge constraints, normal second derivative and Gauss identities, Riemann symmetries
// and both Riemann routes on RandomGauge; space-form relations and the
// A_k/B_k agreement on the symbolic space form.
CheckSuite check_geometry(const std::vector<int>& dims, const std::vector<std::uint64_t>& seeds);

// Closed-form moments against quadrature, for |p| <= max_p and
// |m| <= max_degree. Odd moments are compared in absolute terms scaled by
// Gamma(n - 1 + p + |m|).
CheckSuite check_moments(const std::vector<int>& dims, int max_p, int max_degree, double rel_tol);

struct NumericReport {
    RadialProblem problem;
    int cutoff = 0;
    FitOptions options;
    SteklovSpectrum spectrum;
    std::vector<double> t;
    std::vector<double> trace;
    FitResult fit;
    std::vector<Rational> reference;  // closed forms
    std::vector<Rational> engine;     // symbolic engine on the model jets
    double max_tail = 0;
    double weyl_ratio = 0;
    double weyl_constant = 0;
    // Harmonic problems only: max |lambda_m - m| over modes <= 60.
    double harmonic_error = -1;
    bool monotone = true;
    double seconds = 0;
};

// cutoff = 0 picks the smallest cutoff meeting the tail bound at t_min
// (at least 60, so the harmonic check has its modes).
NumericReport run_numeric(const RadialProblem& problem, const FitOptions& options, int K, int cutoff = 0);

std::string numeric_to_json(const NumericReport& r);

} // namespace dtn
