#ifndef MOMENTLAB_VALENT_HPP
#define MOMENTLAB_VALENT_HPP

#include "momentlab/core.hpp"
#include "momentlab/growth.hpp"

#include <map>
#include <string>
#include <vector>

namespace momentlab {

// G_p(z) = sum gamma_n(p) z^n, exponents 1..n_max. Requires p > 2.
CoefficientSeries gp_series(const Real& p, int n_max, long K);

// Z_p(z) = sum zeta_n(p) z^n with zeta_1(p) = zeta(p). Requires p > 2.
CoefficientSeries zp_series(const Real& p, int n_max, long K);

// pi/(p sin(pi/p)) <= tau <= pi/(p sin(pi/p) cos(pi/p)). Requires p > 2.
struct TypeBounds {
    Real low, high;
};
TypeBounds type_bounds(const Real& p);

// T = (1/p) Gamma(1/p) Gamma(1 - 2/p) / Gamma(1 - 1/p). Requires p > 2.
Real conjectured_type(const Real& p);

// T_c from gamma_n(2c) (or zeta_n(2c)) through the coefficient type
// estimator at rho = 1/c. Requires c > 1.
Real tc_estimate(const Real& c, int n_max, long K, bool from_zeta = false);

// T_c = B(1/(2c), 1 - 1/c).
Real tc_conjecture(const Real& c);

// Sign pattern of log b_{n+1} + log b_{n-1} - 2 log b_n over the beta
// sequence of the polynomial-rate problem.
enum class LogConcavity { log_concave, alternating, degenerate, irregular };

struct LogConcavityReport {
    LogConcavity verdict;
    std::vector<int> signs; // signs[i] for center index i + 1
    long from = 1, to = 0;
};
LogConcavityReport log_concavity_report(const PolynomialRates& pr, long n_max);

struct ValentBudget {
    int n_coeffs = 100;
    long K = 10000;
    Real order_tol = Real("0.05"); // relative on rho_hat vs 1/p
    Real type_tol = Real("0.05");  // bracket widening
};

struct ValentReport {
    int p = 0;
    Real ratio;            // (E - D)/p
    Indeterminacy verdict = Indeterminacy::determinate;
    Real rho_hat;          // Stieltjes order estimate
    Real rho_target;       // 1/p
    Real tau_hat;          // Stieltjes type estimate
    Real bracket_low, bracket_high;
    Real conjectured_T;
    Real conjecture_gap;   // tau_hat - conjectured_T
    bool order_ok = false;
    bool type_ok = false;
    std::map<std::string, std::string> diagnostics;
};

// Full pipeline: rates -> beta_n -> u, v -> m22 series -> rho_hat, tau_hat,
// with bracket and conjecture comparisons. Refuses determinate problems.
ValentReport full_report(const PolynomialRates& pr, const ValentBudget& budget = {});

std::string report_to_json(const ValentReport& r);
std::string report_to_text(const ValentReport& r);

} // namespace momentlab

#endif
