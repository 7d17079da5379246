#ifndef MOMENTLAB_GROWTH_HPP
#define MOMENTLAB_GROWTH_HPP

#include "momentlab/precision.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace momentlab {

// Power series sum c z^e with strictly increasing exponents.
struct CoefficientSeries {
    std::string name;
    std::vector<std::pair<long, Real>> terms;
    std::map<std::string, std::string> meta;

    void validate() const;
};

struct GrowthEstimate {
    Real rho_hat = 0; // regression value
    Real tau_hat = 0; // extrapolated value
    Real rho_raw = 0; // tail-sup of the raw order ratio
    Real tau_raw = 0; // tail-sup of the raw type terms
    std::vector<std::pair<long, Real>> rho_diag; // per-exponent raw ratios
    std::vector<std::pair<long, Real>> tau_diag; // per-exponent t_m values
    long window_from = 0, window_to = 0;
};

// Order from coefficients: raw ratio -m log m / log|c_m| (tail-sup) and a
// regression of log(1/|c_m|) against {m log m, m, log m, 1}; rho_hat is
// 1/(leading regression coefficient). Needs >= 20 nonzero terms.
GrowthEstimate order_estimate(const CoefficientSeries& s, double window_fraction = 0.5);

// Type at given order: t_m = m |c_m|^{rho/m} / (e rho), affine-extrapolated
// against 1/m over the fitting window.
GrowthEstimate type_estimate(const CoefficientSeries& s, const Real& rho,
                             double window_fraction = 0.5);

// sum |c_m| r^m (equals M_f(r) for nonnegative coefficients).
struct MaxModulusResult {
    Real value;
    Real tail_ratio; // magnitude of the last term relative to the sum
};
MaxModulusResult max_modulus(const CoefficientSeries& s, const Real& r);

// log|f(r e^{i theta})| / r^rho at the largest cancellation-stable radius.
// Exploratory output only.
struct IndicatorPoint {
    Real theta;
    Real value;
    Real r_used;
    bool stable;
};
std::vector<IndicatorPoint> indicator_estimate(const CoefficientSeries& s, const Real& rho,
                                               const std::vector<Real>& theta_grid,
                                               const std::vector<Real>& r_list);

// E(b_n) = inf{alpha : sum b_n^-alpha converges} estimated as the inverse
// log-log slope of b_n; flags slow/oscillating slopes.
struct ConvergenceExponent {
    Real value;
    Real slope;
    Real slope_residual;
    bool low_confidence = false;
};
ConvergenceExponent exponent_of_convergence(const std::vector<Real>& b);

// Type pi/sin(pi rho) of the canonical product prod (1 + z/n^{1/rho}), 0 < rho < 1.
Real canonical_type_reference(const Real& rho);

// Interchange format: {"name":..., "terms":[[exp,"coeff"],...], "meta":{...}}.
std::string series_to_json(const CoefficientSeries& s);
CoefficientSeries series_from_json(const std::string& text);
std::string estimate_to_json(const GrowthEstimate& g);

} // namespace momentlab

#endif
