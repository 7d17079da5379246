#include "momentlab/valent.hpp"
#include "momentlab/gammafn.hpp"
#include "momentlab/multizeta.hpp"
#include "momentlab/nevanlinna.hpp"
#include "momentlab/recurrences.hpp"
#include "momentlab/zeta.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>

namespace momentlab {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const std::exception& ex) {
        throw NumericError(std::string("full_report[") + name + "]: " + ex.what());
    }
}

CoefficientSeries results_to_series(std::string name, const std::vector<SumResult>& res,
                                    long first_exponent) {
    CoefficientSeries s;
    s.name = std::move(name);
    Real worst_stability = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
        s.terms.push_back({first_exponent + static_cast<long>(i), res[i].value});
        worst_stability = std::max(worst_stability, res[i].stability);
    }
    if (!res.empty()) {
        s.meta["K"] = std::to_string(res.back().K_used);
        s.meta["max_stability"] = to_decimal_string(worst_stability);
    }
    return s;
}

} // namespace

CoefficientSeries gp_series(const Real& p, int n_max, long K) {
    if (n_max < 1) throw InvalidInputError("gp_series: n_max >= 1 required");
    return results_to_series("G_p", gamma_n(p, n_max, K), 1);
}

CoefficientSeries zp_series(const Real& p, int n_max, long K) {
    if (n_max < 1) throw InvalidInputError("zp_series: n_max >= 1 required");
    CoefficientSeries s;
    s.name = "Z_p";
    s.terms.push_back({1, riemann_zeta(p)});
    if (n_max >= 2) {
        CoefficientSeries rest = results_to_series("", zeta_n(p, n_max, K), 2);
        for (auto& t : rest.terms) s.terms.push_back(std::move(t));
        s.meta = std::move(rest.meta);
    }
    return s;
}

TypeBounds type_bounds(const Real& p) {
    if (p <= 2) throw InvalidInputError("type_bounds: p > 2 required");
    Real angle = pi_const() / p;
    Real low = pi_const() / (p * sin(angle));
    return {low, low / cos(angle)};
}

Real conjectured_type(const Real& p) {
    if (p <= 2) throw InvalidInputError("conjectured_type: p > 2 required");
    return gamma_fn(1 / p) * gamma_fn(1 - 2 / p) / (p * gamma_fn(1 - 1 / p));
}

Real tc_estimate(const Real& c, int n_max, long K, bool from_zeta) {
    if (c <= 1) throw InvalidInputError("tc_estimate: c > 1 required");
    CoefficientSeries s = from_zeta ? zp_series(2 * c, n_max, K) : gp_series(2 * c, n_max, K);
    // T_c is the type of sum gamma_n(2c) z^{2n}, order 1/c: double the exponents
    for (auto& t : s.terms) t.first *= 2;
    return type_estimate(s, 1 / c).tau_hat;
}

Real tc_conjecture(const Real& c) {
    if (c <= 1) throw InvalidInputError("tc_conjecture: c > 1 required");
    return beta_fn(1 / (2 * c), 1 - 1 / c);
}

LogConcavityReport log_concavity_report(const PolynomialRates& pr, long n_max) {
    if (n_max < 3) throw InvalidInputError("log_concavity_report: n_max >= 3 required");
    SymmetricJacobi s = polynomial_bn(pr, n_max);
    Real tol = 1;
    mpfr_div_2ui(tol.backend().data(), tol.backend().data(), precision_bits() / 2, MPFR_RNDN);

    LogConcavityReport rep;
    rep.from = 1;
    rep.to = n_max - 1;
    bool any_pos = false, any_neg = false, strictly_alternating = true;
    int prev_sign = 0;
    for (long n = 1; n + 1 <= n_max; ++n) {
        Real d2 = log(s.beta[n + 1]) + log(s.beta[n - 1]) - 2 * log(s.beta[n]);
        int sign = abs(d2) <= tol ? 0 : (d2 > 0 ? 1 : -1);
        rep.signs.push_back(sign);
        if (sign > 0) any_pos = true;
        if (sign < 0) any_neg = true;
        if (sign == 0 || sign == prev_sign) strictly_alternating = false;
        prev_sign = sign;
    }
    if (!any_pos && !any_neg)
        rep.verdict = LogConcavity::degenerate;
    else if (!any_pos)
        rep.verdict = LogConcavity::log_concave;
    else if (strictly_alternating)
        rep.verdict = LogConcavity::alternating;
    else
        rep.verdict = LogConcavity::irregular;
    return rep;
}

ValentReport full_report(const PolynomialRates& pr, const ValentBudget& budget) {
    ValentReport rep;
    rep.p = pr.p;

    IndeterminacyResult ind = stage("indeterminacy", [&] { return indeterminacy_check(pr); });
    rep.ratio = ind.ratio;
    rep.verdict = ind.verdict;
    if (ind.verdict != Indeterminacy::indeterminate)
        throw NumericError("full_report[indeterminacy]: problem is not indeterminate "
                           "(ratio " + to_decimal_string(ind.ratio) + ")");

    ZeroSequences z = stage("zeros", [&] { return zero_sequences_for(pr, budget.K); });
    CoefficientSeries m22 =
        stage("sigma", [&] { return m22_coefficients(z, budget.n_coeffs, budget.K); });

    // sigma_n that still moved by order one at the last K-doubling are
    // truncation noise, not signal; feeding them to the estimators biases the
    // regression. Drop them pointwise (the stability profile is not monotone).
    CoefficientSeries trusted;
    trusted.name = m22.name;
    trusted.meta = m22.meta;
    const Real stab_cap(2);
    for (const auto& t : m22.terms) {
        if (t.first > 0) {
            auto it = m22.meta.find("stability_n" + std::to_string(t.first / 2));
            if (it != m22.meta.end() && real_from_string(it->second) > stab_cap) continue;
        }
        trusted.terms.push_back(t);
    }
    rep.diagnostics["n_used"] = std::to_string(trusted.terms.size() - 1);

    GrowthEstimate ord = stage("order", [&] { return order_estimate(trusted); });
    Real rho_s = ord.rho_hat;        // symmetric order, target 2/p
    rep.rho_hat = rho_s / 2;         // Stieltjes order
    rep.rho_target = Real(1) / pr.p;

    // Type taken at the proved symmetric order 2/p so that instances with the
    // same p share the exponent and their estimates stay comparable.
    Real rho_s_exact = Real(2) / pr.p;
    GrowthEstimate typ = stage("type", [&] { return type_estimate(trusted, rho_s_exact); });
    rep.tau_hat = typ.tau_hat;

    TypeBounds tb = type_bounds(Real(pr.p));
    rep.bracket_low = tb.low;
    rep.bracket_high = tb.high;
    rep.conjectured_T = conjectured_type(Real(pr.p));
    rep.conjecture_gap = rep.tau_hat - rep.conjectured_T;

    rep.order_ok = abs(rep.rho_hat - rep.rho_target) <= budget.order_tol * rep.rho_target;
    rep.type_ok = rep.tau_hat >= rep.bracket_low * (1 - budget.type_tol) &&
                  rep.tau_hat <= rep.bracket_high * (1 + budget.type_tol);

    // Cross-route diagnostic: the type through G_p scales down by 1/p.
    int gp_terms = std::min(budget.n_coeffs, 80);
    Real tau_gp = stage("gp_route", [&] {
        CoefficientSeries gp = gp_series(Real(pr.p), gp_terms, budget.K);
        return type_estimate(gp, Real(1) / pr.p).tau_hat / pr.p;
    });

    rep.diagnostics["rho_symmetric"] = to_decimal_string(rho_s);
    rep.diagnostics["rho_raw"] = to_decimal_string(ord.rho_raw);
    rep.diagnostics["tau_raw"] = to_decimal_string(typ.tau_raw);
    rep.diagnostics["tau_gp_route"] = to_decimal_string(tau_gp);
    rep.diagnostics["c1"] = to_decimal_string(z.c1);
    rep.diagnostics["c2"] = to_decimal_string(z.c2);
    rep.diagnostics["alpha"] = to_decimal_string(z.alpha);
    rep.diagnostics["beta"] = to_decimal_string(z.beta);
    rep.diagnostics["n_coeffs"] = std::to_string(budget.n_coeffs);
    rep.diagnostics["K"] = std::to_string(budget.K);
    if (auto it = m22.meta.find("max_stability"); it != m22.meta.end())
        rep.diagnostics["sigma_stability"] = it->second;
    return rep;
}

std::string report_to_json(const ValentReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["ratio"] = to_decimal_string(r.ratio);
    j["verdict"] = r.verdict == Indeterminacy::indeterminate ? "indeterminate"
                 : r.verdict == Indeterminacy::boundary      ? "boundary"
                                                             : "determinate";
    j["rho_hat"] = to_decimal_string(r.rho_hat);
    j["rho_target"] = to_decimal_string(r.rho_target);
    j["tau_hat"] = to_decimal_string(r.tau_hat);
    j["bracket_low"] = to_decimal_string(r.bracket_low);
    j["bracket_high"] = to_decimal_string(r.bracket_high);
    j["conjectured_T"] = to_decimal_string(r.conjectured_T);
    j["conjecture_gap"] = to_decimal_string(r.conjecture_gap);
    j["order_ok"] = r.order_ok;
    j["type_ok"] = r.type_ok;
    j["diagnostics"] = r.diagnostics;
    return j.dump(2);
}

std::string report_to_text(const ValentReport& r) {
    auto d6 = [](const Real& x) {
        std::ostringstream os;
        os << x.str(8);
        return os.str();
    };
    std::ostringstream os;
    os << "p = " << r.p << ", (E-D)/p = " << d6(r.ratio) << " ("
       << (r.verdict == Indeterminacy::indeterminate ? "indeterminate"
           : r.verdict == Indeterminacy::boundary    ? "boundary"
                                                     : "determinate")
       << ")\n";
    os << "order:  rho_hat = " << d6(r.rho_hat) << "  (target " << d6(r.rho_target) << ", "
       << (r.order_ok ? "ok" : "FAIL") << ")\n";
    os << "type:   tau_hat = " << d6(r.tau_hat) << "  bracket [" << d6(r.bracket_low) << ", "
       << d6(r.bracket_high) << "] (" << (r.type_ok ? "ok" : "FAIL") << ")\n";
    os << "conjectured T = " << d6(r.conjectured_T) << ", gap = " << d6(r.conjecture_gap)
       << " (reported, not gated)\n";
    for (const auto& [k, v] : r.diagnostics) os << "  " << k << " = " << v << "\n";
    return os.str();
}

} // namespace momentlab
