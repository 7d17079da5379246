#include "momentlab/growth.hpp"
#include "momentlab/gammafn.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace momentlab {

namespace {

// Gaussian elimination with partial pivoting; small systems only.
std::vector<Real> solve_linear(std::vector<std::vector<Real>> A, std::vector<Real> rhs) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (A[col][col] == 0) throw NumericError("singular regression system");
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Real> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Real s = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return x;
}

// Least squares fit y ~ sum coef_k * basis_k via normal equations in Real.
std::vector<Real> least_squares(const std::vector<std::vector<Real>>& basis_rows,
                                const std::vector<Real>& y) {
    const std::size_t k = basis_rows.front().size();
    std::vector<std::vector<Real>> ata(k, std::vector<Real>(k, Real(0)));
    std::vector<Real> aty(k, Real(0));
    for (std::size_t i = 0; i < basis_rows.size(); ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = r; c < k; ++c) ata[r][c] += basis_rows[i][r] * basis_rows[i][c];
            aty[r] += basis_rows[i][r] * y[i];
        }
    }
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < r; ++c) ata[r][c] = ata[c][r];
    return solve_linear(std::move(ata), std::move(aty));
}

std::vector<std::pair<long, Real>> nonzero_terms(const CoefficientSeries& s) {
    std::vector<std::pair<long, Real>> out;
    for (const auto& t : s.terms)
        if (t.second != 0 && t.first >= 1) out.push_back(t);
    return out;
}

} // namespace

void CoefficientSeries::validate() const {
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].first <= terms[i - 1].first)
            throw InvalidInputError("series: exponents must be strictly increasing");
    for (const auto& t : terms)
        if (!isfinite(t.second)) throw InvalidInputError("series: coefficients must be finite");
}

GrowthEstimate order_estimate(const CoefficientSeries& s, double window_fraction) {
    s.validate();
    auto terms = nonzero_terms(s);
    if (terms.size() < 20) throw InvalidInputError("order_estimate: need at least 20 nonzero terms");

    GrowthEstimate g;
    std::size_t from = static_cast<std::size_t>(terms.size() * (1.0 - window_fraction));
    if (from >= terms.size() - 4) from = terms.size() - 4;
    g.window_from = terms[from].first;
    g.window_to = terms.back().first;

    std::vector<std::vector<Real>> rows;
    std::vector<Real> y;
    for (std::size_t i = from; i < terms.size(); ++i) {
        Real m(terms[i].first);
        Real logm = log(m);
        Real neg_logc = -log(abs(terms[i].second));
        rows.push_back({m * logm, m, logm, Real(1)});
        y.push_back(neg_logc);
        Real ratio = m * logm / neg_logc;
        g.rho_diag.push_back({terms[i].first, ratio});
        g.rho_raw = std::max(g.rho_raw, ratio);
    }
    auto coef = least_squares(rows, y);
    if (coef[0] <= 0) throw NumericError("order_estimate: nonpositive leading coefficient");
    g.rho_hat = 1 / coef[0];
    return g;
}

GrowthEstimate type_estimate(const CoefficientSeries& s, const Real& rho,
                             double window_fraction) {
    s.validate();
    if (rho <= 0 || !isfinite(rho)) throw InvalidInputError("type_estimate: 0 < rho < inf required");
    auto terms = nonzero_terms(s);
    if (terms.size() < 20) throw InvalidInputError("type_estimate: need at least 20 nonzero terms");

    GrowthEstimate g;
    g.rho_hat = rho;
    std::size_t from = static_cast<std::size_t>(terms.size() * (1.0 - window_fraction));
    if (from >= terms.size() - 4) from = terms.size() - 4;
    g.window_from = terms[from].first;
    g.window_to = terms.back().first;

    const Real e_rho = exp(Real(1)) * rho;
    std::vector<std::vector<Real>> rows;
    std::vector<Real> y;
    for (std::size_t i = from; i < terms.size(); ++i) {
        Real m(terms[i].first);
        Real t = m * exp(rho / m * log(abs(terms[i].second))) / e_rho;
        rows.push_back({Real(1), 1 / m});
        y.push_back(t);
        g.tau_diag.push_back({terms[i].first, t});
        g.tau_raw = std::max(g.tau_raw, t);
    }
    auto coef = least_squares(rows, y);
    g.tau_hat = coef[0];
    return g;
}

MaxModulusResult max_modulus(const CoefficientSeries& s, const Real& r) {
    s.validate();
    Real sum = 0, last = 0;
    for (const auto& t : s.terms) {
        last = abs(t.second) * pow(r, t.first);
        sum += last;
    }
    MaxModulusResult res;
    res.value = sum;
    res.tail_ratio = sum > 0 ? last / sum : Real(0);
    return res;
}

std::vector<IndicatorPoint> indicator_estimate(const CoefficientSeries& s, const Real& rho,
                                               const std::vector<Real>& theta_grid,
                                               const std::vector<Real>& r_list) {
    s.validate();
    std::vector<IndicatorPoint> out;
    // cancellation guard: the largest term magnitude must not exceed |f| by
    // more than half the working precision
    Real guard = sqrt(1 / context_epsilon());
    for (const auto& theta : theta_grid) {
        IndicatorPoint pt{theta, 0, 0, false};
        for (const auto& r : r_list) {
            Real re = 0, im = 0, max_term = 0;
            for (const auto& t : s.terms) {
                Real mag = t.second * pow(r, t.first);
                Real ang = theta * t.first;
                re += mag * cos(ang);
                im += mag * sin(ang);
                max_term = std::max(max_term, abs(mag));
            }
            Real mod = sqrt(re * re + im * im);
            if (mod <= 0 || max_term > mod * guard) continue; // unstable at this radius
            pt.value = log(mod) / pow(r, rho);
            pt.r_used = r;
            pt.stable = true;
        }
        out.push_back(pt);
    }
    return out;
}

ConvergenceExponent exponent_of_convergence(const std::vector<Real>& b) {
    if (b.size() < 16) throw InvalidInputError("exponent_of_convergence: need at least 16 terms");
    for (const auto& x : b)
        if (x <= 0) throw InvalidInputError("exponent_of_convergence: sequence must be positive");

    // log-log slope over the last half, with a split-window confidence check
    std::size_t from = b.size() / 2;
    auto slope_on = [&](std::size_t lo, std::size_t hi) {
        Real sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            Real x = log(Real(static_cast<long>(i) + 1));
            Real y = log(b[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y; n += 1;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    ConvergenceExponent res;
    res.slope = slope_on(from, b.size());
    if (res.slope <= 0) throw NumericError("exponent_of_convergence: sequence does not grow");
    res.value = 1 / res.slope;

    Real s1 = slope_on(from, from + (b.size() - from) / 2);
    Real s2 = slope_on(from + (b.size() - from) / 2, b.size());
    res.slope_residual = abs(s1 - s2) / res.slope;
    res.low_confidence = res.slope_residual > Real("0.02");
    return res;
}

Real canonical_type_reference(const Real& rho) {
    if (rho <= 0 || rho >= 1)
        throw InvalidInputError("canonical_type_reference: 0 < rho < 1 required");
    return pi_const() / sin(pi_const() * rho);
}

std::string series_to_json(const CoefficientSeries& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : s.terms)
        j["terms"].push_back({t.first, to_decimal_string(t.second)});
    j["meta"] = s.meta;
    return j.dump(2);
}

CoefficientSeries series_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInputError(std::string("series JSON: ") + e.what());
    }
    CoefficientSeries s;
    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
        throw InvalidInputError("series JSON: missing terms");
    s.name = j.value("name", "");
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2)
            throw InvalidInputError("series JSON: each term must be [exponent, \"coeff\"]");
        s.terms.push_back({t[0].get<long>(), real_from_string(t[1].get<std::string>())});
    }
    if (j.contains("meta"))
        for (auto it = j["meta"].begin(); it != j["meta"].end(); ++it)
            s.meta[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                      : it.value().dump();
    s.validate();
    return s;
}

std::string estimate_to_json(const GrowthEstimate& g) {
    nlohmann::json j;
    j["rho_hat"] = to_decimal_string(g.rho_hat);
    j["tau_hat"] = to_decimal_string(g.tau_hat);
    j["rho_raw"] = to_decimal_string(g.rho_raw);
    j["tau_raw"] = to_decimal_string(g.tau_raw);
    j["window"] = {g.window_from, g.window_to};
    auto diag = [](const std::vector<std::pair<long, Real>>& d) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : d) a.push_back({p.first, to_decimal_string(p.second)});
        return a;
    };
    j["rho_diag"] = diag(g.rho_diag);
    j["tau_diag"] = diag(g.tau_diag);
    return j.dump(2);
}

} // namespace momentlab
