#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momentlab/gammafn.hpp"
#include "momentlab/multizeta.hpp"
#include "momentlab/valent.hpp"
#include "momentlab/zeta.hpp"

using namespace momentlab;

namespace {

PolynomialRates flagship_p3() {
    return {3, {Real(1), Real(2), Real(2)}, {Real(0), Real(0), Real(1)}};
}

Real rel_gap(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

} // namespace

TEST_CASE("type bracket at p = 3 and p = 4") {
    set_precision_bits(256);
    TypeBounds t3 = type_bounds(3);
    // pi/(3 sin(pi/3)) = 2 pi / (3 sqrt 3), high = low / cos(pi/3) = 2 low
    Real pi = pi_const();
    CHECK(rel_gap(t3.low, 2 * pi / (3 * sqrt(Real(3)))) < 1e-70);
    CHECK(rel_gap(t3.high, 2 * t3.low) < 1e-70);
    CHECK(rel_gap(t3.low, Real("1.2091995761561452337")) < 1e-18);

    TypeBounds t4 = type_bounds(4);
    // sin(pi/4) = cos(pi/4) => high = pi/2 exactly
    CHECK(rel_gap(t4.high, pi / 2) < 1e-70);
}

TEST_CASE("both bracket ends tend to 1 as p grows") {
    set_precision_bits(256);
    TypeBounds t = type_bounds(1000);
    CHECK(abs(t.low - 1) < Real("0.001"));
    CHECK(abs(t.high - 1) < Real("0.001"));
    CHECK(t.low < t.high);
}

TEST_CASE("conjectured type closed forms") {
    set_precision_bits(256);
    // p = 3: Gamma(1/3)^2 / (3 Gamma(2/3))
    Real g13 = gamma_fn(Real(1) / 3);
    Real g23 = gamma_fn(Real(2) / 3);
    CHECK(rel_gap(conjectured_type(3), g13 * g13 / (3 * g23)) < 1e-70);
    CHECK(rel_gap(conjectured_type(3), Real("1.7666387502854499")) < 1e-15);
    // p = 4: Gamma(1/4) Gamma(1/2) / (4 Gamma(3/4))
    Real g14 = gamma_fn(Real(1) / 4);
    Real g12 = gamma_fn(Real(1) / 2);
    Real g34 = gamma_fn(Real(3) / 4);
    CHECK(rel_gap(conjectured_type(4), g14 * g12 / (4 * g34)) < 1e-70);
    CHECK(rel_gap(conjectured_type(4), Real("1.3110287771460598")) < 1e-15);
}

TEST_CASE("conjectured type sits strictly inside the bracket, p = 3..40") {
    set_precision_bits(256);
    for (int p = 3; p <= 40; ++p) {
        TypeBounds t = type_bounds(p);
        Real T = conjectured_type(p);
        CHECK(T > t.low);
        CHECK(T < t.high);
    }
}

TEST_CASE("tc_conjecture(2) is B(1/4, 1/2)") {
    set_precision_bits(256);
    Real want = beta_fn(Real(1) / 4, Real(1) / 2);
    CHECK(rel_gap(tc_conjecture(2), want) < 1e-70);
    CHECK(rel_gap(tc_conjecture(2), Real("5.24411510858423962")) < 1e-15);
}

TEST_CASE("gp_series: positive, decreasing, matches gamma_1(4) closed form") {
    set_precision_bits(256);
    CoefficientSeries g = gp_series(4, 6, 50000);
    REQUIRE(g.terms.size() == 6);
    Real prev = 0;
    for (int n = 0; n < 6; ++n) {
        CHECK(g.terms[n].first == n + 1);
        CHECK(g.terms[n].second > 0);
        if (n > 0) CHECK(g.terms[n].second < prev);
        prev = g.terms[n].second;
    }
    Real pi = pi_const();
    Real gamma14_exact = 7 * pi * pi * pi * pi / 360;
    CHECK(rel_gap(g.terms[0].second, gamma14_exact) < 1e-5);
}

TEST_CASE("zp_series is dominated by gp_series coefficientwise") {
    set_precision_bits(256);
    CoefficientSeries g = gp_series(4, 5, 20000);
    CoefficientSeries z = zp_series(4, 5, 20000);
    REQUIRE(z.terms.size() == 5);
    CHECK(z.terms[0].first == 1);
    CHECK(rel_gap(z.terms[0].second, riemann_zeta(Real(4))) < 1e-40);
    for (int n = 1; n < 5; ++n) {
        CHECK(z.terms[n].first == n + 1);
        CHECK(z.terms[n].second > 0);
        CHECK(z.terms[n].second < g.terms[n].second);
    }
}

TEST_CASE("zeta_2 route agrees with a direct double loop") {
    set_precision_bits(256);
    long K = 2000;
    Real p = 4;
    Real direct = 0;
    for (long m = 2; m <= K; ++m) {
        Real inner = 0;
        for (long l = 1; l < m; ++l) inner += (m - l) * pow(Real(l), -p);
        direct += pow(Real(m), -p) * inner;
    }
    CoefficientSeries z = zp_series(p, 2, K);
    CHECK(rel_gap(z.terms[1].second, direct) < 1e-4); // tail correction moves it slightly
}

TEST_CASE("tc_estimate: gamma and zeta routes agree near the conjecture at c = 2") {
    set_precision_bits(256);
    Real via_gamma = tc_estimate(2, 40, 20000);
    Real via_zeta = tc_estimate(2, 40, 20000, true);
    CHECK(rel_gap(via_gamma, via_zeta) < Real("0.05"));
    CHECK(rel_gap(via_gamma, tc_conjecture(2)) < Real("0.05"));
}

TEST_CASE("log-concavity classification of beta_n") {
    set_precision_bits(256);
    SUBCASE("p = 4 symmetric default is log-concave") {
        PolynomialRates pr{4, {Real(1), Real(2), Real(2), Real(3)},
                              {Real(-1), Real(0), Real(0), Real(1)}};
        LogConcavityReport r = log_concavity_report(pr, 200);
        CHECK(r.verdict == LogConcavity::log_concave);
    }
    SUBCASE("p = 3 flagship alternates past a short head") {
        LogConcavityReport r = log_concavity_report(flagship_p3(), 200);
        CHECK(r.verdict != LogConcavity::log_concave);
        REQUIRE(r.signs.size() >= 10);
        for (std::size_t i = 5; i < r.signs.size(); ++i)
            CHECK(r.signs[i] == -r.signs[i - 1]);
    }
}

TEST_CASE("full_report refuses a determinate problem with a stage tag") {
    set_precision_bits(256);
    PolynomialRates pr{4, {Real(1), Real(1), Real(1), Real(1)},
                          {Real(0), Real(0), Real(0), Real(0)}};
    try {
        full_report(pr);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("full_report[") != std::string::npos);
    }
}

TEST_CASE("full_report on the p = 3 flagship passes its own gates") {
    set_precision_bits(256);
    ValentBudget budget;
    budget.n_coeffs = 80;
    budget.K = 8000;
    ValentReport r = full_report(flagship_p3(), budget);
    CHECK(r.p == 3);
    CHECK(rel_gap(r.ratio, Real(4) / 3) < 1e-70);
    CHECK(r.verdict == Indeterminacy::indeterminate);
    CHECK(r.order_ok);
    CHECK(r.type_ok);
    CHECK(rel_gap(r.rho_hat, Real(1) / 3) < Real("0.05"));
    CHECK(r.tau_hat > r.bracket_low * Real("0.95"));
    CHECK(r.tau_hat < r.bracket_high * Real("1.05"));
    CHECK(abs(r.conjecture_gap - (r.tau_hat - r.conjectured_T)) < 1e-60);

    std::string js = report_to_json(r);
    CHECK(js.find("\"rho_hat\"") != std::string::npos);
    std::string txt = report_to_text(r);
    CHECK(txt.find("indeterminate") != std::string::npos);
}

TEST_CASE("input validation") {
    set_precision_bits(256);
    CHECK_THROWS_AS(gp_series(2, 3, 100), NumericError);
    CHECK_THROWS_AS(zp_series(1, 3, 100), NumericError);
    CHECK_THROWS_AS(type_bounds(2), InvalidInputError);
    CHECK_THROWS_AS(conjectured_type(2), InvalidInputError);
    CHECK_THROWS_AS(tc_estimate(1, 10, 100), InvalidInputError);
    CHECK_THROWS_AS(tc_conjecture(1), InvalidInputError);
}
