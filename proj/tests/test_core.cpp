#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momentlab/core.hpp"

using namespace momentlab;

namespace {

PolynomialRates flagship_p3() {
    return {3, {Real(1), Real(2), Real(2)}, {Real(0), Real(0), Real(1)}};
}

PolynomialRates default_symmetric(int p) {
    PolynomialRates pr;
    pr.p = p;
    pr.e.assign(p, Real(p) / 2);
    pr.d.assign(p, Real(0));
    return pr;
}

} // namespace

TEST_CASE("rates_to_jacobi on lambda_n = n+1, mu_n = n") {
    set_precision_bits(256);
    BirthDeathRates r;
    for (long n = 0; n <= 10; ++n) {
        r.lambda.push_back(Real(n + 1));
        r.mu.push_back(Real(n));
    }
    JacobiParams j = rates_to_jacobi(r, 9);
    CHECK(j.a[0] == 1);
    CHECK(j.b[0] == 1);
    CHECK(j.a[3] == 7);              // lambda_3 + mu_3 = 4 + 3
    CHECK(j.b[2] == 3); // sqrt(lambda_2 mu_3) = sqrt(9)
}

TEST_CASE("p=3 flagship rates: lambda_0 = 4, mu_1 = 36, b_0 = 12") {
    PolynomialRates pr = flagship_p3();
    CHECK(pr.lambda(0) == 4);
    CHECK(pr.mu(1) == 36);
    JacobiParams j = rates_to_jacobi(pr.tabulate(5), 4);
    CHECK(j.b[0] == 12);
    CHECK(j.a[0] == 4); // mu_0 = 0
}

TEST_CASE("default symmetric family p=4: a_0 = 16") {
    PolynomialRates pr = default_symmetric(4);
    CHECK(pr.lambda(0) == 16); // 2^4
    CHECK(pr.mu(0) == 0);
    JacobiParams j = rates_to_jacobi(pr.tabulate(3), 2);
    CHECK(j.a[0] == 16);
}

TEST_CASE("rate validation rejects bad input") {
    BirthDeathRates r;
    r.lambda = {Real(1), Real(1)};
    r.mu = {Real(1), Real(1)}; // mu_0 != 0
    CHECK_THROWS_AS(r.validate(), InvalidInputError);
    r.mu = {Real(0), Real(-1)};
    CHECK_THROWS_AS(r.validate(), InvalidInputError);
    PolynomialRates bad = flagship_p3();
    bad.d = {Real(1), Real(1), Real(1)}; // product != 0
    CHECK_THROWS_AS(bad.validate(), InvalidInputError);
    bad = flagship_p3();
    bad.e = {Real(2), Real(1), Real(2)}; // not sorted
    CHECK_THROWS_AS(bad.validate(), InvalidInputError);
    bad = flagship_p3();
    bad.p = 2;
    CHECK_THROWS_AS(bad.validate(), InvalidInputError);
}

TEST_CASE("constant chain: a_0 = 1, a_n = 2, b_n = 1 <-> beta_n = 1") {
    JacobiParams j;
    j.a.push_back(Real(1));
    j.b.push_back(Real(1));
    for (int n = 1; n <= 8; ++n) {
        j.a.push_back(Real(2));
        j.b.push_back(Real(1));
    }
    SymmetricJacobi s = jacobi_to_symmetric(j, 8);
    for (const auto& x : s.beta) CHECK(x == 1);

    SymmetricJacobi ones;
    ones.beta.assign(12, Real(1));
    JacobiParams back = symmetric_to_jacobi(ones, 5);
    CHECK(back.a[0] == 1);
    for (int n = 1; n <= 5; ++n) CHECK(back.a[n] == 2);
    for (int n = 0; n <= 5; ++n) CHECK(back.b[n] == 1);
}

TEST_CASE("single-step: beta = (2, 3) gives a_0 = 4, b_0 = 6") {
    SymmetricJacobi s;
    s.beta = {Real(2), Real(3)};
    JacobiParams j = symmetric_to_jacobi(s, 0);
    CHECK(j.a[0] == 4);
    CHECK(j.b[0] == 6);
}

TEST_CASE("round trip symmetric_to_jacobi(jacobi_to_symmetric(j)) at rounding level") {
    set_precision_bits(256);
    PolynomialRates pr = flagship_p3();
    JacobiParams j = rates_to_jacobi(pr.tabulate(40), 39);
    SymmetricJacobi s = jacobi_to_symmetric(j, 39); // beta up to index 78
    JacobiParams back = symmetric_to_jacobi(s, 38);
    Real tol = context_epsilon() * 64; // sqrt / square round trips are not bit-exact
    for (std::size_t n = 0; n < back.a.size(); ++n) {
        CHECK(abs(back.a[n] - j.a[n]) <= tol * j.a[n]);
        CHECK(abs(back.b[n] - j.b[n]) <= tol * j.b[n]);
    }
}

TEST_CASE("polynomial_bn closed form for e_j = p/2, d_j = 0") {
    set_precision_bits(256);
    for (int p : {3, 4, 5}) {
        PolynomialRates pr = default_symmetric(p);
        SymmetricJacobi s = polynomial_bn(pr, 20);
        Real tol = context_epsilon() * 64;
        for (long n = 0; n <= 20; ++n) {
            // b_n = (p/2)^{p/2} (n+1)^{p/2}
            Real want = pow(Real(p) / 2 * (n + 1), Real(p) / 2);
            CHECK(abs(s.beta[n] - want) <= tol * want);
        }
    }
}

TEST_CASE("polynomial_bn: b_0 = 2 on the p=3 flagship and b_{2n} ~ (pn)^{p/2}") {
    set_precision_bits(256);
    PolynomialRates pr = flagship_p3();
    SymmetricJacobi s = polynomial_bn(pr, 3);
    CHECK(s.beta[0] == 2); // sqrt(1*2*2)
    for (long n : {1000L, 10000L}) {
        Real ratio = sqrt(pr.lambda(n)) / pow(Real(3) * n, Real(3) / 2);
        CHECK(abs(ratio - 1) < Real("1e-2"));
    }
}

TEST_CASE("polynomial_bn cross-check: beta_{2n} beta_{2n+1} = b_n of rates_to_jacobi") {
    set_precision_bits(256);
    PolynomialRates pr = default_symmetric(4);
    SymmetricJacobi s = polynomial_bn(pr, 41);
    JacobiParams j = rates_to_jacobi(pr.tabulate(21), 20);
    Real tol = context_epsilon() * 16;
    for (long n = 0; n <= 20; ++n)
        CHECK(abs(s.beta[2 * n] * s.beta[2 * n + 1] - j.b[n]) <= tol * j.b[n]);
}

TEST_CASE("composed transforms agree: polynomial_bn vs rates route") {
    set_precision_bits(256);
    for (auto pr : {flagship_p3(), default_symmetric(4)}) {
        JacobiParams via_rates = rates_to_jacobi(pr.tabulate(16), 15);
        JacobiParams via_bn = symmetric_to_jacobi(polynomial_bn(pr, 31), 15);
        Real tol = context_epsilon() * 64;
        for (std::size_t n = 0; n < via_rates.a.size(); ++n) {
            CHECK(abs(via_rates.a[n] - via_bn.a[n]) <= tol * via_rates.a[n]);
            CHECK(abs(via_rates.b[n] - via_bn.b[n]) <= tol * via_rates.b[n]);
        }
    }
}

TEST_CASE("indeterminacy_check verdicts") {
    PolynomialRates pr = flagship_p3();
    IndeterminacyResult r = indeterminacy_check(pr);
    CHECK(r.ratio == Real(4) / 3);
    CHECK(r.verdict == Indeterminacy::indeterminate);

    for (int p : {3, 4, 5, 6}) {
        IndeterminacyResult rs = indeterminacy_check(default_symmetric(p));
        CHECK(rs.ratio == Real(p) / 2);
        CHECK(rs.verdict == Indeterminacy::indeterminate);
    }

    PolynomialRates boundary{3, {Real(1), Real(1), Real(1)}, {Real(0), Real(0), Real(0)}};
    IndeterminacyResult rb = indeterminacy_check(boundary);
    CHECK(rb.ratio == 1);
    CHECK(rb.verdict == Indeterminacy::boundary);

    // E = 2, D = 0: ratio 1/2 < 1
    PolynomialRates det{4, {Real(1) / 2, Real(1) / 2, Real(1) / 2, Real(1) / 2},
                           {Real(0), Real(0), Real(0), Real(0)}};
    CHECK(indeterminacy_check(det).verdict == Indeterminacy::determinate);
}

TEST_CASE("indeterminacy ratio depends only on the sums E and D") {
    // permuting e or d leaves (E - D)/p unchanged; compare two orderings'
    // sums directly since stored sequences are kept sorted
    PolynomialRates pr = flagship_p3();
    Real ratio = (pr.E() - pr.D()) / pr.p;
    std::vector<Real> e_shuffled = {Real(2), Real(1), Real(2)};
    std::vector<Real> d_shuffled = {Real(1), Real(0), Real(0)};
    Real E = 0, D = 0;
    for (const auto& x : e_shuffled) E += x;
    for (const auto& x : d_shuffled) D += x;
    CHECK((E - D) / pr.p == ratio);
    CHECK(indeterminacy_check(pr).ratio == ratio);
}

TEST_CASE("scale_jacobi and scale_symmetric") {
    JacobiParams j;
    j.a = {Real(1), Real(2)};
    j.b = {Real(1), Real(1)};
    JacobiParams same = scale_jacobi(j, Real(1));
    CHECK(same.a == j.a);
    CHECK(same.b == j.b);
    JacobiParams doubled = scale_jacobi(j, Real(2));
    CHECK(doubled.a[1] == 4);
    CHECK(doubled.b[0] == 2);
    CHECK_THROWS_AS(scale_jacobi(j, Real(0)), InvalidInputError);
    CHECK_THROWS_AS(scale_jacobi(j, Real(-1)), InvalidInputError);

    SymmetricJacobi s;
    s.beta = {Real(2), Real(3)};
    SymmetricJacobi sc = scale_symmetric(s, Real(3));
    CHECK(sc.beta[0] == 6);
    CHECK(sc.beta[1] == 9);
}

TEST_CASE("jacobi_to_symmetric refuses a non-Stieltjes chain") {
    JacobiParams j;
    j.a = {Real(1), Real("0.5")}; // a_1 < b_0^2 / a_0 breaks the split
    j.b = {Real(1), Real(1)};
    CHECK_THROWS_AS(jacobi_to_symmetric(j, 1), NumericError);
}
