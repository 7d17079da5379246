#include "momentlab/core.hpp"

namespace momentlab {

void BirthDeathRates::validate() const {
    if (lambda.empty() || mu.size() != lambda.size())
        throw InvalidInputError("rates: lambda and mu must be nonempty and of equal length");
    if (mu[0] != 0) throw InvalidInputError("rates: mu_0 must be 0");
    for (std::size_t n = 0; n < lambda.size(); ++n) {
        if (lambda[n] <= 0) throw InvalidInputError("rates: lambda_n must be positive");
        if (n >= 1 && mu[n] <= 0) throw InvalidInputError("rates: mu_n must be positive for n >= 1");
    }
}

void PolynomialRates::validate() const {
    if (p < 3) throw InvalidInputError("polynomial rates: p >= 3 required");
    if (static_cast<int>(e.size()) != p || static_cast<int>(d.size()) != p)
        throw InvalidInputError("polynomial rates: need p values e_j and p values d_j");
    if (e[0] <= 0) throw InvalidInputError("polynomial rates: e_1 > 0 required");
    if (d[0] <= -p) throw InvalidInputError("polynomial rates: d_1 > -p required");
    for (int j = 1; j < p; ++j) {
        if (e[j] < e[j - 1] || d[j] < d[j - 1])
            throw InvalidInputError("polynomial rates: e and d must be nondecreasing");
    }
    Real prod = 1;
    for (const auto& dj : d) prod *= dj;
    if (prod != 0) throw InvalidInputError("polynomial rates: d_1...d_p = 0 required (mu_0 = 0)");
}

Real PolynomialRates::E() const {
    Real s = 0;
    for (const auto& x : e) s += x;
    return s;
}

Real PolynomialRates::D() const {
    Real s = 0;
    for (const auto& x : d) s += x;
    return s;
}

Real PolynomialRates::lambda(long n) const {
    Real prod = 1;
    for (const auto& ej : e) prod *= Real(p) * n + ej;
    return prod;
}

Real PolynomialRates::mu(long n) const {
    Real prod = 1;
    for (const auto& dj : d) prod *= Real(p) * n + dj;
    return prod;
}

BirthDeathRates PolynomialRates::tabulate(long n_max) const {
    validate();
    BirthDeathRates r;
    r.lambda.reserve(n_max + 1);
    r.mu.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        r.lambda.push_back(lambda(n));
        r.mu.push_back(mu(n));
    }
    return r;
}

void JacobiParams::validate(bool stieltjes) const {
    if (a.empty() || b.size() != a.size())
        throw InvalidInputError("jacobi: a and b must be nonempty and of equal length");
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (b[n] <= 0) throw InvalidInputError("jacobi: b_n must be positive");
        if (stieltjes && a[n] <= 0)
            throw InvalidInputError("jacobi: a_n must be positive for a Stieltjes problem");
    }
}

void SymmetricJacobi::validate() const {
    if (beta.empty()) throw InvalidInputError("symmetric: beta must be nonempty");
    for (const auto& x : beta)
        if (x <= 0) throw InvalidInputError("symmetric: beta_n must be positive");
}

JacobiParams rates_to_jacobi(const BirthDeathRates& r, long n_max) {
    r.validate();
    if (n_max < 0 || static_cast<std::size_t>(n_max) + 2 > r.lambda.size())
        throw InvalidInputError("rates_to_jacobi: need rates tabulated to n_max + 1");
    JacobiParams j;
    j.a.reserve(n_max + 1);
    j.b.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        j.a.push_back(r.lambda[n] + r.mu[n]);
        j.b.push_back(sqrt(r.lambda[n] * r.mu[n + 1]));
    }
    return j;
}

SymmetricJacobi jacobi_to_symmetric(const JacobiParams& j, long n_max) {
    j.validate(true);
    if (static_cast<std::size_t>(n_max) >= j.a.size())
        throw InvalidInputError("jacobi_to_symmetric: need parameters tabulated to n_max");
    SymmetricJacobi s;
    s.beta.reserve(2 * n_max + 1);
    s.beta.push_back(sqrt(j.a[0]));
    for (long n = 1; n <= n_max; ++n) {
        Real odd = j.b[n - 1] / s.beta.back(); // beta_{2n-1}
        Real even_sq = j.a[n] - odd * odd;     // beta_{2n}^2
        if (even_sq <= 0)
            throw NumericError("jacobi_to_symmetric: chain-sequence condition failed; not a Stieltjes problem");
        s.beta.push_back(odd);
        s.beta.push_back(sqrt(even_sq));
    }
    return s;
}

JacobiParams symmetric_to_jacobi(const SymmetricJacobi& s, long n_max) {
    s.validate();
    if (s.beta.size() < static_cast<std::size_t>(2 * n_max + 2))
        throw InvalidInputError("symmetric_to_jacobi: need beta tabulated to 2 n_max + 1");
    JacobiParams j;
    j.a.reserve(n_max + 1);
    j.b.reserve(n_max + 1);
    j.a.push_back(s.beta[0] * s.beta[0]);
    j.b.push_back(s.beta[0] * s.beta[1]);
    for (long n = 1; n <= n_max; ++n) {
        j.a.push_back(s.beta[2 * n] * s.beta[2 * n] + s.beta[2 * n - 1] * s.beta[2 * n - 1]);
        j.b.push_back(s.beta[2 * n] * s.beta[2 * n + 1]);
    }
    return j;
}

SymmetricJacobi polynomial_bn(const PolynomialRates& pr, long n_max) {
    pr.validate();
    SymmetricJacobi s;
    s.beta.reserve(n_max + 1);
    for (long i = 0; i <= n_max; ++i) {
        // b_{2n} = sqrt(lambda_n), b_{2n+1} = sqrt(mu_{n+1})
        s.beta.push_back(i % 2 == 0 ? sqrt(pr.lambda(i / 2)) : sqrt(pr.mu(i / 2 + 1)));
    }
    return s;
}

IndeterminacyResult indeterminacy_check(const PolynomialRates& pr) {
    pr.validate();
    IndeterminacyResult res;
    res.ratio = (pr.E() - pr.D()) / pr.p;
    if (res.ratio == 1 || res.ratio == pr.p - 1)
        res.verdict = Indeterminacy::boundary;
    else if (res.ratio > 1 && res.ratio < pr.p - 1)
        res.verdict = Indeterminacy::indeterminate;
    else
        res.verdict = Indeterminacy::determinate;
    return res;
}

JacobiParams scale_jacobi(const JacobiParams& j, const Real& c) {
    if (c <= 0) throw InvalidInputError("scale_jacobi: scale must be positive");
    JacobiParams out = j;
    for (auto& x : out.a) x *= c;
    for (auto& x : out.b) x *= c;
    return out;
}

SymmetricJacobi scale_symmetric(const SymmetricJacobi& s, const Real& c) {
    if (c <= 0) throw InvalidInputError("scale_symmetric: scale must be positive");
    SymmetricJacobi out = s;
    for (auto& x : out.beta) x *= c;
    return out;
}

} // namespace momentlab
