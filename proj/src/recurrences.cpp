#include "momentlab/recurrences.hpp"
#include "momentlab/gammafn.hpp"

namespace momentlab {

ZeroSequences zero_values_symmetric(const SymmetricJacobi& s, long n_max) {
    s.validate();
    if (n_max < 1) throw InvalidInputError("zero_values_symmetric: n_max >= 1 required");
    if (s.beta.size() < static_cast<std::size_t>(2 * n_max))
        throw InvalidInputError("zero_values_symmetric: need beta tabulated to index 2 n_max - 1");

    ZeroSequences z;
    z.v.reserve(n_max);
    z.u.reserve(n_max);
    // v_n = prod_{k<=n} (b_{2k-2}/b_{2k-1})^2,  u_n = b_0^{-2} prod_{k<n} (b_{2k-1}/b_{2k})^2.
    Real vprod = 1, uprod = 1 / (s.beta[0] * s.beta[0]);
    for (long n = 1; n <= n_max; ++n) {
        Real rv = s.beta[2 * n - 2] / s.beta[2 * n - 1];
        vprod *= rv * rv;
        z.v.push_back(vprod);
        z.u.push_back(uprod);
        if (n < n_max) {
            Real ru = s.beta[2 * n - 1] / s.beta[2 * n];
            uprod *= ru * ru;
        }
        if (vprod == 0 || uprod == 0 || !isfinite(vprod) || !isfinite(uprod))
            throw NumericError("zero_values_symmetric: product left the representable range; "
                               "raise the precision context");
    }
    return z;
}

Real delta_n(const Real& x, long n) {
    if (x <= -1) throw NumericError("delta_n: x > -1 required");
    if (n < 1) throw InvalidInputError("delta_n: n >= 1 required");
    // prod_{k<=n} (1 + x/k) * Gamma(x+1) / n^x, then n(ratio - 1).
    Real prod = 1;
    for (long k = 1; k <= n; ++k) prod *= 1 + x / k;
    Real ratio = prod * gamma_fn(x + 1) * exp(-x * log(Real(n)));
    return n * (ratio - 1);
}

AsymptoticConstants asymptotic_constants(const PolynomialRates& pr) {
    pr.validate();
    AsymptoticConstants c;
    Real c1 = 1;
    for (int j = 0; j < pr.p; ++j)
        c1 *= gamma_fn(1 + pr.d[j] / pr.p) / gamma_fn(pr.e[j] / pr.p);
    c.c1 = c1;
    c.c2 = pow(Real(pr.p), -pr.p) / c1;
    Real ed = (pr.E() - pr.D()) / pr.p;
    c.alpha = 1 / ed;           // alpha = p/(E-D)
    c.beta = 1 / (pr.p - ed);   // beta = (p - (E-D)/p)^{-1}
    return c;
}

ResidualReport residual_check(const ZeroSequences& z, const PolynomialRates& pr, long n_max) {
    if (n_max < 1 || n_max > z.n_max() - 1)
        throw InvalidInputError("residual_check: n_max out of the computed range");
    AsymptoticConstants c = asymptotic_constants(pr);
    ResidualReport rep{0, 0};
    for (long n = 1; n <= n_max; ++n) {
        Real nr(n);
        Real tau = z.v[n - 1] / (c.c1 * pow(nr, -1 / c.beta)) - 1;
        Real rho = z.u[n] / (c.c2 * pow(nr, -1 / c.alpha)) - 1; // u_{n+1} pairs with n^{-1/alpha}
        rep.max_n_tau = std::max(rep.max_n_tau, nr * abs(tau));
        rep.max_n_rho = std::max(rep.max_n_rho, nr * abs(rho));
    }
    return rep;
}

ZeroSequences zero_sequences_for(const PolynomialRates& pr, long n_max) {
    SymmetricJacobi s = polynomial_bn(pr, 2 * n_max);
    ZeroSequences z = zero_values_symmetric(s, n_max);
    AsymptoticConstants c = asymptotic_constants(pr);
    z.c1 = c.c1;
    z.c2 = c.c2;
    z.alpha = c.alpha;
    z.beta = c.beta;
    return z;
}

} // namespace momentlab
