#include "momentlab/gammafn.hpp"

namespace momentlab {

Real gamma_fn(const Real& x) {
    if (x <= 0 && x == floor(x)) throw NumericError("gamma_fn: pole at nonpositive integer");
    Real out;
    mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

Real log_gamma(const Real& x) {
    if (x <= 0) throw NumericError("log_gamma requires x > 0");
    Real out;
    mpfr_lngamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

Real beta_fn(const Real& a, const Real& b) {
    if (a > 0 && b > 0) return exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

Real pi_const() {
    Real out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
}

} // namespace momentlab
