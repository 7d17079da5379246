#ifndef MOMENTLAB_RECURRENCES_HPP
#define MOMENTLAB_RECURRENCES_HPP

#include "momentlab/core.hpp"

#include <utility>
#include <vector>

namespace momentlab {

// v_n = P_{2n}^2(0), u_n = Q_{2n-1}^2(0) for n >= 1, with the asymptotic
// constants v_n ~ c1 n^{-1/beta}, u_n ~ c2 n^{-1/alpha} when the problem
// comes from polynomial rates.
struct ZeroSequences {
    std::vector<Real> v; // v[n-1] = v_n
    std::vector<Real> u; // u[n-1] = u_n
    Real c1 = 0, c2 = 0;
    Real alpha = 0, beta = 0;
    Real residual_bound = 0; // empirical K of |tau_n|,|rho_n| <= K/n, when measured

    long n_max() const { return static_cast<long>(v.size()); }
};

// P_n(z), Q_n(z) for 0 <= n <= n_max via the three-term recurrence with
// P_{-1}=0, P_0=1, Q_{-1}=-1, Q_0=0 and b_{-1}:=1.
template <class T>
std::pair<std::vector<T>, std::vector<T>>
eval_polys(const std::vector<Real>& a, const std::vector<Real>& b, const T& z, long n_max) {
    if (n_max < 0 || static_cast<std::size_t>(n_max) >= a.size() || b.size() != a.size())
        throw InvalidInputError("eval_polys: need coefficients tabulated to n_max");
    std::vector<T> P(n_max + 1), Q(n_max + 1);
    T p_prev = T(0), p_cur = T(1);   // P_{-1}, P_0
    T q_prev = T(-1), q_cur = T(0);  // Q_{-1}, Q_0
    Real b_prev = 1;                 // b_{-1}
    P[0] = p_cur;
    Q[0] = q_cur;
    for (long n = 0; n < n_max; ++n) {
        T p_next = (z * p_cur - a[n] * p_cur - b_prev * p_prev) / b[n];
        T q_next = (z * q_cur - a[n] * q_cur - b_prev * q_prev) / b[n];
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        b_prev = b[n];
        P[n + 1] = p_cur;
        Q[n + 1] = q_cur;
    }
    return {std::move(P), std::move(Q)};
}

// Symmetric problem: a_n = 0 identically.
template <class T>
std::pair<std::vector<T>, std::vector<T>>
eval_polys(const SymmetricJacobi& s, const T& z, long n_max) {
    std::vector<Real> zero(s.beta.size(), Real(0));
    return eval_polys(zero, s.beta, z, n_max);
}

// Closed running products P_{2n}(0) = (-1)^n b_0 b_2...b_{2n-2} / (b_1 b_3...b_{2n-1}),
// squared, and the u-side analogue. Needs beta tabulated to index 2 n_max - 1.
ZeroSequences zero_values_symmetric(const SymmetricJacobi& s, long n_max);

// delta_n(x) = n((x+1)...(x+n) Gamma(x+1) / (n! n^x) - 1), x > -1.
Real delta_n(const Real& x, long n);

// c1, c2, alpha, beta of the polynomial-rate problem.
struct AsymptoticConstants {
    Real c1, c2, alpha, beta;
};
AsymptoticConstants asymptotic_constants(const PolynomialRates& pr);

// sup_{n <= n_max} n|tau_n| and n|rho_n| where v_n = c1 n^{-1/beta}(1+tau_n),
// u_{n+1} = c2 n^{-1/alpha}(1+rho_n).
struct ResidualReport {
    Real max_n_tau;
    Real max_n_rho;
};
ResidualReport residual_check(const ZeroSequences& z, const PolynomialRates& pr, long n_max);

// Convenience: zero sequences of a polynomial-rate problem with constants filled in.
ZeroSequences zero_sequences_for(const PolynomialRates& pr, long n_max);

} // namespace momentlab

#endif
