#ifndef MOMENTLAB_CORE_HPP
#define MOMENTLAB_CORE_HPP

#include "momentlab/precision.hpp"

#include <vector>

namespace momentlab {

// Birth and death rates lambda_n (n >= 0) and mu_n (mu_0 = 0).
struct BirthDeathRates {
    std::vector<Real> lambda;
    std::vector<Real> mu;

    void validate() const;
};

// Polynomial rates lambda_n = (pn+e_1)...(pn+e_p), mu_n = (pn+d_1)...(pn+d_p)
// with 0 < e_1 <= ... <= e_p, -p < d_1 <= ... <= d_p, d_1...d_p = 0.
struct PolynomialRates {
    int p = 0;
    std::vector<Real> e;
    std::vector<Real> d;

    void validate() const;
    Real E() const;
    Real D() const;
    Real lambda(long n) const;
    Real mu(long n) const;
    BirthDeathRates tabulate(long n_max) const;
};

// Jacobi parameters of the three-term recurrence
//   z r_n = b_n r_{n+1} + a_n r_n + b_{n-1} r_{n-1}.
struct JacobiParams {
    std::vector<Real> a;
    std::vector<Real> b;

    void validate(bool stieltjes = false) const;
};

// Recurrence coefficients beta_n of a symmetric Hamburger problem.
struct SymmetricJacobi {
    std::vector<Real> beta;

    void validate() const;
};

enum class Indeterminacy { indeterminate, determinate, boundary };

struct IndeterminacyResult {
    Real ratio; // (E - D)/p
    Indeterminacy verdict;
};

// a_n = lambda_n + mu_n, b_n = sqrt(lambda_n mu_{n+1}), 0 <= n <= n_max.
JacobiParams rates_to_jacobi(const BirthDeathRates& r, long n_max);

// Chain-sequence split: a_0 = beta_0^2, a_n = beta_{2n}^2 + beta_{2n-1}^2,
// b_n = beta_{2n} beta_{2n+1}. Fails when the problem is not Stieltjes.
SymmetricJacobi jacobi_to_symmetric(const JacobiParams& j, long n_max);

// Exact inverse of jacobi_to_symmetric.
JacobiParams symmetric_to_jacobi(const SymmetricJacobi& s, long n_max);

// beta_{2n} = sqrt(lambda_n), beta_{2n+1} = sqrt(mu_{n+1}), from closed form.
SymmetricJacobi polynomial_bn(const PolynomialRates& pr, long n_max);

// Valent's criterion 1 < (E - D)/p < p - 1, with equality reported as boundary.
IndeterminacyResult indeterminacy_check(const PolynomialRates& pr);

// (c a_n, c b_n) for c > 0.
JacobiParams scale_jacobi(const JacobiParams& j, const Real& c);
SymmetricJacobi scale_symmetric(const SymmetricJacobi& s, const Real& c);

} // namespace momentlab

#endif
