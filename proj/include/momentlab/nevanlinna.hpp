#ifndef MOMENTLAB_NEVANLINNA_HPP
#define MOMENTLAB_NEVANLINNA_HPP

#include "momentlab/core.hpp"
#include "momentlab/growth.hpp"
#include "momentlab/recurrences.hpp"

#include <vector>

namespace momentlab {

// Dense polynomial, coefficient of z^k at index k.
using Poly = std::vector<Real>;

// Truncation of the Nevanlinna matrix ((A,B),(C,D)) after N factors
// (I - zV_n)(I + zU_n) applied on the left of the seed ((0,-1),(1,z)).
struct NevanlinnaTruncation {
    Poly A, B, C, D;
    long depth = 0;
    Real discarded = 0; // largest coefficient magnitude lost to the degree cap

    // A(z)D(z) - B(z)C(z); equals the constant polynomial 1 at every depth.
    Poly determinant() const;
};

// Exact polynomial-coefficient product; degree_cap < 0 means no cap.
NevanlinnaTruncation truncated_product(const ZeroSequences& z, long N, long degree_cap = -1);

// m22(z) = 1 + sum (-1)^n sigma_n(1) z^{2n} with sigma_n from the interleaved
// DP over the tabulated u, v. K is clamped to the tabulated horizon; with
// k_doubling = false the DP runs at exactly K (finite identity with the
// truncated product at K = N).
CoefficientSeries m22_coefficients(const ZeroSequences& z, int n_max, long K,
                                   bool k_doubling = true);

// Cross-check C_s(z) = C(z^2): the symmetric m22 route against Stieltjes
// partial sums C_n(z) = 1 + z sum_{k<n} P_k(0) Q_k(z).
struct CCheckReport {
    std::vector<Real> symmetric_even;  // C_s coefficient of z^{2n}, n = 0..
    std::vector<Real> stieltjes;       // C coefficient of z^n
    std::vector<Real> stieltjes_stability; // partial-sum movement per coefficient
    Real max_rel_gap = 0;
    Real max_odd_coefficient = 0; // odd C_s coefficients; vanish identically
    bool consistent = true;       // gaps within a few times the recorded stability
};
CCheckReport stieltjes_symmetric_c_check(const JacobiParams& j, int n_coeffs, long K);

} // namespace momentlab

#endif
