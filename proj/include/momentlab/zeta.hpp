#ifndef MOMENTLAB_ZETA_HPP
#define MOMENTLAB_ZETA_HPP

#include "momentlab/precision.hpp"

namespace momentlab {

// Bernoulli number B_{2j}, exact rational (tangent-number recurrence).
Rational bernoulli_2j(unsigned j);

// Riemann zeta for real s > 1 by Euler-Maclaurin summation, accurate to the
// active precision context.
Real riemann_zeta(const Real& s);

// Tail sum  sum_{m > K} m^{-q}  for q > 1, by the Euler-Maclaurin expansion
// at the cut. Accurate to O(K^{-q-5}) absolute.
Real power_tail(const Real& q, long K);

} // namespace momentlab

#endif
