#ifndef MOMENTLAB_GAMMAFN_HPP
#define MOMENTLAB_GAMMAFN_HPP

#include "momentlab/precision.hpp"

namespace momentlab {

// Gamma at the active precision. Poles (x = 0, -1, -2, ...) are rejected.
Real gamma_fn(const Real& x);

// log Gamma for x > 0.
Real log_gamma(const Real& x);

// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b).
Real beta_fn(const Real& a, const Real& b);

Real pi_const();

} // namespace momentlab

#endif
