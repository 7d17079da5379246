#ifndef MOMENTLAB_PRECISION_HPP
#define MOMENTLAB_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace momentlab {

// All numeric work runs on MPFR floats whose precision is set once per run.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Active working precision in bits (default 256).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// 2^{-bits} of the active context.
Real context_epsilon();

// RAII scope for temporarily changed precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
    ~PrecisionGuard() { set_precision_bits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
private:
    unsigned saved_;
};

// Decimal-string round trip used by every interchange format.
std::string to_decimal_string(const Real& x);
Real real_from_string(const std::string& s);

// Error taxonomy: invalid input vs. numeric/domain failure. The CLI maps
// these onto exit codes 2 and 3.
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NumericError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace momentlab

#endif
