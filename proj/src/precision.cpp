#include "momentlab/precision.hpp"

#include <cmath>
#include <sstream>

namespace momentlab {

namespace {
unsigned g_bits = 0;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}
} // namespace

// The default context is installed before main() runs.
namespace detail {
const bool precision_bootstrap = [] { set_precision_bits(256); return true; }();
}

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw InvalidInputError("precision must be at least 64 bits");
    g_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() {
    if (g_bits == 0) set_precision_bits(256);
    return g_bits;
}

Real context_epsilon() {
    Real e = 1;
    mpfr_div_2ui(e.backend().data(), e.backend().data(), precision_bits(), MPFR_RNDN);
    return e;
}

std::string to_decimal_string(const Real& x) {
    std::ostringstream os;
    // two guard digits past digits10 so the decimal form round-trips exactly
    os.precision(bits_to_digits10(precision_bits()) + 2);
    os << x;
    return os.str();
}

Real real_from_string(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw InvalidInputError("not a decimal number: " + s);
    }
}

} // namespace momentlab
