#include "momentlab/zeta.hpp"

#include <mutex>
#include <vector>

namespace momentlab {

namespace {

// Tangent numbers T_1, T_2, ... by the Buckholtz/Knuth in-place recurrence.
// Exact integers; B_{2j} is recovered below.
std::vector<BigInt> tangent_numbers(unsigned n) {
    std::vector<BigInt> t(n + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) t[k] = t[k - 1] * (k - 1);
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned j = k; j <= n; ++j)
            t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    return t;
}

std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache;
    return cache;
}

void extend_bernoulli(unsigned jmax) {
    auto& cache = bernoulli_cache();
    if (cache.size() > jmax) return;
    auto t = tangent_numbers(jmax);
    cache.assign(jmax + 1, Rational(0));
    for (unsigned j = 1; j <= jmax; ++j) {
        BigInt four_j = BigInt(1) << (2 * j); // 4^j
        Rational b = Rational(t[j] * 2 * j, four_j * (four_j - 1));
        cache[j] = (j % 2 == 1) ? b : -b;
    }
}

} // namespace

Rational bernoulli_2j(unsigned j) {
    if (j == 0) return Rational(1);
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    extend_bernoulli(j < 16 ? 16 : j);
    return bernoulli_cache()[j];
}

// Euler-Maclaurin with cut N:
//   zeta(s) = sum_{k<=N} k^-s + N^{1-s}/(s-1) - N^-s/2
//           + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
// N is tied to the working precision so the correction series bottoms out
// below one ulp before its terms start growing.
Real riemann_zeta(const Real& s) {
    if (s <= 1) throw NumericError("riemann_zeta requires s > 1");
    const unsigned bits = precision_bits();
    const long N = static_cast<long>(0.35 * bits) + 16;

    Real head = 0;
    for (long k = N; k >= 1; --k) head += pow(Real(k), -s);

    Real result = head + pow(Real(N), 1 - s) / (s - 1) - pow(Real(N), -s) / 2;

    const Real target = abs(result) * context_epsilon() / 4;
    Real rising = s;                    // s(s+1)...(s+2j-2)
    Real npow = pow(Real(N), -s - 1);   // N^{-s-2j+1}
    Real factorial = 2;                 // (2j)!
    Real prev_mag = -1;
    for (unsigned j = 1; j < 4 * bits; ++j) {
        Real term = Real(bernoulli_2j(j)) / factorial * rising * npow;
        result += term;
        Real mag = abs(term);
        if (mag < target) break;
        if (prev_mag >= 0 && mag > prev_mag)
            throw NumericError("riemann_zeta: Euler-Maclaurin series diverging before target precision");
        prev_mag = mag;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        npow /= Real(N) * Real(N);
        factorial *= (2 * j + 1) * (2 * j + 2);
    }
    return result;
}

Real power_tail(const Real& q, long K) {
    if (q <= 1) throw NumericError("power_tail requires q > 1");
    if (K < 1) throw InvalidInputError("power_tail requires K >= 1");
    const Real Kr(K);
    // sum_{m>K} m^-q = K^{1-q}/(q-1) - K^-q/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(K),
    // f = x^-q. Three correction terms suffice for the K used by callers.
    Real kq = pow(Kr, -q);
    Real tail = kq * Kr / (q - 1) - kq / 2;
    tail += q / 12 * kq / Kr;                                      // B_2/2! * q K^{-q-1}
    tail -= q * (q + 1) * (q + 2) / 720 * kq / (Kr * Kr * Kr);     // B_4/4! term
    tail += q * (q + 1) * (q + 2) * (q + 3) * (q + 4) / 30240 * kq / pow(Kr, 5);
    return tail;
}

} // namespace momentlab
