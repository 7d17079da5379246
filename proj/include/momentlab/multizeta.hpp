#ifndef MOMENTLAB_MULTIZETA_HPP
#define MOMENTLAB_MULTIZETA_HPP

#include "momentlab/precision.hpp"

#include <functional>
#include <vector>

namespace momentlab {

// Spec of one interleaved nested sum
//   sum_{a <= k_1 <= k_2 < k_3 <= k_4 < ... < k_{2n-1} <= k_{2n} <= K}
//       w_odd(k_1) w_even(k_2) ... w_odd(k_{2n-1}) w_even(k_{2n})
// (inequalities alternate <= and <, starting with <=).
template <class T>
struct NestedSumSpecT {
    std::function<T(long)> odd_weight;
    std::function<T(long)> even_weight;
    long start = 1; // a
    int depth = 1;  // n
    long K = 100;
};
using NestedSumSpec = NestedSumSpecT<Real>;

struct SumResult {
    Real value;
    long K_used = 0;
    Real stability;              // relative change at the last K-doubling
    bool depth_starved = false;  // K < a + n - 1 forces an empty index set
    bool tail_corrected = false; // a power-law tail estimate was added
};

// Forward DP at fixed truncation K, exact in the arithmetic of T:
//   F_1(m) = w_odd(m),
//   F_{2j}(m) = w_even(m) * sum_{l <= m} F_{2j-1}(l),
//   F_{2j+1}(m) = w_odd(m) * sum_{l < m} F_{2j}(l),
// value at depth j = sum_m F_{2j}(m). Cost O(depth * K).
// Returns the depth values 1..spec.depth.
template <class T>
std::vector<T> interleaved_dp(const NestedSumSpecT<T>& spec) {
    if (spec.depth < 1 || spec.start < 1 || spec.K < spec.start)
        return std::vector<T>(std::max(spec.depth, 0), T(0));
    const long a = spec.start, K = spec.K;
    const long len = K - a + 1;
    std::vector<T> odd(len), even(len), totals;
    totals.reserve(spec.depth);
    for (long i = 0; i < len; ++i) odd[i] = spec.odd_weight(a + i);
    for (int j = 1; j <= spec.depth; ++j) {
        T running = T(0);
        T total = T(0);
        for (long i = 0; i < len; ++i) {
            running += odd[i];
            even[i] = spec.even_weight(a + i) * running;
            total += even[i];
        }
        totals.push_back(total);
        if (j < spec.depth) {
            T strict = T(0);
            for (long i = 0; i < len; ++i) {
                T next = spec.odd_weight(a + i) * strict;
                strict += even[i];
                odd[i] = next;
            }
        }
    }
    return totals;
}

// Exhaustive enumeration of the defining index set. Guarded against
// combinatorial blowup: depth <= 3 and K <= 30.
template <class T>
T brute_force_oracle(const NestedSumSpecT<T>& spec) {
    if (spec.depth > 3 || spec.K > 30)
        throw InvalidInputError("brute_force_oracle: budget is depth <= 3, K <= 30");
    if (spec.depth < 1 || spec.start < 1) throw InvalidInputError("brute_force_oracle: bad spec");
    T total = T(0);
    const int slots = 2 * spec.depth;
    std::vector<long> k(slots);
    // recursive descent over k_1 ... k_{2n}; bound i is <= for even slot, < after it
    std::function<void(int, long, T)> rec = [&](int i, long lo, T prod) {
        if (i == slots) {
            total += prod;
            return;
        }
        bool odd_slot = (i % 2 == 0); // slot i holds k_{i+1}
        for (long v = lo; v <= spec.K; ++v) {
            T w = odd_slot ? spec.odd_weight(v) : spec.even_weight(v);
            // after an odd slot the next bound is >= v (weak); after an even slot it is > v
            rec(i + 1, odd_slot ? v : v + 1, prod * w);
        }
    };
    rec(0, spec.start, T(1));
    return total;
}

// K-doubling driver with a power-law tail estimate on the outermost level.
// Weights are tabulated once and extended across doublings. K in the spec is
// the ceiling; eps_tail is the stability target.
SumResult nested_sum(const NestedSumSpec& spec, const Real& eps_tail = Real("1e-8"));

// All depths 1..n_max of the same weight pair in one pass per K.
std::vector<SumResult> interleaved_sums(const std::function<Real(long)>& odd_weight,
                                        const std::function<Real(long)>& even_weight,
                                        long start, int n_max, long K_ceiling,
                                        const Real& eps_tail = Real("1e-8"));

// gamma_n(p): both weights k^{-p/2}, start 1. Requires p > 2.
std::vector<SumResult> gamma_n(const Real& p, int n_max, long K,
                               const Real& eps_tail = Real("1e-8"));

// zeta_n(p) = sum_{k_1<...<k_n} (k_2-k_1)...(k_n-k_{n-1}) (k_1...k_n)^{-p},
// n = 2..n_max. Requires p > 2.
std::vector<SumResult> zeta_n(const Real& p, int n_max, long K,
                              const Real& eps_tail = Real("1e-8"));

// s_n(a): odd weight k^{-1/alpha}, even weight k^{-1/beta}.
std::vector<SumResult> s_n(const Real& alpha, const Real& beta, long a, int n_max, long K,
                           const Real& eps_tail = Real("1e-8"));

// Fixed-K strict-chain DP for zeta_n, exact at the given truncation.
std::vector<Real> strict_gap_dp(const Real& p, int n_max, long K);

// Both sides of zeta_n <= gamma_n <= zeta(p-1) 2^{p/2-1}/(p/2-1) zeta_{n-1}, n >= 3.
struct SandwichRow {
    int n;
    Real zeta_val, gamma_val, upper;
    Real low_margin;  // gamma_n - zeta_n
    Real high_margin; // upper - gamma_n
};
struct SandwichReport {
    Real p;
    std::vector<SandwichRow> rows;
    bool all_nonnegative = true;
};
SandwichReport sandwich_report(const Real& p, int n_max, long K);

// s_n(1) against gamma_n(2/gamma): eq (sumup1) when alpha > beta, (sumup2)
// when alpha < beta.
struct SnSandwichRow {
    int n;
    Real s1, gamma_val, lower, upper;
    Real low_margin, high_margin;
};
struct SnSandwichReport {
    Real alpha, beta, gamma_mean;
    bool alpha_gt_beta = false;
    std::vector<SnSandwichRow> rows;
    bool all_nonnegative = true;
};
SnSandwichReport sn_sandwich_report(const Real& alpha, const Real& beta, int n_max, long K);

// s_n(1) >= s_n(a) >= s_n(1) (L(a) n^{a-1})^{-2/gamma} with L(a) measured as
// sup_n n^{-(a-1)} prod_{j<=n}(1 + (a-1)/j) over the computed horizon.
struct StartBoundReport {
    long a;
    Real L_measured;
    std::vector<SnSandwichRow> rows; // lower/upper reuse: lower = scaled s1 bound, upper = s1
    bool all_nonnegative = true;
};
StartBoundReport sn_start_bound_check(const Real& alpha, const Real& beta, long a,
                                      int n_max, long K);

// Weight rule reading a 1-based table; indices beyond the table throw.
std::function<Real(long)> table_weight(const std::vector<Real>& table);

} // namespace momentlab

#endif
