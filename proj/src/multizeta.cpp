#include "momentlab/multizeta.hpp"
#include "momentlab/recurrences.hpp"
#include "momentlab/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace momentlab {

namespace {

// Least-squares power-law fit log F = b - q log m over a few sample points,
// then the analytic tail sum_{m>K} e^b m^{-q}. Returns 0 when the data does
// not look like a convergent power law (the caller then reports the raw
// truncated value and its stability honestly).
Real estimate_tail(const std::vector<std::pair<long, Real>>& samples, long K) {
    if (samples.size() < 2) return 0;
    for (const auto& s : samples)
        if (s.second <= 0) return 0;
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    const Real n = static_cast<long>(samples.size());
    for (const auto& s : samples) {
        Real x = log(Real(s.first));
        Real y = log(s.second);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    Real denom = n * sxx - sx * sx;
    if (denom == 0) return 0;
    Real slope = (n * sxy - sx * sy) / denom;
    Real q = -slope;
    if (q <= Real("1.000001")) return 0; // divergent-looking; no correction
    Real intercept = (sy - slope * sx) / n;
    return exp(intercept) * power_tail(q, K);
}

struct InterleavedState {
    std::vector<Real> u_tab, v_tab; // indexed by m - start
    long start;
    std::function<Real(long)> odd_w, even_w;

    void extend(long K) {
        long have = start + static_cast<long>(u_tab.size());
        for (long m = have; m <= K; ++m) {
            u_tab.push_back(odd_w(m));
            v_tab.push_back(even_w(m));
        }
    }
};

// One DP sweep at truncation K. For each depth j returns the truncated total
// and the sample points of F_{2j}(m) used for the tail fit.
struct SweepResult {
    std::vector<Real> totals;
    std::vector<std::vector<std::pair<long, Real>>> samples;
};

SweepResult interleaved_sweep(const InterleavedState& st, int n_max, long K) {
    const long a = st.start;
    const long len = K - a + 1;
    SweepResult out;
    out.totals.assign(n_max, Real(0));
    out.samples.assign(n_max, {});
    if (len <= 0) return out;

    std::vector<long> sample_ms;
    for (int i = 4; i >= 0; --i) {
        long m = static_cast<long>(std::floor(static_cast<double>(K) * std::pow(0.5, i / 4.0)));
        if (m >= a && (sample_ms.empty() || m > sample_ms.back())) sample_ms.push_back(m);
    }

    std::vector<Real> odd(st.u_tab.begin(), st.u_tab.begin() + len);
    std::vector<Real> even(len);
    for (int j = 1; j <= n_max; ++j) {
        Real running = 0, total = 0;
        for (long i = 0; i < len; ++i) {
            running += odd[i];
            even[i] = st.v_tab[i] * running;
            total += even[i];
        }
        out.totals[j - 1] = total;
        for (long m : sample_ms) out.samples[j - 1].push_back({m, even[m - a]});
        if (j < n_max) {
            Real strict = 0;
            for (long i = 0; i < len; ++i) {
                Real next = st.u_tab[i] * strict;
                strict += even[i];
                odd[i] = next;
            }
        }
    }
    return out;
}

std::vector<SumResult> run_interleaved(InterleavedState& st, int n_max, long K_ceiling,
                                       const Real& eps_tail) {
    if (n_max < 1) throw InvalidInputError("interleaved sums: depth >= 1 required");
    if (K_ceiling < 1) throw InvalidInputError("interleaved sums: K >= 1 required");
    std::vector<SumResult> results(n_max);

    long K = std::min<long>(K_ceiling, std::max<long>(64, st.start + n_max + 8));
    std::vector<Real> prev(n_max, Real(0));
    bool have_prev = false;
    while (true) {
        st.extend(K);
        SweepResult sweep = interleaved_sweep(st, n_max, K);
        bool all_stable = have_prev;
        for (int j = 0; j < n_max; ++j) {
            Real corrected = sweep.totals[j];
            Real tail = estimate_tail(sweep.samples[j], K);
            // skip the correction when the tail is already below target
            bool corrected_flag = false;
            if (tail > 0 && corrected > 0 && tail > corrected * eps_tail / 16) {
                corrected += tail;
                corrected_flag = true;
            }
            Real stab = 0;
            if (have_prev) {
                Real denom = abs(corrected);
                stab = denom > 0 ? abs(corrected - prev[j]) / denom : Real(0);
                if (stab > eps_tail) all_stable = false;
            }
            results[j].value = corrected;
            results[j].K_used = K;
            results[j].stability = stab;
            results[j].tail_corrected = corrected_flag;
            results[j].depth_starved = (K < st.start + (j + 1) - 1) || corrected == 0;
            prev[j] = corrected;
        }
        if ((all_stable && have_prev) || K >= K_ceiling) break;
        have_prev = true;
        K = std::min(K_ceiling, 2 * K);
    }
    return results;
}

} // namespace

std::function<Real(long)> table_weight(const std::vector<Real>& table) {
    return [&table](long k) -> Real {
        if (k < 1 || static_cast<std::size_t>(k) > table.size())
            throw InvalidInputError("table_weight: index outside the tabulated range");
        return table[k - 1];
    };
}

std::vector<SumResult> interleaved_sums(const std::function<Real(long)>& odd_weight,
                                        const std::function<Real(long)>& even_weight,
                                        long start, int n_max, long K_ceiling,
                                        const Real& eps_tail) {
    InterleavedState st{{}, {}, start, odd_weight, even_weight};
    return run_interleaved(st, n_max, K_ceiling, eps_tail);
}

SumResult nested_sum(const NestedSumSpec& spec, const Real& eps_tail) {
    auto all = interleaved_sums(spec.odd_weight, spec.even_weight, spec.start, spec.depth,
                                spec.K, eps_tail);
    return all.back();
}

std::vector<SumResult> gamma_n(const Real& p, int n_max, long K, const Real& eps_tail) {
    if (p <= 2) throw NumericError("gamma_n: diverges for p <= 2");
    Real half_p = p / 2;
    auto w = [half_p](long k) { return pow(Real(k), -half_p); };
    return interleaved_sums(w, w, 1, n_max, K, eps_tail);
}

std::vector<SumResult> s_n(const Real& alpha, const Real& beta, long a, int n_max, long K,
                           const Real& eps_tail) {
    if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1)
        throw InvalidInputError("s_n: 0 < alpha, beta < 1 required");
    Real ea = 1 / alpha, eb = 1 / beta;
    auto odd = [ea](long k) { return pow(Real(k), -ea); };
    auto even = [eb](long k) { return pow(Real(k), -eb); };
    return interleaved_sums(odd, even, a, n_max, K, eps_tail);
}

std::vector<Real> strict_gap_dp(const Real& p, int n_max, long K) {
    if (n_max < 2) throw InvalidInputError("strict_gap_dp: n_max >= 2 required");
    if (K < 1) throw InvalidInputError("strict_gap_dp: K >= 1 required");
    std::vector<Real> w(K), cur(K);
    for (long m = 1; m <= K; ++m) {
        w[m - 1] = pow(Real(m), -p);
        cur[m - 1] = w[m - 1];
    }
    std::vector<Real> totals; // totals[i] = zeta_{i+2}
    for (int j = 2; j <= n_max; ++j) {
        Real s0 = 0, s1 = 0, total = 0;
        for (long m = 1; m <= K; ++m) {
            Real g = w[m - 1] * (Real(m) * s0 - s1);
            s0 += cur[m - 1];
            s1 += Real(m) * cur[m - 1];
            cur[m - 1] = g;
            total += g;
        }
        totals.push_back(total);
    }
    return totals;
}

std::vector<SumResult> zeta_n(const Real& p, int n_max, long K, const Real& eps_tail) {
    if (p <= 2) throw NumericError("zeta_n: diverges for p <= 2");
    if (n_max < 2) throw InvalidInputError("zeta_n: n_max >= 2 required");
    std::vector<SumResult> results(n_max - 1);
    long Kcur = std::min<long>(K, std::max<long>(64, n_max + 8));
    std::vector<Real> prev(n_max - 1, Real(0));
    bool have_prev = false;
    while (true) {
        // totals and samples recomputed at each K (levels are K-independent pointwise)
        std::vector<Real> w(Kcur), cur(Kcur);
        for (long m = 1; m <= Kcur; ++m) {
            w[m - 1] = pow(Real(m), -p);
            cur[m - 1] = w[m - 1];
        }
        std::vector<long> sample_ms;
        for (int i = 4; i >= 0; --i) {
            long m = static_cast<long>(std::floor(static_cast<double>(Kcur) * std::pow(0.5, i / 4.0)));
            if (m >= 1 && (sample_ms.empty() || m > sample_ms.back())) sample_ms.push_back(m);
        }
        bool all_stable = have_prev;
        for (int j = 2; j <= n_max; ++j) {
            Real s0 = 0, s1 = 0, total = 0;
            for (long m = 1; m <= Kcur; ++m) {
                Real g = w[m - 1] * (Real(m) * s0 - s1);
                s0 += cur[m - 1];
                s1 += Real(m) * cur[m - 1];
                cur[m - 1] = g;
                total += g;
            }
            std::vector<std::pair<long, Real>> samples;
            for (long m : sample_ms) samples.push_back({m, cur[m - 1]});
            Real corrected = total;
            Real tail = estimate_tail(samples, Kcur);
            bool corrected_flag = false;
            if (tail > 0 && corrected > 0 && tail > corrected * eps_tail / 16) {
                corrected += tail;
                corrected_flag = true;
            }
            auto& res = results[j - 2];
            Real stab = 0;
            if (have_prev) {
                Real denom = abs(corrected);
                stab = denom > 0 ? abs(corrected - prev[j - 2]) / denom : Real(0);
                if (stab > eps_tail) all_stable = false;
            }
            res.value = corrected;
            res.K_used = Kcur;
            res.stability = stab;
            res.tail_corrected = corrected_flag;
            res.depth_starved = (Kcur < j) || corrected == 0;
            prev[j - 2] = corrected;
        }
        if ((all_stable && have_prev) || Kcur >= K) break;
        have_prev = true;
        Kcur = std::min(K, 2 * Kcur);
    }
    return results;
}

SandwichReport sandwich_report(const Real& p, int n_max, long K) {
    if (p <= 2) throw NumericError("sandwich_report: p > 2 required");
    if (n_max < 3) throw InvalidInputError("sandwich_report: n_max >= 3 required");
    SandwichReport rep;
    rep.p = p;
    auto gam = gamma_n(p, n_max, K);
    auto zet = zeta_n(p, n_max, K);
    Real constant = riemann_zeta(p - 1) * pow(Real(2), p / 2 - 1) / (p / 2 - 1);
    for (int n = 3; n <= n_max; ++n) {
        SandwichRow row;
        row.n = n;
        row.zeta_val = zet[n - 2].value;
        row.gamma_val = gam[n - 1].value;
        row.upper = constant * zet[n - 3].value; // zeta_{n-1}
        row.low_margin = row.gamma_val - row.zeta_val;
        row.high_margin = row.upper - row.gamma_val;
        if (row.low_margin < 0 || row.high_margin < 0) rep.all_nonnegative = false;
        rep.rows.push_back(row);
    }
    return rep;
}

SnSandwichReport sn_sandwich_report(const Real& alpha, const Real& beta, int n_max, long K) {
    SnSandwichReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.gamma_mean = 2 / (1 / alpha + 1 / beta);
    rep.alpha_gt_beta = alpha > beta;
    auto sn1 = s_n(alpha, beta, 1, n_max, K);
    auto gam = gamma_n(2 / rep.gamma_mean, n_max, K);
    Real za = riemann_zeta(1 / alpha);
    Real zg = riemann_zeta(1 / rep.gamma_mean);
    int n_from = rep.alpha_gt_beta ? 1 : 3;
    for (int n = n_from; n <= n_max; ++n) {
        SnSandwichRow row;
        row.n = n;
        row.s1 = sn1[n - 1].value;
        row.gamma_val = gam[n - 1].value;
        if (rep.alpha_gt_beta) {
            // (zeta(1/a) zeta(1/g))^{-1} (4n^2)^{-1/g} gamma_n <= s_n(1) <= gamma_n
            row.lower = pow(Real(4) * n * n, -1 / rep.gamma_mean) / (za * zg) * row.gamma_val;
            row.upper = row.gamma_val;
        } else {
            // gamma_n <= s_n(1) <= zeta(1/a) zeta(1/b) zeta^2(1/g) gamma_{n-2}
            Real zb = riemann_zeta(1 / beta);
            row.lower = row.gamma_val;
            row.upper = za * zb * zg * zg * gam[n - 3].value;
        }
        row.low_margin = row.s1 - row.lower;
        row.high_margin = row.upper - row.s1;
        if (row.low_margin < 0 || row.high_margin < 0) rep.all_nonnegative = false;
        rep.rows.push_back(row);
    }
    return rep;
}

StartBoundReport sn_start_bound_check(const Real& alpha, const Real& beta, long a,
                                      int n_max, long K) {
    if (a < 1) throw InvalidInputError("sn_start_bound_check: a >= 1 required");
    StartBoundReport rep;
    rep.a = a;
    // L(a) = sup_n n^{-(a-1)} prod_{j<=n} (1 + (a-1)/j), measured over the horizon
    Real L = 0, prod = 1;
    long horizon = std::max<long>(n_max, 1000);
    for (long j = 1; j <= horizon; ++j) {
        prod *= 1 + Real(a - 1) / j;
        L = std::max(L, prod * exp(-Real(a - 1) * log(Real(j))));
    }
    rep.L_measured = L;
    Real gamma_mean = 2 / (1 / alpha + 1 / beta);
    auto sn1 = s_n(alpha, beta, 1, n_max, K);
    auto sna = s_n(alpha, beta, a, n_max, K);
    for (int n = 1; n <= n_max; ++n) {
        SnSandwichRow row;
        row.n = n;
        row.s1 = sna[n - 1].value; // the middle member s_n(a)
        row.gamma_val = sn1[n - 1].value;
        row.upper = sn1[n - 1].value;
        row.lower = sn1[n - 1].value * pow(L * exp(Real(a - 1) * log(Real(n))), -2 / gamma_mean);
        row.low_margin = row.s1 - row.lower;
        row.high_margin = row.upper - row.s1;
        if (row.low_margin < 0 || row.high_margin < 0) rep.all_nonnegative = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace momentlab
