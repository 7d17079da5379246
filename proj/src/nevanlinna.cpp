#include "momentlab/nevanlinna.hpp"
#include "momentlab/multizeta.hpp"

#include <algorithm>

namespace momentlab {

namespace {

void cap_poly(Poly& p, long degree_cap, Real& discarded) {
    if (degree_cap < 0 || static_cast<long>(p.size()) <= degree_cap + 1) return;
    for (std::size_t k = degree_cap + 1; k < p.size(); ++k)
        discarded = std::max(discarded, abs(p[k]));
    p.resize(degree_cap + 1);
}

// p += c * z^shift * q
void add_scaled_shifted(Poly& p, const Real& c, long shift, const Poly& q) {
    if (c == 0) return;
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, Real(0));
    for (std::size_t k = 0; k < q.size(); ++k) p[k + shift] += c * q[k];
}

Poly multiply(const Poly& p, const Poly& q) {
    Poly out(p.size() + q.size() - 1, Real(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

} // namespace

Poly NevanlinnaTruncation::determinant() const {
    Poly det = multiply(A, D);
    Poly bc = multiply(B, C);
    if (det.size() < bc.size()) det.resize(bc.size(), Real(0));
    for (std::size_t k = 0; k < bc.size(); ++k) det[k] -= bc[k];
    return det;
}

NevanlinnaTruncation truncated_product(const ZeroSequences& z, long N, long degree_cap) {
    if (N < 0 || N > z.n_max())
        throw InvalidInputError("truncated_product: need u, v tabulated to N");
    NevanlinnaTruncation t;
    t.depth = N;
    // seed ((0,-1),(1,z))
    t.A = {Real(0)};
    t.B = {Real(-1)};
    t.C = {Real(1)};
    t.D = {Real(0), Real(1)};
    for (long n = 1; n <= N; ++n) {
        const Real& u = z.u[n - 1];
        const Real& v = z.v[n - 1];
        // (I - zV_n)(I + zU_n) = ((1, z u), (-z v, 1 - z^2 u v)), applied on the left
        Poly A2 = t.A, B2 = t.B;
        add_scaled_shifted(A2, u, 1, t.C);
        add_scaled_shifted(B2, u, 1, t.D);
        Poly C2 = t.C, D2 = t.D;
        add_scaled_shifted(C2, -v, 1, t.A);
        add_scaled_shifted(C2, -u * v, 2, t.C);
        add_scaled_shifted(D2, -v, 1, t.B);
        add_scaled_shifted(D2, -u * v, 2, t.D);
        t.A = std::move(A2);
        t.B = std::move(B2);
        t.C = std::move(C2);
        t.D = std::move(D2);
        cap_poly(t.A, degree_cap, t.discarded);
        cap_poly(t.B, degree_cap, t.discarded);
        cap_poly(t.C, degree_cap, t.discarded);
        cap_poly(t.D, degree_cap, t.discarded);
    }
    return t;
}

CoefficientSeries m22_coefficients(const ZeroSequences& z, int n_max, long K, bool k_doubling) {
    if (n_max < 1) throw InvalidInputError("m22_coefficients: n_max >= 1 required");
    long horizon = std::min<long>(K, z.n_max());
    if (horizon < 1) throw InvalidInputError("m22_coefficients: empty zero-sequence table");

    CoefficientSeries s;
    s.name = "m22";
    s.terms.push_back({0, Real(1)});
    if (k_doubling) {
        auto sums = interleaved_sums(table_weight(z.u), table_weight(z.v), 1, n_max, horizon);
        for (int n = 1; n <= n_max; ++n) {
            Real a2n = (n % 2 == 0 ? sums[n - 1].value : -sums[n - 1].value);
            s.terms.push_back({2 * n, a2n});
            s.meta["stability_n" + std::to_string(n)] = to_decimal_string(sums[n - 1].stability);
        }
    } else {
        NestedSumSpec spec;
        spec.odd_weight = table_weight(z.u);
        spec.even_weight = table_weight(z.v);
        spec.start = 1;
        spec.depth = n_max;
        spec.K = horizon;
        auto vals = interleaved_dp(spec);
        for (int n = 1; n <= n_max; ++n)
            s.terms.push_back({2 * n, n % 2 == 0 ? vals[n - 1] : -vals[n - 1]});
    }
    s.meta["K"] = std::to_string(horizon);
    return s;
}

CCheckReport stieltjes_symmetric_c_check(const JacobiParams& j, int n_coeffs, long K) {
    j.validate(true);
    const long terms = static_cast<long>(j.a.size()) - 1; // partial-sum length
    if (terms < 4 || n_coeffs < 1)
        throw InvalidInputError("stieltjes_symmetric_c_check: need tabulated parameters and n_coeffs >= 1");

    // Symmetric route: u, v from the chain-sequence split, then the m22 DP.
    SymmetricJacobi sym = jacobi_to_symmetric(j, terms);
    ZeroSequences z = zero_values_symmetric(sym, sym.beta.size() / 2);
    CoefficientSeries m22 = m22_coefficients(z, n_coeffs, K);

    // Stieltjes route: C(z) = 1 + z sum_k P_k(0) Q_k(z) by coefficient recurrence.
    // The partial sums converge like a power of 1/k, so each coefficient is
    // Aitken-extrapolated from snapshots at terms/4, terms/2, terms.
    auto [P0, Q0] = eval_polys(j.a, j.b, Real(0), terms);
    std::vector<Real> c(n_coeffs + 1, Real(0)), c_half(n_coeffs + 1, Real(0)),
        c_quarter(n_coeffs + 1, Real(0));
    c[0] = 1;
    Poly q_prev = {Real(-1)}, q_cur = {Real(0)};
    Real b_prev = 1;
    for (long k = 0; k < terms; ++k) {
        // contribution of z P_k(0) Q_k(z) to coefficients 1..n_coeffs
        for (std::size_t i = 0; i < q_cur.size() && i + 1 <= static_cast<std::size_t>(n_coeffs); ++i)
            c[i + 1] += P0[k] * q_cur[i];
        if (k == terms / 4) c_quarter = c;
        if (k == terms / 2) c_half = c;
        // Q_{k+1} = (z Q_k - a_k Q_k - b_{k-1} Q_{k-1}) / b_k
        Poly next(q_cur.size() + 1, Real(0));
        for (std::size_t i = 0; i < q_cur.size(); ++i) {
            next[i + 1] += q_cur[i];
            next[i] -= j.a[k] * q_cur[i];
        }
        for (std::size_t i = 0; i < q_prev.size(); ++i) next[i] -= b_prev * q_prev[i];
        for (auto& x : next) x /= j.b[k];
        q_prev = std::move(q_cur);
        q_cur = std::move(next);
        b_prev = j.b[k];
    }

    CCheckReport rep;
    auto m22_coeff = [&](long e) -> Real {
        for (const auto& t : m22.terms)
            if (t.first == e) return t.second;
        return Real(0);
    };
    for (int n = 0; n <= n_coeffs; ++n) {
        Real cs = m22_coeff(2 * n);
        Real d1 = c_half[n] - c_quarter[n], d2 = c[n] - c_half[n];
        Real ext = c[n];
        if (d1 != 0) {
            Real r = d2 / d1;
            if (r > 0 && r < 1) ext = c[n] + d2 * r / (1 - r);
        }
        rep.symmetric_even.push_back(cs);
        rep.stieltjes.push_back(ext);
        // the applied correction bounds the remaining one-step uncertainty
        Real stab = abs(ext - c[n]) / 2 + abs(cs) * context_epsilon() * 256;
        rep.stieltjes_stability.push_back(stab);
        Real gap = abs(cs - ext);
        Real scale = std::max(abs(ext), abs(cs));
        if (scale > 0) rep.max_rel_gap = std::max(rep.max_rel_gap, gap / scale);
        if (n >= 1 && gap > stab) rep.consistent = false;
    }
    // odd coefficients of C_s vanish identically: the m22 construction only
    // produces even exponents, so check the truncated product instead
    long N_odd = std::min<long>(z.n_max(), 16);
    NevanlinnaTruncation t = truncated_product(z, N_odd);
    for (std::size_t kidx = 1; kidx < t.C.size(); kidx += 2)
        rep.max_odd_coefficient = std::max(rep.max_odd_coefficient, abs(t.C[kidx]));
    return rep;
}

} // namespace momentlab
