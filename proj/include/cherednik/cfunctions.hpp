#pragma once

// Gamma-quotient constants behind the norm and evaluation formulas, computed
// exactly at nonnegative integer multiplicities as rising factorials.  The
// Gamma ratios Gamma(x)/Gamma(x+k) collapse to 1/(x)_k, so every value here
// is an exact rational.

#include "rational.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

#include <stdexcept>
#include <vector>

namespace cherednik {

// rho(k)(alpha^vee) for every positive root, in positive_roots() order
inline RatVec rho_pairings(const RootSystem& rs, const RatVec& k_by_orbit) {
    if (static_cast<int>(k_by_orbit.size()) != rs.n_orbits())
        throw std::invalid_argument("one multiplicity per orbit expected");
    const auto& pos = rs.positive_roots();
    RatVec out(pos.size(), Rational(0));
    for (size_t i = 0; i < pos.size(); ++i) {
        Rational s = 0;
        for (int b : pos) {
            Rational p = 0;
            for (int j = 0; j < rs.rank(); ++j)
                p += rs.root(pos[i]).coroot_alpha[j] * Rational(rs.root(b).pair_sv[j]);
            s += k_by_orbit[rs.root(b).orbit] * p / 2;
        }
        out[i] = s;
    }
    return out;
}

inline RatVec coroot_pairings(const RootSystem& rs, const Weight& lam) {
    const auto& pos = rs.positive_roots();
    RatVec out(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) out[i] = rs.pair_coroot(lam, pos[i]);
    return out;
}

inline RatVec ratvec_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVec ratvec_neg(const RatVec& a) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

// prod over alpha > 0 of 1/(lambda(alpha^vee) + delta_w(alpha))_{k_alpha},
// where delta_w marks the positive roots made negative by w
inline Rational c_tilde(const RootSystem& rs, const WeylGroup& W, int w, const RatVec& pair,
                        const std::vector<long>& k_orbit) {
    const auto& pos = rs.positive_roots();
    Rational prod = 1;
    for (size_t i = 0; i < pos.size(); ++i) {
        long d = W.sends_negative(w, pos[i]) ? 1 : 0;
        prod *= pochhammer(pair[i] + d, k_orbit[rs.root(pos[i]).orbit]);
    }
    return Rational(1) / prod;
}

// prod over alpha > 0 of 1/(-lambda(alpha^vee) - k_alpha + delta_w(alpha))_{k_alpha}
inline Rational c_star(const RootSystem& rs, const WeylGroup& W, int w, const RatVec& pair,
                       const std::vector<long>& k_orbit) {
    const auto& pos = rs.positive_roots();
    Rational prod = 1;
    for (size_t i = 0; i < pos.size(); ++i) {
        long d = W.sends_negative(w, pos[i]) ? 1 : 0;
        long ka = k_orbit[rs.root(pos[i]).orbit];
        prod *= pochhammer(-pair[i] - ka + d, ka);
    }
    return Rational(1) / prod;
}

struct NormEvalData {
    Rational norm2;     // squared norm in the constant term pairing
    Rational value_e;   // value at the identity
};

// Closed forms for || E(mu,k) ||^2 and E(mu,k)(e), mu = w lambda with lambda
// dominant and w the shortest element taking lambda to mu.
inline NormEvalData norm_and_evaluation(const RootSystem& rs, const WeylGroup& W,
                                        const Weight& mu, const std::vector<long>& k_orbit) {
    if (!mu.in_P()) throw std::invalid_argument("weight must lie in P");
    Weight dom = rs.dominant_rep(mu);

    int w_min = -1;
    for (size_t w = 0; w < W.size(); ++w) {
        int wi = static_cast<int>(w);
        if (W.act(wi, dom) == mu && (w_min < 0 || W.length(wi) < W.length(w_min))) w_min = wi;
    }
    int w_lam = W.parabolic_longest(W.dominant_stabilizer_simples(dom));
    int ww = W.mul(w_min, w_lam);

    RatVec kq;
    for (long kv : k_orbit) kq.push_back(Rational(kv));
    RatVec rho = rho_pairings(rs, kq);
    RatVec up = ratvec_add(coroot_pairings(rs, dom), rho);

    NormEvalData out;
    out.norm2 = c_star(rs, W, ww, ratvec_neg(up), k_orbit) / c_tilde(rs, W, ww, up, k_orbit);
    out.value_e =
        c_tilde(rs, W, W.longest(), rho, k_orbit) / c_tilde(rs, W, ww, up, k_orbit);
    return out;
}

// Value of the symmetric polynomial at the identity; valid for integer
// multiplicities >= 1 (the ratio degenerates at k = 0).
inline Rational symmetric_value_e(const RootSystem& rs, const WeylGroup& W, const Weight& lam,
                                  const std::vector<long>& k_orbit) {
    if (!rs.is_dominant(lam)) throw std::invalid_argument("dominant weight expected");
    RatVec kq;
    for (long kv : k_orbit) kq.push_back(Rational(kv));
    RatVec rho = rho_pairings(rs, kq);
    RatVec up = ratvec_add(coroot_pairings(rs, lam), rho);
    return c_tilde(rs, W, W.identity(), rho, k_orbit) /
           c_tilde(rs, W, W.identity(), up, k_orbit);
}

}  // namespace cherednik
