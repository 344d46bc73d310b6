#pragma once

// Symmetric theory: Jacobi polynomials P(lambda,k) by symmetrization of the
// nonsymmetric family, their skew companions, and the fundamental shift
// operators G_+(k), G_-(k+1) acting one step up and down in k.

#include "cherednik_ops.hpp"
#include "epoly.hpp"
#include "laurent.hpp"

#include <stdexcept>

namespace cherednik {

template <class K>
LaurentPoly<K> jacobi_poly(const DunklContext<K>& ctx, const Weight& lam) {
    if (!ctx.rs().is_dominant(lam)) throw std::invalid_argument("dominant weight expected");
    LaurentPoly<K> E = E_by_intertwiners(ctx, lam);
    LaurentPoly<K> out(ctx.rs().rank());
    for (int w : ctx.weyl().minimal_orbit_reps(lam)) out = out + w_act(ctx.weyl(), w, E);
    return out;
}

// Skew symmetrization; requires a regular dominant weight so the signed sum
// does not collapse.
template <class K>
LaurentPoly<K> jacobi_skew(const DunklContext<K>& ctx, const Weight& lam) {
    if (!ctx.rs().is_regular_dominant(lam))
        throw std::invalid_argument("regular dominant weight expected");
    LaurentPoly<K> E = E_by_intertwiners(ctx, lam);
    LaurentPoly<K> out(ctx.rs().rank());
    const WeylGroup& W = ctx.weyl();
    for (size_t w = 0; w < W.size(); ++w) {
        int wi = static_cast<int>(w);
        LaurentPoly<K> t = w_act(W, wi, E);
        out = W.sign(wi) > 0 ? out + t : out - t;
    }
    return out;
}

// G_+(k) f = Delta^{-1} prod_{alpha>0} (T_{alpha^vee}(k) + k_alpha) f for
// W-invariant f; the factors commute, and the product of an invariant is skew.
template <class K>
LaurentPoly<K> shift_plus(const DunklContext<K>& ctx, const LaurentPoly<K>& f) {
    LaurentPoly<K> g = f;
    for (int r : ctx.rs().positive_roots())
        g = ctx.apply_T(ctx.coroot_coweight(r), g) + g.scaled(ctx.k_of_root(r));
    return divide_by_delta(ctx.rs(), ctx.weyl(), g);
}

// G_-(k+1) f = prod_{alpha>0} (T_{alpha^vee}(k) - k_alpha) (Delta f); the
// context carries the lower parameter k.
template <class K>
LaurentPoly<K> shift_minus(const DunklContext<K>& ctx, const LaurentPoly<K>& f) {
    LaurentPoly<K> g = weyl_denominator<K>(ctx.rs()) * f;
    for (int r : ctx.rs().positive_roots())
        g = ctx.apply_T(ctx.coroot_coweight(r), g) - g.scaled(ctx.k_of_root(r));
    if (!is_symmetric(ctx.rs(), ctx.weyl(), g))
        throw std::logic_error("downward shift produced a non-invariant result");
    return g;
}

}  // namespace cherednik
