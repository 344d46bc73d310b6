#pragma once

// Dunkl-Cherednik operators T_xi(k), the Dunkl-Heckman operators S_xi(k),
// the representation pi of the extended affine Weyl group on C[H], and the
// affine intertwiners I_i = r_i a_i + k_i.
//
// Coweights xi are passed as the value vector (alpha_1(xi), ..., alpha_n(xi)),
// so the fundamental coweight basis is the standard basis.  Spectral data
// (eigenvalues lambda-tilde) are vectors of scalars in the alpha-coordinate
// sense: lt[j] = lambda-tilde(lambda_j^vee).

#include "affine.hpp"
#include "laurent.hpp"
#include "mpoly.hpp"
#include "ratfunc.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

#include <stdexcept>
#include <vector>

namespace cherednik {

using CoWeight = RatVec;

template <class K>
class DunklContext {
  public:
    using Ops = ScalarOps<K>;

    DunklContext(const RootSystem& rs, const WeylGroup& W, std::vector<K> k_per_orbit)
        : rs_(&rs), W_(&W), aff_(rs, W), k_orbit_(std::move(k_per_orbit)) {
        if (static_cast<int>(k_orbit_.size()) != rs.n_orbits())
            throw std::invalid_argument("one multiplicity per root orbit expected");
        rho_pair_.reserve(rs.n_roots());
        for (size_t r = 0; r < rs.n_roots(); ++r) {
            K s = Ops::zero();
            for (int b : rs.positive_roots()) {
                Rational p = 0;
                for (int i = 0; i < rs.rank(); ++i)
                    p += rs.root(static_cast<int>(r)).coroot_alpha[i] *
                         Rational(rs.root(b).pair_sv[i]);
                s = s + k_of_root(b) * Ops::from_rational(p / 2);
            }
            rho_pair_.push_back(s);
        }
    }

    const RootSystem& rs() const { return *rs_; }
    const WeylGroup& weyl() const { return *W_; }
    const AffineWeyl& affine() const { return aff_; }

    const K& k_of_root(int r) const { return k_orbit_[rs_->root(r).orbit]; }
    const std::vector<K>& k_orbits() const { return k_orbit_; }
    // Multiplicity attached to the affine simple a_i; k_0 = k_theta.
    const K& k_affine(int i) const {
        return i == 0 ? k_of_root(rs_->theta_short()) : k_of_root(rs_->simple_roots()[i - 1]);
    }

    // rho(k)(alpha_r^vee)
    const K& rho_pair(int r) const { return rho_pair_[r]; }

    K rho_of(const CoWeight& xi) const {
        K s = Ops::zero();
        for (int r : rs_->positive_roots())
            s = s + k_of_root(r) * Ops::from_rational(root_on(r, xi) / 2);
        return s;
    }

    // alpha_r(xi) for xi given by its values on the simple roots.
    Rational root_on(int r, const CoWeight& xi) const {
        Rational s = 0;
        for (int i = 0; i < rs_->rank(); ++i) s += Rational(rs_->root(r).alpha[i]) * xi[i];
        return s;
    }
    Rational weight_on(const Weight& mu, const CoWeight& xi) const {
        RatVec a = rs_->alpha_coords(mu);
        Rational s = 0;
        for (int i = 0; i < rs_->rank(); ++i) s += a[i] * xi[i];
        return s;
    }

    CoWeight coroot_coweight(int r) const {
        CoWeight xi(rs_->rank());
        for (int j = 0; j < rs_->rank(); ++j) {
            Rational s = 0;
            for (int i = 0; i < rs_->rank(); ++i)
                s += rs_->root(r).coroot_alpha[i] * Rational(rs_->cartan(i, j));
            xi[j] = s;
        }
        return xi;
    }

    CoWeight fundamental_coweight(int j) const {
        CoWeight xi(rs_->rank(), Rational(0));
        xi[j] = 1;
        return xi;
    }

    // u(xi) for u in W, acting on the coweight side: alpha_i(u xi) = (u^{-1}alpha_i)(xi).
    CoWeight coweight_act(int u, const CoWeight& xi) const {
        int ui = W_->inv(u);
        CoWeight out(rs_->rank());
        for (int i = 0; i < rs_->rank(); ++i)
            out[i] = root_on(W_->root_image(ui, rs_->simple_roots()[i]), xi);
        return out;
    }

    LaurentPoly<K> apply_T(const CoWeight& xi, const LaurentPoly<K>& f) const {
        LaurentPoly<K> out(rs_->rank());
        for (const auto& [mu, c] : f.terms())
            out.add_term(mu, c * Ops::from_rational(weight_on(mu, xi)));
        for (int r : rs_->positive_roots()) {
            Rational ax = root_on(r, xi);
            if (ax == 0) continue;
            K coef = k_of_root(r) * Ops::from_rational(ax);
            out = out + divided_difference(*rs_, r, f).scaled(coef);
        }
        return out - f.scaled(rho_of(xi));
    }

    // S_xi(k) = d_xi + (1/2) sum k_alpha alpha(xi) (1+e^{-alpha})(1-e^{-alpha})^{-1}(1-r_alpha)
    LaurentPoly<K> apply_S(const CoWeight& xi, const LaurentPoly<K>& f) const {
        LaurentPoly<K> out(rs_->rank());
        for (const auto& [mu, c] : f.terms())
            out.add_term(mu, c * Ops::from_rational(weight_on(mu, xi)));
        for (int r : rs_->positive_roots()) {
            Rational ax = root_on(r, xi);
            if (ax == 0) continue;
            K coef = k_of_root(r) * Ops::from_rational(ax / 2);
            LaurentPoly<K> dd = divided_difference(*rs_, r, f);
            LaurentPoly<K> shift =
                LaurentPoly<K>::monomial(-rs_->root_weight(r), Ops::one()) * dd;
            out = out + (dd + shift).scaled(coef);
        }
        return out;
    }

    // u_xi(k) = (1/2) sum k_alpha alpha(xi) r_alpha; T = S - u.
    LaurentPoly<K> apply_u(const CoWeight& xi, const LaurentPoly<K>& f) const {
        LaurentPoly<K> out(rs_->rank());
        for (int r : rs_->positive_roots()) {
            Rational ax = root_on(r, xi);
            if (ax == 0) continue;
            K coef = k_of_root(r) * Ops::from_rational(ax / 2);
            out = out + w_act(*W_, W_->reflection(r), f).scaled(coef);
        }
        return out;
    }

    LaurentPoly<K> apply_pi(const ExtAffElt& e, const LaurentPoly<K>& f) const {
        return LaurentPoly<K>::monomial(e.t, Ops::one()) * w_act(*W_, e.w, f);
    }

    // I_i f = pi(r_i) a_i(T) f + k_i f, with a_0 = [-theta^vee, 1] acting as
    // 1 - T_{theta^vee}.
    LaurentPoly<K> apply_intertwiner(int i, const LaurentPoly<K>& f) const {
        LaurentPoly<K> af;
        if (i == 0)
            af = f - apply_T(coroot_coweight(rs_->theta_short()), f);
        else
            af = apply_T(coroot_coweight(rs_->simple_roots()[i - 1]), f);
        return apply_pi(aff_.simple(i), af) + f.scaled(k_affine(i));
    }

    LaurentPoly<K> apply_intertwiner_word(const std::vector<int>& word,
                                          const LaurentPoly<K>& f) const {
        LaurentPoly<K> cur = f;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = apply_intertwiner(*it, cur);
        return cur;
    }

    // Spectral vector of e^lambda: lt[j] = lambda-tilde(lambda_j^vee), where
    // lambda-tilde = lambda + (1/2) sum_{alpha>0} k_alpha eps(lambda(alpha^vee)) alpha
    // and eps(0) = -1.
    std::vector<K> eigenvalue(const Weight& lam) const {
        RatVec base = rs_->alpha_coords(lam);
        std::vector<K> lt(rs_->rank());
        for (int j = 0; j < rs_->rank(); ++j) lt[j] = Ops::from_rational(base[j]);
        for (int r : rs_->positive_roots()) {
            Rational p = rs_->pair_coroot(lam, r);
            int eps = p > 0 ? 1 : -1;
            for (int j = 0; j < rs_->rank(); ++j) {
                Rational h = Rational(eps * rs_->root(r).alpha[j]) / 2;
                lt[j] = lt[j] + k_of_root(r) * Ops::from_rational(h);
            }
        }
        return lt;
    }

    K spectral_pair(const std::vector<K>& lt, const CoWeight& xi) const {
        K s = Ops::zero();
        for (int j = 0; j < rs_->rank(); ++j) s = s + lt[j] * Ops::from_rational(xi[j]);
        return s;
    }

    // d(w,k) = prod over the affine inversion set of a(-rho(k)).
    K d_factor(const ExtAffElt& e) const {
        K out = Ops::one();
        for (const AffineRoot& a : aff_.inversions(e))
            out = out * (Ops::from_rational(Rational(a.n)) - rho_pair_[a.coroot_of]);
        return out;
    }

    // p(T) f for p a rational-coefficient polynomial in the spectral
    // coordinates y_j (so y_j acts as T_{lambda_j^vee}).
    LaurentPoly<K> apply_poly_T(const MPoly& p, const LaurentPoly<K>& f) const {
        LaurentPoly<K> out(rs_->rank());
        for (const auto& [expo, c] : p.terms()) {
            LaurentPoly<K> g = f.scaled(Ops::from_rational(c));
            for (int j = 0; j < rs_->rank(); ++j)
                for (int rep = 0; rep < expo[j]; ++rep) g = apply_T(fundamental_coweight(j), g);
            out = out + g;
        }
        return out;
    }

    // a_i as a degree-one polynomial in the spectral coordinates.
    MPoly affine_root_linear(int i) const {
        const int n = rs_->rank();
        MPoly p(n);
        if (i == 0) {
            p = MPoly::constant(n, 1);
            const Root& th = rs_->root(rs_->theta_short());
            for (int j = 0; j < n; ++j) {
                Rational u = 0;
                for (int l = 0; l < n; ++l) u += th.coroot_alpha[l] * Rational(rs_->cartan(l, j));
                p = p - MPoly::variable(n, j) * u;
            }
        } else {
            int ii = i - 1;
            for (int j = 0; j < n; ++j)
                p = p + MPoly::variable(n, j) * Rational(rs_->cartan(ii, j));
        }
        return p;
    }

    // p^e with (p^e)(lambda) = p(e^{-1} lambda), e acting affinely on a*.
    MPoly poly_twist(const MPoly& p, const ExtAffElt& e) const {
        const int n = rs_->rank();
        ExtAffElt ei = aff_.inv(e);
        // images of the coordinate functions under lambda -> ei(lambda)
        RatVec shift = rs_->alpha_coords(ei.t);
        std::vector<MPoly> img(n, MPoly(n));
        for (int j = 0; j < n; ++j) {
            MPoly acc = MPoly::constant(n, shift[j]);
            for (int l = 0; l < n; ++l) {
                Weight al = rs_->root_weight(rs_->simple_roots()[l]);
                RatVec wcoords = rs_->alpha_coords(W_->act(ei.w, al));
                acc = acc + MPoly::variable(n, l) * wcoords[j];
            }
            img[j] = acc;
        }
        MPoly out(n);
        for (const auto& [expo, c] : p.terms()) {
            MPoly t0 = MPoly::constant(n, c);
            for (int j = 0; j < n; ++j)
                for (int rep = 0; rep < expo[j]; ++rep) t0 = t0 * img[j];
            out = out + t0;
        }
        return out;
    }

    MPoly poly_twist_simple(const MPoly& p, int i) const { return poly_twist(p, aff_.simple(i)); }

  private:
    const RootSystem* rs_;
    const WeylGroup* W_;
    AffineWeyl aff_;
    std::vector<K> k_orbit_;
    std::vector<K> rho_pair_;
};

// Symbolic context: one indeterminate per root orbit (k, and kl for the long
// orbit when there are two lengths).
inline DunklContext<RatFunc> symbolic_context(const RootSystem& rs, const WeylGroup& W) {
    std::vector<RatFunc> ks;
    for (int o = 0; o < rs.n_orbits(); ++o) ks.push_back(RatFunc::variable(rs.n_orbits(), o));
    return DunklContext<RatFunc>(rs, W, std::move(ks));
}

inline DunklContext<Rational> rational_context(const RootSystem& rs, const WeylGroup& W,
                                               const RatVec& ks) {
    return DunklContext<Rational>(rs, W, ks);
}

}  // namespace cherednik
