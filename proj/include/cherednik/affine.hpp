#pragma once

// Extended affine Weyl group W_ext = P x| W and its dual affine root system.
//
// Elements are pairs (lambda, u) meaning t_lambda u, with lambda in P.  The
// affine roots are pairs [gamma^vee, n] built on coroots of R; [gamma^vee, n]
// is the affine function x -> x(gamma^vee) + n on a*.  The null direction is
// suppressed, so the action on affine roots is the level-zero dual action
//   (lambda, u) . [gamma^vee, n] = [u gamma^vee, n - lambda(u gamma^vee)].
// The affine simple a_0 = [-theta^vee, 1] is built on the highest short root
// theta, so r_0 = t_theta r_theta.

#include "root_system.hpp"
#include "weyl.hpp"

#include <stdexcept>
#include <vector>

namespace cherednik {

struct AffineRoot {
    int coroot_of;  // signed root index; the coroot of that root
    long n;

    bool operator==(const AffineRoot& o) const { return coroot_of == o.coroot_of && n == o.n; }
};

struct ExtAffElt {
    Weight t;
    int w = 0;

    bool operator==(const ExtAffElt& o) const { return t == o.t && w == o.w; }
};

struct AffineDecomposition {
    ExtAffElt omega;        // length-zero part
    std::vector<int> word;  // e = omega * r_{word[0]} * ... * r_{word.back()}
};

class AffineWeyl {
  public:
    AffineWeyl(const RootSystem& rs, const WeylGroup& W) : rs_(&rs), W_(&W) {
        theta_ = rs.theta_short();
    }

    const RootSystem& roots() const { return *rs_; }
    const WeylGroup& weyl() const { return *W_; }
    int theta() const { return theta_; }

    ExtAffElt identity() const { return ExtAffElt{rs_->zero_weight(), W_->identity()}; }
    ExtAffElt from_translation(const Weight& lam) const {
        if (!lam.in_P()) throw std::invalid_argument("translation weight must lie in P");
        return ExtAffElt{lam, W_->identity()};
    }
    ExtAffElt from_weyl(int w) const { return ExtAffElt{rs_->zero_weight(), w}; }

    // Affine simple reflections; index 0 is the extra node.
    ExtAffElt simple(int i) const {
        if (i == 0) return ExtAffElt{rs_->root_weight(theta_), W_->reflection(theta_)};
        int j = i - 1;
        return ExtAffElt{rs_->zero_weight(), W_->simple(j)};
    }

    ExtAffElt mul(const ExtAffElt& a, const ExtAffElt& b) const {
        return ExtAffElt{a.t + W_->act(a.w, b.t), W_->mul(a.w, b.w)};
    }
    ExtAffElt inv(const ExtAffElt& a) const {
        int wi = W_->inv(a.w);
        return ExtAffElt{-W_->act(wi, a.t), wi};
    }

    // Affine action on weights: (lambda, u)(x) = lambda + u(x).
    Weight act(const ExtAffElt& e, const Weight& x) const { return e.t + W_->act(e.w, x); }

    AffineRoot act_root(const ExtAffElt& e, const AffineRoot& a) const {
        int img = W_->root_image(e.w, a.coroot_of);
        long c = rs_->pair_coroot_int(e.t, img);
        return AffineRoot{img, a.n - c};
    }

    bool is_positive(const AffineRoot& a) const {
        if (a.n != 0) return a.n > 0;
        return rs_->root(a.coroot_of).positive;
    }

    AffineRoot affine_simple_root(int i) const {
        if (i == 0) return AffineRoot{rs_->root(theta_).negative_of, 1};
        return AffineRoot{rs_->simple_roots()[i - 1], 0};
    }

    // a(-rho) contributions are formed by callers; here just the inversion
    // set {a > 0 : e.a < 0}, finite because n is capped by the translation
    // pairings.
    std::vector<AffineRoot> inversions(const ExtAffElt& e) const {
        std::vector<AffineRoot> out;
        for (size_t r = 0; r < rs_->n_roots(); ++r) {
            int ri = static_cast<int>(r);
            long n_lo = rs_->root(ri).positive ? 0 : 1;
            int img = W_->root_image(e.w, ri);
            long c = rs_->pair_coroot_int(e.t, img);
            for (long n = n_lo; n <= std::max(c, n_lo); ++n) {
                AffineRoot a{ri, n};
                if (!is_positive(a)) continue;
                if (!is_positive(act_root(e, a))) out.push_back(a);
            }
        }
        return out;
    }

    long length(const ExtAffElt& e) const { return static_cast<long>(inversions(e).size()); }

    // Greedy right-descent factorization e = omega * r_{i_1} ... r_{i_l}.
    AffineDecomposition decompose(const ExtAffElt& e) const {
        AffineDecomposition out;
        ExtAffElt cur = e;
        std::vector<int> rev;
        long len = length(cur);
        while (len > 0) {
            bool found = false;
            for (int i = 0; i <= rs_->rank(); ++i) {
                AffineRoot a = affine_simple_root(i);
                if (!is_positive(act_root(cur, a))) {
                    cur = mul(cur, simple(i));
                    rev.push_back(i);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("positive length but no descent");
            long nl = length(cur);
            if (nl != len - 1) throw std::logic_error("descent failed to shorten");
            len = nl;
        }
        out.omega = cur;
        out.word.assign(rev.rbegin(), rev.rend());
        return out;
    }

    // Nodes r with coefficient 1 in theta^vee = sum n_i alpha_i^vee.
    std::vector<int> minuscule_nodes() const {
        std::vector<int> out;
        const Root& th = rs_->root(theta_);
        for (int i = 0; i < rs_->rank(); ++i)
            if (th.coroot_alpha[i] == 1) out.push_back(i);
        return out;
    }

    // The length-zero subgroup: identity plus omega_r = t_{lambda_r} u_r for
    // each minuscule node, u_r = w_{lambda_r} w_0.
    std::vector<ExtAffElt> omega_group() const {
        std::vector<ExtAffElt> out{identity()};
        for (int r : minuscule_nodes()) {
            Weight lam = rs_->fundamental_weight(r);
            std::vector<int> stab;
            for (int i = 0; i < rs_->rank(); ++i)
                if (i != r) stab.push_back(i);
            int wl = W_->parabolic_longest(stab);
            int u = W_->mul(wl, W_->longest());
            ExtAffElt om{lam, u};
            if (length(om) != 0) throw std::logic_error("omega element has positive length");
            out.push_back(om);
        }
        return out;
    }

    ExtAffElt min_length_rep(const Weight& lam) const {
        ExtAffElt best{lam, W_->identity()};
        long best_len = length(best);
        for (size_t u = 0; u < W_->size(); ++u) {
            ExtAffElt cand{lam, static_cast<int>(u)};
            long l = length(cand);
            if (l < best_len) {
                best = cand;
                best_len = l;
            }
        }
        return best;
    }

  private:
    const RootSystem* rs_;
    const WeylGroup* W_;
    int theta_;
};

}  // namespace cherednik
