#pragma once

// Laurent polynomials on the torus, C[H] = span{e^mu}, over a generic exact
// scalar K (rationals, or rational functions of the multiplicities).
//
// Supports live in (1/2)P so the Weyl denominator and the half-sum shifts
// stay inside one lattice.  All operations are term-sparse and exact.

#include "ratfunc.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

template <class K>
class LaurentPoly {
  public:
    using Ops = ScalarOps<K>;

    LaurentPoly() : rank_(0) {}
    explicit LaurentPoly(int rank) : rank_(rank) {}

    static LaurentPoly monomial(const Weight& mu, const K& c) {
        LaurentPoly f(static_cast<int>(mu.c2.size()));
        f.add_term(mu, c);
        return f;
    }
    static LaurentPoly one(int rank) {
        return monomial(Weight{std::vector<long long>(rank, 0)}, Ops::one());
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t n_terms() const { return terms_.size(); }
    const std::map<Weight, K>& terms() const { return terms_; }

    void add_term(const Weight& mu, const K& c) {
        if (Ops::is_zero(c)) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            terms_.emplace(mu, c);
        } else {
            it->second = it->second + c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(const Weight& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Ops::zero() : it->second;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [mu, c] : o.terms_) r.add_term(mu, Ops::zero() - c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(rank_);
        for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, Ops::zero() - c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r(std::max(rank_, o.rank_));
        for (const auto& [mu, c] : terms_)
            for (const auto& [nu, d] : o.terms_) r.add_term(mu + nu, c * d);
        return r;
    }
    LaurentPoly scaled(const K& s) const {
        LaurentPoly r(rank_);
        if (Ops::is_zero(s)) return r;
        for (const auto& [mu, c] : terms_) r.add_term(mu, c * s);
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(terms_ == o.terms_); }

    // e^mu -> e^{-mu} with coefficients conjugated; exact scalars are real.
    LaurentPoly bar() const {
        LaurentPoly r(rank_);
        for (const auto& [mu, c] : terms_) r.terms_.emplace(-mu, c);
        return r;
    }

    K constant_term() const {
        return coeff(Weight{std::vector<long long>(rank_, 0)});
    }

    // Evaluation at the identity element of the torus.
    K eval_identity() const {
        K s = Ops::zero();
        for (const auto& [mu, c] : terms_) s = s + c;
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [mu, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += "(" + Ops::str(c) + ")*e" + mu.str();
        }
        return out;
    }

  private:
    int rank_;
    std::map<Weight, K> terms_;
};

template <class K>
LaurentPoly<K> w_act(const WeylGroup& W, int w, const LaurentPoly<K>& f) {
    LaurentPoly<K> r(f.rank());
    for (const auto& [mu, c] : f.terms()) r.add_term(W.act(w, mu), c);
    return r;
}

// (1 - e^{-alpha})^{-1} (1 - r_alpha), computed by the closed form on
// monomials; stays inside C[H], no division happens.
template <class K>
LaurentPoly<K> divided_difference(const RootSystem& rs, int root_idx, const LaurentPoly<K>& f) {
    if (!rs.root(root_idx).positive)
        throw std::invalid_argument("divided difference wants a positive root");
    LaurentPoly<K> out(f.rank());
    Weight alpha = rs.root_weight(root_idx);
    for (const auto& [mu, c] : f.terms()) {
        Rational pr = rs.pair_coroot(mu, root_idx);
        long p = to_long(pr);  // half-weights with odd pairing have no image in C[H]
        if (p > 0) {
            Weight cur = mu;
            for (long j = 0; j < p; ++j) {
                out.add_term(cur, c);
                cur = cur - alpha;
            }
        } else if (p < 0) {
            Weight cur = rs.reflect(mu, root_idx);
            for (long j = 0; j < -p; ++j) {
                out.add_term(cur, ScalarOps<K>::zero() - c);
                cur = cur - alpha;
            }
        }
    }
    return out;
}

// Delta = prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}).
template <class K>
LaurentPoly<K> weyl_denominator(const RootSystem& rs) {
    LaurentPoly<K> out = LaurentPoly<K>::one(rs.rank());
    for (int r : rs.positive_roots()) {
        Weight half = rs.half_root_weight(r);
        LaurentPoly<K> fac(rs.rank());
        fac.add_term(half, ScalarOps<K>::one());
        fac.add_term(-half, ScalarOps<K>::zero() - ScalarOps<K>::one());
        out = out * fac;
    }
    return out;
}

// The alternating sum form sum_w eps(w) e^{w delta}; agrees with the product.
template <class K>
LaurentPoly<K> weyl_denominator_sum(const RootSystem& rs, const WeylGroup& W) {
    LaurentPoly<K> out(rs.rank());
    Weight delta = rs.delta_weight();
    for (size_t w = 0; w < W.size(); ++w) {
        int wi = static_cast<int>(w);
        K c = W.sign(wi) > 0 ? ScalarOps<K>::one() : ScalarOps<K>::zero() - ScalarOps<K>::one();
        out.add_term(W.act(wi, delta), c);
    }
    return out;
}

namespace detail {
// Height functional separating e^delta as the unique top term of Delta.
inline Rational weight_height(const RootSystem& rs, const Weight& mu) {
    RatVec a = rs.alpha_coords(mu);
    Rational s = 0;
    for (const auto& x : a) s += x;
    return s;
}
}  // namespace detail

template <class K>
bool is_skew(const RootSystem& rs, const WeylGroup& W, const LaurentPoly<K>& f) {
    for (int i = 0; i < rs.rank(); ++i)
        if (w_act(W, W.simple(i), f) != -f) return false;
    return true;
}

template <class K>
bool is_symmetric(const RootSystem& rs, const WeylGroup& W, const LaurentPoly<K>& f) {
    for (int i = 0; i < rs.rank(); ++i)
        if (w_act(W, W.simple(i), f) != f) return false;
    return true;
}

// Exact division of a skew element by Delta; the quotient is W-invariant.
template <class K>
LaurentPoly<K> divide_by_delta(const RootSystem& rs, const WeylGroup& W,
                               const LaurentPoly<K>& f) {
    if (!is_skew(rs, W, f)) throw std::invalid_argument("dividend is not skew");
    LaurentPoly<K> delta = weyl_denominator<K>(rs);
    Weight dtop = rs.delta_weight();
    LaurentPoly<K> rem = f, quot(f.rank());
    size_t guard = 64 + 8 * f.n_terms() * W.size();
    while (!rem.is_zero()) {
        if (guard-- == 0) throw std::logic_error("skew division failed to terminate");
        // leading term under the height order, ties broken by the map order
        const Weight* top = nullptr;
        Rational toph;
        for (const auto& [mu, c] : rem.terms()) {
            Rational h = detail::weight_height(rs, mu);
            if (!top || h > toph) {
                top = &mu;
                toph = h;
            }
        }
        Weight q = *top - dtop;
        K c = rem.coeff(*top);
        quot.add_term(q, c);
        rem = rem - delta.scaled(c) * LaurentPoly<K>::monomial(q, ScalarOps<K>::one());
    }
    return quot;
}

// Constant term of f bar(g) prod_{alpha>0} ((1-e^alpha)(1-e^{-alpha}))^{k_alpha}
// for nonnegative integer multiplicities, one per root orbit.
template <class K>
K inner_product_int_k(const RootSystem& rs, const LaurentPoly<K>& f, const LaurentPoly<K>& g,
                      const std::vector<long>& k_orbit) {
    if (static_cast<int>(k_orbit.size()) != rs.n_orbits())
        throw std::invalid_argument("one multiplicity per orbit expected");
    for (long kv : k_orbit)
        if (kv < 0) throw std::invalid_argument("integer multiplicities must be nonnegative");
    LaurentPoly<K> weight = LaurentPoly<K>::one(rs.rank());
    for (int r : rs.positive_roots()) {
        Weight alpha = rs.root_weight(r);
        LaurentPoly<K> fac(rs.rank());
        // (1 - e^alpha)(1 - e^{-alpha}) = 2 - e^alpha - e^{-alpha}
        K one = ScalarOps<K>::one();
        fac.add_term(rs.zero_weight(), one + one);
        fac.add_term(alpha, ScalarOps<K>::zero() - one);
        fac.add_term(-alpha, ScalarOps<K>::zero() - one);
        for (long j = 0; j < k_orbit[rs.root(r).orbit]; ++j) weight = weight * fac;
    }
    return (f * g.bar() * weight).constant_term();
}

}  // namespace cherednik
