#pragma once

// Nonsymmetric polynomials E(lambda,k), normalized with coefficient 1 on
// e^lambda, by three routes:
//   - chains of affine intertwiners along the shortest w with w(0) = lambda,
//   - a triangular solve of the joint eigenvalue equations,
//   - Gram-Schmidt against the constant-term inner product (integer k only).
// The first two work with symbolic multiplicities; the third is the
// operator-free oracle.

#include "cherednik_ops.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace cherednik {

// All weights mu with mu = lambda or mu strictly below lambda in the modified
// order; this carries the support of E(lambda,k).
inline std::vector<Weight> order_ideal(const RootSystem& rs, const WeylGroup& W,
                                       const Weight& lam) {
    Weight dom = rs.dominant_rep(lam);
    Weight w0dom = W.act(W.longest(), dom);
    RatVec extent = rs.alpha_coords(dom - w0dom);
    std::vector<long> cap(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) cap[i] = to_long(extent[i]);

    std::vector<Weight> out;
    std::vector<long> c(rs.rank(), 0);
    // walk the box of nonnegative root-lattice drops from the dominant rep
    while (true) {
        Weight mu = dom;
        for (int i = 0; i < rs.rank(); ++i) {
            Weight al = rs.root_weight(rs.simple_roots()[i]);
            mu = mu - al * c[i];
        }
        if (rs.is_dominant(mu))
            for (const Weight& nu : W.orbit(mu))
                if (nu == lam || rs.cher_lt(nu, lam)) out.push_back(nu);
        int pos = 0;
        while (pos < rs.rank() && c[pos] == cap[pos]) c[pos++] = 0;
        if (pos == rs.rank()) break;
        ++c[pos];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Linear extension of the modified order, largest first.
inline std::vector<Weight> descending_extension(const RootSystem& rs, std::vector<Weight> set) {
    std::vector<Weight> out;
    while (!set.empty()) {
        size_t pick = set.size();
        for (size_t i = 0; i < set.size(); ++i) {
            bool maximal = true;
            for (size_t j = 0; j < set.size(); ++j)
                if (j != i && rs.cher_lt(set[i], set[j])) maximal = false;
            if (maximal) {
                pick = i;
                break;
            }
        }
        if (pick == set.size()) throw std::logic_error("cycle in the modified order");
        out.push_back(set[pick]);
        set.erase(set.begin() + pick);
    }
    return out;
}

template <class K>
LaurentPoly<K> E_by_intertwiners(const DunklContext<K>& ctx, const Weight& lam) {
    using Ops = ScalarOps<K>;
    if (!lam.in_P()) throw std::invalid_argument("lambda must lie in P");
    const AffineWeyl& aff = ctx.affine();
    ExtAffElt e = aff.min_length_rep(lam);
    {
        // the shortest coset representative is unique
        long len = aff.length(e);
        int hits = 0;
        for (size_t u = 0; u < ctx.weyl().size(); ++u)
            if (aff.length(ExtAffElt{lam, static_cast<int>(u)}) == len) ++hits;
        if (hits != 1) throw std::logic_error("shortest representative not unique");
    }
    AffineDecomposition dec = aff.decompose(e);
    LaurentPoly<K> f = ctx.apply_intertwiner_word(dec.word, LaurentPoly<K>::one(ctx.rs().rank()));
    f = ctx.apply_pi(dec.omega, f);
    K lead = f.coeff(lam);
    if (Ops::is_zero(lead))
        throw std::domain_error("intertwiner chain degenerates at these parameters");
    if (!Ops::is_zero(lead - ctx.d_factor(e)))
        throw std::logic_error("leading coefficient disagrees with the inversion product");
    LaurentPoly<K> E(ctx.rs().rank());
    for (const auto& [mu, c] : f.terms()) E.add_term(mu, c / lead);
    // spot-check the eigenvalue equation in one direction
    CoWeight xi(ctx.rs().rank());
    for (int j = 0; j < ctx.rs().rank(); ++j) xi[j] = j + 1;
    std::vector<K> lt = ctx.eigenvalue(lam);
    if (ctx.apply_T(xi, E) != E.scaled(ctx.spectral_pair(lt, xi)))
        throw std::logic_error("intertwiner output fails the eigenvalue equation");
    return E;
}

template <class K>
LaurentPoly<K> E_by_triangular_solve(const DunklContext<K>& ctx, const Weight& lam) {
    using Ops = ScalarOps<K>;
    if (!lam.in_P()) throw std::invalid_argument("lambda must lie in P");
    const RootSystem& rs = ctx.rs();
    const int n = rs.rank();
    std::vector<Weight> ideal = order_ideal(rs, ctx.weyl(), lam);
    std::vector<Weight> order = descending_extension(rs, ideal);
    if (order.empty() || !(order.front() == lam))
        throw std::logic_error("lambda is not the top of its own ideal");

    std::map<Weight, std::vector<K>> spectra;
    for (const Weight& mu : ideal) spectra[mu] = ctx.eigenvalue(mu);
    const std::vector<K>& lt = spectra.at(lam);

    // images T_j e^nu, computed on demand
    std::map<std::pair<int, Weight>, LaurentPoly<K>> timage;
    auto tj_monomial = [&](int j, const Weight& nu) -> const LaurentPoly<K>& {
        auto key = std::make_pair(j, nu);
        auto it = timage.find(key);
        if (it == timage.end())
            it = timage
                     .emplace(key, ctx.apply_T(ctx.fundamental_coweight(j),
                                               LaurentPoly<K>::monomial(nu, Ops::one())))
                     .first;
        return it->second;
    };

    std::map<Weight, K> coeff;
    coeff[lam] = Ops::one();
    for (size_t pos = 1; pos < order.size(); ++pos) {
        const Weight& mu = order[pos];
        const std::vector<K>& mt = spectra.at(mu);
        int sep = -1;
        for (int j = 0; j < n; ++j)
            if (!Ops::is_zero(lt[j] - mt[j])) {
                sep = j;
                break;
            }
        if (sep < 0) throw std::domain_error("eigenvalue collision in the ideal");
        K acc = Ops::zero();
        for (size_t prev = 0; prev < pos; ++prev) {
            const Weight& nu = order[prev];
            if (!rs.cher_lt(mu, nu)) continue;
            acc = acc + coeff.at(nu) * tj_monomial(sep, nu).coeff(mu);
        }
        coeff[mu] = acc / (lt[sep] - mt[sep]);
    }

    LaurentPoly<K> E(n);
    for (const auto& [mu, c] : coeff) E.add_term(mu, c);
    // full verification against every generator
    for (int j = 0; j < n; ++j)
        if (ctx.apply_T(ctx.fundamental_coweight(j), E) != E.scaled(lt[j]))
            throw std::logic_error("triangular solve violates an eigenvalue equation");
    return E;
}

// Integer-k oracle: orthogonalize e^lambda against the smaller monomials
// under the constant-term pairing.  No Cherednik operators involved.
inline LaurentPoly<Rational> E_by_gram_schmidt(const RootSystem& rs, const WeylGroup& W,
                                               const Weight& lam,
                                               const std::vector<long>& k_orbit) {
    std::vector<Weight> ideal = order_ideal(rs, W, lam);
    std::vector<Weight> order = descending_extension(rs, ideal);
    std::reverse(order.begin(), order.end());  // ascending: build E from the bottom

    std::map<Weight, LaurentPoly<Rational>> basis;
    LaurentPoly<Rational> result(rs.rank());
    for (const Weight& mu : order) {
        LaurentPoly<Rational> E = LaurentPoly<Rational>::monomial(mu, Rational(1));
        for (const auto& [nu, Enu] : basis) {
            if (!rs.cher_lt(nu, mu)) continue;
            Rational num = inner_product_int_k(rs, E, Enu, k_orbit);
            if (num == 0) continue;
            Rational den = inner_product_int_k(rs, Enu, Enu, k_orbit);
            if (den == 0) throw std::logic_error("degenerate norm in Gram-Schmidt");
            E = E - Enu.scaled(num / den);
        }
        if (mu == lam) {
            result = E;
            break;
        }
        basis.emplace(mu, E);
    }
    if (result.is_zero()) throw std::logic_error("lambda missing from its ideal");
    return result;
}

// Small cache keyed by weight; one per context/parameter choice.
template <class K>
class EPolyCache {
  public:
    explicit EPolyCache(const DunklContext<K>& ctx) : ctx_(&ctx) {}

    const LaurentPoly<K>& get(const Weight& lam) {
        auto it = table_.find(lam);
        if (it == table_.end()) it = table_.emplace(lam, E_by_intertwiners(*ctx_, lam)).first;
        return it->second;
    }

  private:
    const DunklContext<K>* ctx_;
    std::map<Weight, LaurentPoly<K>> table_;
};

}  // namespace cherednik
