#pragma once

// Jack polynomials in the integral J normalization, extracted from the
// rank n-1 symmetric family: substitute the reciprocal parameter and scale
// by the lower hook product.  Monomial coefficients come out as polynomials
// in the Jack parameter.

#include "jacobi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

using Partition = std::vector<long>;  // weakly decreasing positive parts

inline long partition_size(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

inline std::vector<Partition> partitions_of(long n, long max_parts) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long rem, long cap) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<long>(cur.size()) == max_parts) return;
        for (long next = std::min(rem, cap); next >= 1; --next) {
            cur.push_back(next);
            self(self, rem - next, next);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// partition with at most n parts -> dominant weight of A_{n-1}
inline Weight partition_weight(const RootSystem& rs, const Partition& p) {
    const int n = rs.rank() + 1;
    if (static_cast<int>(p.size()) > n) throw std::invalid_argument("too many parts");
    Weight w = rs.zero_weight();
    for (int i = 0; i < rs.rank(); ++i) {
        long pi = i < static_cast<long>(p.size()) ? p[i] : 0;
        long pj = i + 1 < static_cast<long>(p.size()) ? p[i + 1] : 0;
        w.c2[i] = 2 * (pi - pj);
    }
    return w;
}

inline long arm_length(const Partition& p, long row, long col) { return p[row] - col - 1; }

inline long leg_length(const Partition& p, long row, long col) {
    long l = 0;
    for (size_t r = row + 1; r < p.size(); ++r)
        if (p[r] >= col + 1) ++l;
    return l;
}

// prod over cells of (alpha * arm + leg + 1), a polynomial in alpha
inline MPoly lower_hook_product(const Partition& p) {
    MPoly out = MPoly::constant(1, 1);
    for (size_t r = 0; r < p.size(); ++r)
        for (long c = 0; c < p[r]; ++c) {
            MPoly fac = MPoly::variable(1, 0) * Rational(arm_length(p, r, c)) +
                        MPoly::constant(1, Rational(leg_length(p, r, c) + 1));
            out = out * fac;
        }
    return out;
}

// prod_i (number of parts equal to i)!
inline Rational part_multiplicity_factorial(const Partition& p) {
    Rational u = 1;
    std::map<long, long> mult;
    for (long x : p) ++mult[x];
    for (const auto& [part, m] : mult)
        for (long j = 2; j <= m; ++j) u *= Rational(j);
    return u;
}

struct JackTerm {
    Partition nu;
    RatFunc v;  // coefficient of the monomial symmetric function m_nu
};

// Monomial expansion of J_lambda in nvars variables.
inline std::vector<JackTerm> jack_expansion(int nvars, const Partition& lam) {
    if (nvars < 2) throw std::invalid_argument("need at least two variables");
    if (static_cast<int>(lam.size()) > nvars) throw std::invalid_argument("too many parts");
    RootSystem rs("A" + std::to_string(nvars - 1));
    WeylGroup W(rs);
    auto ctx = symbolic_context(rs, W);
    LaurentPoly<RatFunc> P = jacobi_poly(ctx, partition_weight(rs, lam));
    RatFunc hook(lower_hook_product(lam), MPoly::constant(1, 1));

    std::vector<JackTerm> out;
    for (const Partition& nu : partitions_of(partition_size(lam), nvars)) {
        RatFunc c = P.coeff(partition_weight(rs, nu));
        if (c.is_zero()) continue;
        out.push_back(JackTerm{nu, c.substitute_reciprocal(0) * hook});
    }
    return out;
}

}  // namespace cherednik
