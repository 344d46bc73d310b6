#pragma once
// Plancherel-side spectral data: the densities weighting the inversion
// formulas, the integrability window for the weight function, exact
// enumeration of residual subspaces of the shifted coroot arrangement with
// their centers and classification flags, residue densities along tempered
// forms, the normal-crossing residue model, and a rank-one integral
// cross-check of the closed-form mass formula.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypergeom.hpp"

namespace cherednik {

struct PoleAtArgument : std::runtime_error {
    PoleAtArgument() : std::runtime_error("density has a pole at this spectral parameter") {}
};
struct NotIntegrable : std::runtime_error {
    NotIntegrable() : std::runtime_error("weight function is not integrable for this multiplicity") {}
};
struct NotNormalCrossing : std::runtime_error {
    NotNormalCrossing() : std::runtime_error("arrangement is not a full-rank normal crossing") {}
};
struct OriginNotInAntidual : std::runtime_error {
    OriginNotInAntidual() : std::runtime_error("origin misses the antidual cone of the arrangement") {}
};

// ---------------------------------------------------------------------------
// densities on the spectrum

struct SigmaDensities {
    Cplx sigma = 0.0;
    Cplx sigma_prime = 0.0;
};

// sigma has the shifted-by-one second Gamma pair, sigma_prime the symmetric
// one; the latter equals 1/(c(lambda)c(-lambda)) with the normalized
// c-function.
inline SigmaDensities sigma_densities(const NumericContext& ctx, const CVec& lam) {
    Cplx acc_s = 0.0, acc_p = 0.0;
    for (int r : ctx.rs->positive_roots()) {
        double kr = ctx.kroot[r];
        if (kr == 0.0) continue;  // both quotients are identically one
        Cplx v = pair_num(ctx, lam, r);
        acc_s += lgamma_c(v + kr) + lgamma_c(-v + kr + 1.0) - lgamma_c(v) - lgamma_c(-v + 1.0);
        acc_p += lgamma_c(v + kr) + lgamma_c(-v + kr) - lgamma_c(v) - lgamma_c(-v);
    }
    SigmaDensities d;
    d.sigma = std::exp(acc_s);
    d.sigma_prime = std::exp(acc_p);
    for (Cplx z : {d.sigma, d.sigma_prime})
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw PoleAtArgument();
    return d;
}

// relative residual of sigma_prime against 1/(c(lambda) c(-lambda))
inline double sigma_c_identity_residual(const NumericContext& ctx, const CVec& lam) {
    SigmaDensities d = sigma_densities(ctx, lam);
    CVec neg(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) neg[i] = -lam[i];
    Cplx cc = c_tilde_numeric(ctx, lam, ctx.W->identity()) *
              c_tilde_numeric(ctx, neg, ctx.W->identity());
    return std::abs(d.sigma_prime - 1.0 / cc) / std::abs(d.sigma_prime);
}

// pairing with the affine simple coroots: index 0 is the affine one, whose
// level pairs to 1 - lambda(theta^vee) with theta the highest short root
inline Cplx affine_pair(const NumericContext& ctx, const CVec& lam, int i) {
    if (i == 0) return Cplx(1.0) - pair_num(ctx, lam, ctx.rs->theta_short());
    return lam[static_cast<size_t>(i - 1)];
}

inline double affine_mult(const NumericContext& ctx, int i) {
    if (i == 0) return ctx.kroot[ctx.rs->theta_short()];
    return ctx.kroot[ctx.rs->simple_roots()[static_cast<size_t>(i - 1)]];
}

// simple affine reflections on the spectral parameter; the affine one is the
// theta-reflection followed by the translation by theta
inline CVec affine_reflect(const NumericContext& ctx, const CVec& lam, int i) {
    if (i == 0) {
        int th = ctx.rs->theta_short();
        CVec out = act_num(ctx, ctx.W->reflection(th), lam);
        const auto& tf = ctx.rs->root(th).pair_sv;
        for (int j = 0; j < ctx.n; ++j) out[j] += static_cast<double>(tf[j]);
        return out;
    }
    return act_num(ctx, ctx.W->reflection(ctx.rs->simple_roots()[static_cast<size_t>(i - 1)]), lam);
}

// ---------------------------------------------------------------------------
// integrability of the weight function

// True when the multiplicity lies in one of the two covered windows: all
// nonnegative, or all negative with rho(k)(theta^vee) + k_theta + 1 > 0
// (theta the highest short root).  Mixed signs fall outside both.
inline bool integrability_check(const RootSystem& rs, const std::vector<Rational>& korb) {
    bool all_nonneg = true, all_neg = true;
    for (const Rational& kv : korb) {
        if (kv < 0) all_nonneg = false;
        if (kv >= 0) all_neg = false;
    }
    if (all_nonneg) return true;
    if (!all_neg) return false;
    int th = rs.theta_short();
    const RatVec& ca = rs.root(th).coroot_alpha;
    Rational s = 0;
    for (int r : rs.positive_roots()) {
        Rational p = 0;
        for (int m = 0; m < rs.rank(); ++m)
            p += ca[static_cast<size_t>(m)] * Rational(rs.root(r).pair_sv[static_cast<size_t>(m)]);
        s += korb[static_cast<size_t>(rs.root(r).orbit)] * p;
    }
    s /= 2;
    s += korb[static_cast<size_t>(rs.root(th).orbit)] + 1;
    return s > 0;
}

// ---------------------------------------------------------------------------
// residual subspaces of the shifted arrangement

namespace spectral_detail {

// row-reduced echelon form of [M|b]; returns the rank, or -1 when the system
// is inconsistent; M and b are truncated to the pivot rows
inline int rref_system(RatMat& M, RatVec& b) {
    const int rows = static_cast<int>(M.size());
    const int n = rows ? static_cast<int>(M[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < n && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
        std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(rank)]);
        Rational s = 1 / M[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int j = 0; j < n; ++j) M[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= s;
        b[static_cast<size_t>(rank)] *= s;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rational f = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                M[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * M[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(rank)];
        }
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (b[static_cast<size_t>(r)] != 0) return -1;
    M.resize(static_cast<size_t>(rank));
    b.resize(static_cast<size_t>(rank));
    return rank;
}

inline std::string system_key(const RatMat& M, const RatVec& b) {
    std::string s;
    for (size_t r = 0; r < M.size(); ++r) {
        for (const Rational& x : M[r]) {
            s += x.get_str();
            s += ',';
        }
        s += '=';
        s += b[r].get_str();
        s += ';';
    }
    return s;
}

inline std::vector<int> pivot_columns(const RatMat& M) {
    std::vector<int> piv;
    const int n = M.empty() ? 0 : static_cast<int>(M[0].size());
    int col = 0;
    for (size_t r = 0; r < M.size(); ++r) {
        while (col < n && M[r][static_cast<size_t>(col)] == 0) ++col;
        piv.push_back(col);
        ++col;
    }
    return piv;
}

inline RatVec particular_solution(const RatMat& M, const RatVec& b, int n) {
    RatVec x(static_cast<size_t>(n), Rational(0));
    std::vector<int> piv = pivot_columns(M);
    for (size_t r = 0; r < M.size(); ++r) x[static_cast<size_t>(piv[r])] = b[r];
    return x;
}

inline std::vector<RatVec> nullspace_basis(const RatMat& M, int n) {
    std::vector<int> piv = pivot_columns(M);
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<RatVec> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_piv[static_cast<size_t>(fc)]) continue;
        RatVec v(static_cast<size_t>(n), Rational(0));
        v[static_cast<size_t>(fc)] = 1;
        for (size_t r = 0; r < M.size(); ++r)
            v[static_cast<size_t>(piv[r])] = -M[r][static_cast<size_t>(fc)];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::string vec_key(const RatVec& v) {
    std::string s;
    for (const Rational& x : v) {
        s += x.get_str();
        s += ',';
    }
    return s;
}

// gram matrix of the coordinate functionals lambda(alpha_i^vee): expresses
// the root-space inner product in those coordinates
inline RatMat fundamental_gram(const RootSystem& rs) {
    const int n = rs.rank();
    RatMat M(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rational(rs.root(rs.simple_roots()[static_cast<size_t>(j)])
                             .pair_sv[static_cast<size_t>(i)]);
    RatMat Minv = mat_inverse(M);
    const RatMat& G = rs.gram();
    RatMat B(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = 0;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    s += Minv[static_cast<size_t>(p)][static_cast<size_t>(i)] *
                         G[static_cast<size_t>(p)][static_cast<size_t>(q)] *
                         Minv[static_cast<size_t>(q)][static_cast<size_t>(j)];
            B[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return B;
}

}  // namespace spectral_detail

// An affine subspace on which the arrangement counting condition holds, in
// the coordinates f_i = lambda(alpha_i^vee).
struct ResidualSubspace {
    int codim = 0;
    RatVec center;                   // orthogonal projection of the origin
    RatVec basepoint;                // some point of the subspace
    std::vector<RatVec> directions;  // basis of the linear part
    long count_k = 0;                // roots (both signs) with pairing == its multiplicity
    long count_zero = 0;             // roots (both signs) with pairing == 0
    std::vector<int> constant_roots;  // positive-root indices constant here
    RatVec constant_values;
    bool distinguished = false;  // a single point
    bool center_distinguished = false;
    bool minus_center_in_orbit = false;
    RatMat eqs;  // defining system in row-reduced form
    RatVec levels;
};

// Brute-force walk of the intersection lattice of the hyperplanes
// lambda(alpha^vee) = +-k_alpha; keeps the subspaces where the count of
// multiplicity-level roots at least matches the zero-level count plus the
// codimension, with the classification flags evaluated on each.  With any
// zero multiplicity only the full space is returned.
inline std::vector<ResidualSubspace> enumerate_residual(const RootSystem& rs,
                                                        const std::vector<Rational>& korb,
                                                        bool dominant_only = false) {
    namespace det = spectral_detail;
    const int n = rs.rank();
    bool degenerate = false;
    for (const Rational& kv : korb)
        if (kv == 0) degenerate = true;

    std::vector<std::pair<RatVec, Rational>> walls;
    if (!degenerate) {
        for (int r : rs.positive_roots()) {
            Rational kr = korb[static_cast<size_t>(rs.root(r).orbit)];
            walls.emplace_back(rs.root(r).coroot_alpha, kr);
            walls.emplace_back(rs.root(r).coroot_alpha, -kr);
        }
    }

    struct Sys {
        RatMat M;
        RatVec b;
        int rank = 0;
    };
    std::map<std::string, Sys> lattice;
    std::vector<std::string> todo;
    {
        Sys root_sys;
        std::string k0 = det::system_key(root_sys.M, root_sys.b);
        lattice.emplace(k0, root_sys);
        todo.push_back(k0);
    }
    while (!todo.empty()) {
        std::string key = todo.back();
        todo.pop_back();
        Sys cur = lattice[key];
        for (const auto& [row, level] : walls) {
            RatMat M = cur.M;
            RatVec b = cur.b;
            M.push_back(row);
            b.push_back(level);
            int rank = det::rref_system(M, b);
            if (rank < 0 || rank == cur.rank) continue;
            std::string nk = det::system_key(M, b);
            if (lattice.count(nk)) continue;
            lattice.emplace(nk, Sys{M, b, rank});
            todo.push_back(nk);
        }
    }

    RatMat B = det::fundamental_gram(rs);
    std::vector<ResidualSubspace> out;
    for (auto& [key, sys] : lattice) {
        ResidualSubspace L;
        L.codim = sys.rank;
        L.eqs = sys.M;
        L.levels = sys.b;
        L.basepoint = det::particular_solution(sys.M, sys.b, n);
        L.directions = det::nullspace_basis(sys.M, n);

        for (int r : rs.positive_roots()) {
            const RatVec& row = rs.root(r).coroot_alpha;
            bool constant = true;
            for (const RatVec& d : L.directions)
                if (det::dot(row, d) != 0) constant = false;
            if (!constant) continue;
            Rational val = det::dot(row, L.basepoint);
            Rational kr = korb[static_cast<size_t>(rs.root(r).orbit)];
            L.constant_roots.push_back(r);
            L.constant_values.push_back(val);
            if (val == kr) ++L.count_k;
            if (val == -kr) ++L.count_k;
            if (val == 0) L.count_zero += 2;
        }
        if (L.count_k < L.count_zero + L.codim) continue;

        // orthogonal projection of the origin onto the subspace
        const size_t m = L.directions.size();
        if (m == 0) {
            L.center = L.basepoint;
        } else {
            RatMat A(m, RatVec(m, Rational(0)));
            RatVec rhs(m, Rational(0));
            RatVec Bp(static_cast<size_t>(n), Rational(0));
            for (int i = 0; i < n; ++i)
                Bp[static_cast<size_t>(i)] = det::dot(B[static_cast<size_t>(i)], L.basepoint);
            for (size_t a = 0; a < m; ++a) {
                rhs[a] = -det::dot(L.directions[a], Bp);
                for (size_t c = 0; c < m; ++c) {
                    RatVec Bd(static_cast<size_t>(n), Rational(0));
                    for (int i = 0; i < n; ++i)
                        Bd[static_cast<size_t>(i)] =
                            det::dot(B[static_cast<size_t>(i)], L.directions[c]);
                    A[a][c] = det::dot(L.directions[a], Bd);
                }
            }
            RatVec t;
            if (!solve_linear(A, rhs, t)) throw std::logic_error("degenerate direction gram");
            L.center = L.basepoint;
            for (size_t a = 0; a < m; ++a)
                for (int i = 0; i < n; ++i)
                    L.center[static_cast<size_t>(i)] += t[a] * L.directions[a][static_cast<size_t>(i)];
        }
        L.distinguished = (L.codim == n);

        {
            RatMat rows;
            for (int r : L.constant_roots) rows.push_back(rs.root(r).coroot_alpha);
            RatVec dummy(rows.size(), Rational(0));
            int rank_rl = rows.empty() ? 0 : det::rref_system(rows, dummy);
            L.center_distinguished = (L.count_k == L.count_zero + rank_rl);
        }

        {
            // orbit of the center under the reflections of the constant roots
            std::set<std::string> seen;
            std::vector<RatVec> frontier{L.center};
            seen.insert(det::vec_key(L.center));
            RatVec neg(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) neg[static_cast<size_t>(i)] = -L.center[static_cast<size_t>(i)];
            std::string neg_key = det::vec_key(neg);
            while (!frontier.empty()) {
                RatVec f = frontier.back();
                frontier.pop_back();
                for (int r : L.constant_roots) {
                    Rational s = det::dot(rs.root(r).coroot_alpha, f);
                    RatVec g = f;
                    for (int i = 0; i < n; ++i)
                        g[static_cast<size_t>(i)] -=
                            s * Rational(rs.root(r).pair_sv[static_cast<size_t>(i)]);
                    std::string gk = det::vec_key(g);
                    if (seen.insert(gk).second) frontier.push_back(std::move(g));
                }
            }
            L.minus_center_in_orbit = seen.count(neg_key) > 0;
        }

        if (dominant_only) {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                if (L.center[static_cast<size_t>(i)] > 0) ok = false;
            if (!ok) continue;
        }
        out.push_back(std::move(L));
    }

    std::sort(out.begin(), out.end(), [](const ResidualSubspace& x, const ResidualSubspace& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        for (size_t i = 0; i < x.center.size(); ++i)
            if (x.center[i] != y.center[i]) return x.center[i] < y.center[i];
        for (size_t i = 0; i < x.basepoint.size(); ++i)
            if (x.basepoint[i] != y.basepoint[i]) return x.basepoint[i] < y.basepoint[i];
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// residue density along the tempered form of a residual subspace

// Gamma-quotient density with the identically vanishing arguments removed
// from their respective products; normalized by the squared Gauss constant.
inline Cplx residual_density(const NumericContext& ctx, const std::vector<Rational>& korb,
                             const ResidualSubspace& L, const CVec& lam) {
    Cplx acc = 0.0;
    for (int r : ctx.rs->positive_roots()) {
        double kr = ctx.kroot[r];
        if (kr == 0.0) continue;  // paired factors cancel exactly
        Rational kex = korb[static_cast<size_t>(ctx.rs->root(r).orbit)];
        bool constant = false;
        Rational cval = 0;
        for (size_t i = 0; i < L.constant_roots.size(); ++i)
            if (L.constant_roots[i] == r) {
                constant = true;
                cval = L.constant_values[i];
            }
        Cplx v = pair_num(ctx, lam, r);
        // positive root: numerator unless v + k vanishes on L, denominator
        // unless v does; the negated root swaps the conditions to -v
        if (!(constant && cval + kex == 0)) acc += lgamma_c(v + kr);
        if (!(constant && cval == 0)) acc -= lgamma_c(v);
        if (!(constant && cval == kex)) acc += lgamma_c(-v + kr);
        if (!(constant && cval == 0)) acc -= lgamma_c(-v);
    }
    Cplx ctil = c_tilde_numeric(ctx, rho_cvec(ctx), ctx.W->identity());
    Cplx val = ctil * ctil * std::exp(acc);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) throw PoleAtArgument();
    return val;
}

// ---------------------------------------------------------------------------
// normal-crossing residue model

struct NormalCrossingResidue {
    RatVec center;
    Cplx value = 0.0;
    double det_path = 0.0;       // inverse square root of the covector gram
    double covolume_path = 0.0;  // inverse covolume of the covector lattice
};

// Full-rank central-at-c arrangement (lambda, alpha_H) = k_H with the
// all-pole rational form: the local contribution at the common point is
// (-2 pi i)^n det^{-1/2} phi(c), provided the origin lies in the antidual
// cone spanned by the covectors.
inline NormalCrossingResidue normal_crossing_residue(const RatMat& alphas, const RatVec& levels,
                                                     Cplx phi_at_c) {
    const size_t n = alphas.size();
    if (n == 0 || levels.size() != n) throw NotNormalCrossing();
    for (const RatVec& a : alphas)
        if (a.size() != n) throw NotNormalCrossing();

    NormalCrossingResidue res;
    if (!solve_linear(alphas, levels, res.center)) throw NotNormalCrossing();

    // antidual condition: -c must be a nonnegative combination of the alphas
    RatMat cols(n, RatVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cols[i][j] = alphas[j][i];
    RatVec negc(n);
    for (size_t i = 0; i < n; ++i) negc[i] = -res.center[i];
    RatVec t;
    if (!solve_linear(cols, negc, t)) throw NotNormalCrossing();
    for (const Rational& tv : t)
        if (tv < 0) throw OriginNotInAntidual();

    RatMat G(n, RatVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) G[i][j] = spectral_detail::dot(alphas[i], alphas[j]);
    // determinants by fraction-free elimination on copies
    auto rat_det = [](RatMat M) {
        Rational d = 1;
        const size_t sz = M.size();
        for (size_t c = 0; c < sz; ++c) {
            size_t piv = c;
            while (piv < sz && M[piv][c] == 0) ++piv;
            if (piv == sz) return Rational(0);
            if (piv != c) {
                std::swap(M[piv], M[c]);
                d = -d;
            }
            d *= M[c][c];
            Rational inv = 1 / M[c][c];
            for (size_t r = c + 1; r < sz; ++r) {
                Rational f = M[r][c] * inv;
                if (f == 0) continue;
                for (size_t j = c; j < sz; ++j) M[r][j] -= f * M[c][j];
            }
        }
        return d;
    };
    Rational detG = rat_det(G);
    Rational detA = rat_det(alphas);
    res.det_path = 1.0 / std::sqrt(detG.get_d());
    res.covolume_path = 1.0 / std::abs(detA.get_d());

    Cplx factor = 1.0;
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (size_t i = 0; i < n; ++i) factor *= Cplx(0.0, -two_pi);
    res.value = factor * res.det_path * phi_at_c;
    return res;
}

// ---------------------------------------------------------------------------
// rank-one integral check

struct PlancherelReport {
    double quadrature = 0.0;
    double closed_form = 0.0;
    double rel_err = 0.0;
};

// closed form of the rank-one weight mass: Gamma(2k+1)Gamma(-k)/Gamma(k+1)
inline double rank1_weight_mass(double k) {
    return std::exp(std::lgamma(2.0 * k + 1.0) + std::lgamma(-k) - std::lgamma(k + 1.0));
}

// Quadrature of the rank-one weight over the torus against the closed form;
// the power substitution t = u^p with p = 2/(1+2k) makes the integrand
// vanish linearly at the endpoint, the far tail is summed analytically from
// the binomial expansion of the weight.
inline PlancherelReport rank1_plancherel_check(double k) {
    if (!(k < 0.0) || !(2.0 * k + 1.0 > 0.0)) throw NotIntegrable();
    const double T = 15.0;
    const double p = 2.0 / (1.0 + 2.0 * k);
    const double eps = 1e-10;  // left endpoint in the power coordinate
    auto integrand = [k, p](double u) {
        double t = std::pow(u, p);
        return p * std::pow(u, p - 1.0) * std::pow(2.0 * std::sinh(t), 2.0 * k);
    };
    const int steps = 20000;  // composite Simpson, even count
    const double lo = eps, hi = std::pow(T, 1.0 / p);
    const double h = (hi - lo) / steps;
    double acc = integrand(lo) + integrand(hi);
    for (int i = 1; i < steps; ++i) acc += integrand(lo + h * i) * (i % 2 ? 4.0 : 2.0);
    double main = acc * h / 3.0;
    // below the cutoff the weight is (2t)^{2k} to machine precision
    double head = std::pow(2.0, 2.0 * k) * std::pow(eps, p * (2.0 * k + 1.0)) / (2.0 * k + 1.0);
    double tail = 0.0, coef = 1.0;
    for (int j = 0; j <= 60; ++j) {
        tail += coef * std::exp((2.0 * k - 2.0 * j) * T) / (2.0 * j - 2.0 * k);
        coef *= -(2.0 * k - j) / (j + 1.0);
    }
    PlancherelReport rep;
    rep.quadrature = 2.0 * (head + main + tail);
    rep.closed_form = rank1_weight_mass(k);
    rep.rel_err = std::abs(rep.quadrature - rep.closed_form) / std::abs(rep.closed_form);
    return rep;
}

}  // namespace cherednik
