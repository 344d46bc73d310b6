#pragma once

// Numeric-analytic layer: coefficient tables for the asymptotic series
// solutions, their evaluation on the positive chamber, the symmetric
// hypergeometric function assembled from c-function weights, the rank-one
// Gauss reductions, and a formal series carrier on which the Dunkl operators
// act exactly.
//
// Spectral parameters are complex vectors of pairings against the simple
// coroots, lam[i] = lambda(alpha_i^vee), mirroring the fundamental-coordinate
// convention of the exact layer.  Points of the chamber are given by the
// logarithms x_j = log e^{alpha_j}(a) > 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "numeric_base.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace cherednik {

using CVec = std::vector<Cplx>;

struct NearPole : std::runtime_error {
    std::vector<int> kappa_depth_coords;
    explicit NearPole(std::vector<int> c)
        : std::runtime_error("series coefficient hit the quadric through depth coordinates"),
          kappa_depth_coords(std::move(c)) {}
};
struct NotInPositiveChamber : std::runtime_error {
    NotInPositiveChamber() : std::runtime_error("evaluation point not in the open positive chamber") {}
};
struct NonGenericSpectralParam : std::runtime_error {
    NonGenericSpectralParam() : std::runtime_error("spectral parameter within threshold of a resonance") {}
};
struct PoleInCFunction : std::runtime_error {
    PoleInCFunction() : std::runtime_error("c-function value is not finite here") {}
};
struct DepthExhausted : std::runtime_error {
    DepthExhausted() : std::runtime_error("series operation needs coefficients beyond the stored depth") {}
};
struct ResonantParameter : std::runtime_error {
    ResonantParameter() : std::runtime_error("spectral parameter resonant for the eigenfunction construction") {}
};

// Precomputed double-precision root geometry shared by the numeric routines.
struct NumericContext {
    const RootSystem* rs = nullptr;
    const WeylGroup* W = nullptr;
    std::vector<double> k;  // one multiplicity per root orbit
    int n = 0;

    std::vector<std::vector<double>> gram_a;   // (alpha_i, alpha_j)
    std::vector<std::vector<double>> gram_f;   // (Lambda_i, Lambda_j)
    std::vector<std::vector<double>> Ainv;     // fundamental -> simple-root coords
    std::vector<std::vector<double>> rootf;    // per root: fundamental coords
    std::vector<std::vector<double>> covec;    // per root: Lambda_i-weights of alpha^vee
    std::vector<std::vector<long>> pair_alpha; // pair_alpha[r][j] = alpha_j(alpha_r^vee)
    std::vector<double> kroot;                 // per root
    std::vector<double> rho_f;                 // rho(k)(alpha_i^vee)
    std::vector<double> rho_alpha;             // rho(k) in simple-root coords
    // per Weyl element, the matrix of its action on fundamental coordinates
    std::vector<std::vector<std::vector<double>>> wmat;

    double k_of_root(int r) const { return kroot[r]; }
};

inline NumericContext make_numeric_context(const RootSystem& rs, const WeylGroup& W,
                                           std::vector<double> k_orbit) {
    if (static_cast<int>(k_orbit.size()) != rs.n_orbits())
        throw std::invalid_argument("one multiplicity per root orbit expected");
    NumericContext ctx;
    ctx.rs = &rs;
    ctx.W = &W;
    ctx.k = std::move(k_orbit);
    const int n = rs.rank();
    ctx.n = n;

    RatMat A(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = Rational(rs.cartan(i, j));
    RatMat Ainv_q = mat_inverse(A);
    ctx.gram_a.assign(n, std::vector<double>(n));
    ctx.Ainv.assign(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ctx.gram_a[i][j] = rs.gram()[i][j].get_d();
            ctx.Ainv[i][j] = Ainv_q[i][j].get_d();
        }
    ctx.gram_f.assign(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int m = 0; m < n; ++m)
                for (int l = 0; l < n; ++l)
                    s += ctx.Ainv[m][i] * ctx.gram_a[m][l] * ctx.Ainv[l][j];
            ctx.gram_f[i][j] = s;
        }

    const int nr = static_cast<int>(rs.n_roots());
    ctx.rootf.assign(nr, std::vector<double>(n));
    ctx.covec.assign(nr, std::vector<double>(n));
    ctx.pair_alpha.assign(nr, std::vector<long>(n));
    ctx.kroot.assign(nr, 0.0);
    for (int r = 0; r < nr; ++r) {
        const Root& rt = rs.root(r);
        ctx.kroot[r] = ctx.k[rt.orbit];
        for (int j = 0; j < n; ++j) {
            ctx.rootf[r][j] = static_cast<double>(rt.pair_sv[j]);
            ctx.covec[r][j] = rt.coroot_alpha[j].get_d();
            Rational pa = 0;
            for (int m = 0; m < n; ++m) pa += rt.coroot_alpha[m] * Rational(rs.cartan(m, j));
            ctx.pair_alpha[r][j] = to_long(pa);
        }
    }

    ctx.rho_f.assign(n, 0.0);
    for (int r : rs.positive_roots())
        for (int j = 0; j < n; ++j)
            ctx.rho_f[j] += 0.5 * ctx.kroot[r] * static_cast<double>(rs.root(r).pair_sv[j]);
    ctx.rho_alpha.assign(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) ctx.rho_alpha[j] += ctx.Ainv[j][i] * ctx.rho_f[i];

    ctx.wmat.resize(W.size());
    for (size_t w = 0; w < W.size(); ++w) {
        ctx.wmat[w].assign(n, std::vector<double>(n));
        for (int j = 0; j < n; ++j) {
            Weight fund{std::vector<long long>(n, 0)};
            fund.c2[j] = 2;
            Weight img = W.act(static_cast<int>(w), fund);
            for (int i = 0; i < n; ++i)
                ctx.wmat[w][i][j] = 0.5 * static_cast<double>(img.c2[i]);
        }
    }
    return ctx;
}

inline CVec act_num(const NumericContext& ctx, int w, const CVec& v) {
    CVec out(ctx.n, Cplx(0.0));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) out[i] += ctx.wmat[w][i][j] * v[j];
    return out;
}

// lambda(alpha_r^vee)
inline Cplx pair_num(const NumericContext& ctx, const CVec& v, int r) {
    Cplx s = 0.0;
    for (int i = 0; i < ctx.n; ++i) s += ctx.covec[r][i] * v[i];
    return s;
}

// complex bilinear extension of the inner product, fundamental coordinates
inline Cplx ip_fund(const NumericContext& ctx, const CVec& x, const CVec& y) {
    Cplx s = 0.0;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) s += x[i] * ctx.gram_f[i][j] * y[j];
    return s;
}

inline CVec alpha_coords_num(const NumericContext& ctx, const CVec& v) {
    CVec out(ctx.n, Cplx(0.0));
    for (int j = 0; j < ctx.n; ++j)
        for (int i = 0; i < ctx.n; ++i) out[j] += ctx.Ainv[j][i] * v[i];
    return out;
}

inline CVec rho_cvec(const NumericContext& ctx) {
    CVec r(ctx.n);
    for (int i = 0; i < ctx.n; ++i) r[i] = ctx.rho_f[i];
    return r;
}

// ---------------------------------------------------------------------------
// Spectral parameters and genericity

struct ResonanceHit {
    int root;     // positive root index
    long shift;   // the offending integer n, lambda(alpha^vee) ~ -n with alpha of either sign
    double dist;
};

struct SpectralParam {
    CVec lam;
    int window = 0;
    double threshold = 1e-6;
    std::vector<ResonanceHit> report;
    bool generic = true;
};

// Flags lambda lying within threshold of a shifted root hyperplane
// lambda(alpha^vee) + n = 0, n = 1..window, alpha running over both signs.
inline SpectralParam spectral_param(const NumericContext& ctx, const CVec& lam, int window,
                                    double threshold = 1e-6) {
    SpectralParam sp;
    sp.lam = lam;
    sp.window = window;
    sp.threshold = threshold;
    for (int r : ctx.rs->positive_roots()) {
        Cplx p = pair_num(ctx, lam, r);
        for (long m = 1; m <= window; ++m) {
            for (long sgn : {1L, -1L}) {
                double d = std::abs(p + Cplx(static_cast<double>(sgn * m)));
                if (d < threshold) {
                    sp.report.push_back({r, sgn * m, d});
                    sp.generic = false;
                }
            }
        }
    }
    return sp;
}

// ---------------------------------------------------------------------------
// Coefficient tables

// Map key c (componentwise >= 0) stands for kappa = -sum c_i alpha_i; the
// depth of a key is sum c_i.
struct HCSeries {
    CVec lam;
    int depth = 0;
    std::map<std::vector<int>, Cplx> coef;
};

namespace detail {

inline void enum_compositions(int n, int total, std::vector<int>& cur, int pos,
                              std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int t = 0; t <= total; ++t) {
        cur[pos] = t;
        enum_compositions(n, total - t, cur, pos + 1, out);
    }
}

inline std::vector<std::vector<int>> keys_of_depth(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    enum_compositions(n, d, cur, 0, out);
    return out;
}

}  // namespace detail

// Fills the coefficient table by increasing depth from the quadratic
// recurrence; the depth-zero coefficient is 1.
inline HCSeries gamma_table(const NumericContext& ctx, const CVec& lam, int N) {
    HCSeries s;
    s.lam = lam;
    s.depth = N;
    const int n = ctx.n;
    CVec lam_rho(n);
    for (int i = 0; i < n; ++i) lam_rho[i] = lam[i] - ctx.rho_f[i];
    s.coef[std::vector<int>(n, 0)] = 1.0;
    for (int d = 1; d <= N; ++d) {
        for (auto& c : detail::keys_of_depth(n, d)) {
            CVec kf(n, Cplx(0.0));  // fundamental coords of kappa
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    kf[i] -= static_cast<double>(ctx.rs->cartan(i, j)) * static_cast<double>(c[j]);
            CVec two_lam_k(n);
            for (int i = 0; i < n; ++i) two_lam_k[i] = 2.0 * lam[i] + kf[i];
            Cplx D = ip_fund(ctx, two_lam_k, kf);
            double scale = std::abs(ip_fund(ctx, lam, kf)) * 2.0 + std::abs(ip_fund(ctx, kf, kf)) + 1.0;
            if (std::abs(D) < 1e-12 * scale) throw NearPole(c);

            Cplx rhs = 0.0;
            for (int r : ctx.rs->positive_roots()) {
                if (ctx.kroot[r] == 0.0) continue;
                const Root& rt = ctx.rs->root(r);
                for (int j = 1;; ++j) {
                    std::vector<int> cp(c);
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        cp[i] -= j * static_cast<int>(rt.alpha[i]);
                        if (cp[i] < 0) { ok = false; break; }
                    }
                    if (!ok) break;
                    auto it = s.coef.find(cp);
                    if (it == s.coef.end()) continue;
                    CVec arg(n);
                    for (int i = 0; i < n; ++i)
                        arg[i] = lam_rho[i] + kf[i] + static_cast<double>(j) * ctx.rootf[r][i];
                    CVec af(n);
                    for (int i = 0; i < n; ++i) af[i] = ctx.rootf[r][i];
                    rhs += 2.0 * ctx.kroot[r] * ip_fund(ctx, arg, af) * it->second;
                }
            }
            s.coef[c] = rhs / (-D);
        }
    }
    return s;
}

// Recomputes every recurrence relation from the stored table; returns the
// worst relative residual.
inline double gamma_recurrence_residual(const NumericContext& ctx, const HCSeries& s) {
    const int n = ctx.n;
    CVec lam_rho(n);
    for (int i = 0; i < n; ++i) lam_rho[i] = s.lam[i] - ctx.rho_f[i];
    double worst = 0.0;
    for (const auto& [c, val] : s.coef) {
        int d = 0;
        for (int x : c) d += x;
        if (d == 0) continue;
        CVec kf(n, Cplx(0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                kf[i] -= static_cast<double>(ctx.rs->cartan(i, j)) * static_cast<double>(c[j]);
        CVec two_lam_k(n);
        for (int i = 0; i < n; ++i) two_lam_k[i] = 2.0 * s.lam[i] + kf[i];
        Cplx lhs = -ip_fund(ctx, two_lam_k, kf) * val;
        Cplx rhs = 0.0;
        for (int r : ctx.rs->positive_roots()) {
            if (ctx.kroot[r] == 0.0) continue;
            const Root& rt = ctx.rs->root(r);
            for (int j = 1;; ++j) {
                std::vector<int> cp(c);
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    cp[i] -= j * static_cast<int>(rt.alpha[i]);
                    if (cp[i] < 0) { ok = false; break; }
                }
                if (!ok) break;
                auto it = s.coef.find(cp);
                if (it == s.coef.end()) continue;
                CVec arg(n);
                for (int i = 0; i < n; ++i)
                    arg[i] = lam_rho[i] + kf[i] + static_cast<double>(j) * ctx.rootf[r][i];
                CVec af(n);
                for (int i = 0; i < n; ++i) af[i] = ctx.rootf[r][i];
                rhs += 2.0 * ctx.kroot[r] * ip_fund(ctx, arg, af) * it->second;
            }
        }
        double res = std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
        worst = std::max(worst, res);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Evaluation on the positive chamber

struct LogPoint {
    std::vector<double> x;  // x_j = log e^{alpha_j}(a), all > 0 on A_+
};

struct PhiValue {
    Cplx value = 0.0;
    double tail = 0.0;  // geometric-majorant bound on the dropped tail
};

inline PhiValue phi_eval(const NumericContext& ctx, const HCSeries& s, const LogPoint& a) {
    const int n = ctx.n;
    if (static_cast<int>(a.x.size()) != n) throw std::invalid_argument("point dimension mismatch");
    double xmin = a.x[0];
    for (double xi : a.x) xmin = std::min(xmin, xi);
    if (xmin <= 0.0) throw NotInPositiveChamber();

    CVec lam_rho(n);
    for (int i = 0; i < n; ++i) lam_rho[i] = s.lam[i] - ctx.rho_f[i];
    CVec aco = alpha_coords_num(ctx, lam_rho);
    Cplx sum = 0.0;
    double shell = 0.0;
    for (const auto& [c, coefficient] : s.coef) {
        int d = 0;
        Cplx e = 0.0;
        for (int j = 0; j < n; ++j) {
            d += c[j];
            e += (aco[j] - static_cast<double>(c[j])) * a.x[j];
        }
        Cplx term = coefficient * std::exp(e);
        sum += term;
        if (d == s.depth) shell += std::abs(term);
    }
    double r = std::exp(-xmin);
    PhiValue out;
    out.value = sum;
    if (s.depth == 0) shell = std::abs(sum);
    out.tail = shell * r / (1.0 - r);
    return out;
}

// ---------------------------------------------------------------------------
// c-functions and the symmetric function

// Product over positive roots of Gamma(lambda(alpha^vee) + d_w) /
// Gamma(lambda(alpha^vee) + d_w + k_alpha), with d_w(alpha) = 1 exactly when
// w alpha < 0; w = identity gives the weight used in the series combination.
inline Cplx c_tilde_numeric(const NumericContext& ctx, const CVec& lam, int w) {
    Cplx acc = 0.0;
    for (int r : ctx.rs->positive_roots()) {
        if (ctx.kroot[r] == 0.0) continue;  // the quotient is identically one
        double dw = ctx.W->sends_negative(w, r) ? 1.0 : 0.0;
        Cplx p = pair_num(ctx, lam, r) + dw;
        acc += lgamma_c(p) - lgamma_c(p + ctx.kroot[r]);
    }
    Cplx v = std::exp(acc);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw PoleInCFunction();
    return v;
}

// Value of the symmetric series at the identity, continuous in the
// multiplicities; with every multiplicity zero the limit is the Weyl group
// order, not the bare product (which degenerates to one).
inline Cplx gauss_normalization(const NumericContext& ctx) {
    for (double kv : ctx.k)
        if (kv != 0.0) return c_tilde_numeric(ctx, rho_cvec(ctx), ctx.W->identity());
    return Cplx(static_cast<double>(ctx.W->size()), 0.0);
}

// Per-element series tables and c-function weights entering the symmetric
// combination.
struct HypergeomTables {
    CVec lam;
    int depth = 0;
    std::vector<HCSeries> by_w;
    std::vector<Cplx> ctil;
};

inline HypergeomTables hypergeom_tables(const NumericContext& ctx, const CVec& lam, int N,
                                        double threshold = 1e-6) {
    SpectralParam sp = spectral_param(ctx, lam, N, threshold);
    if (!sp.generic) throw NonGenericSpectralParam();
    HypergeomTables t;
    t.lam = lam;
    t.depth = N;
    t.by_w.reserve(ctx.W->size());
    for (size_t w = 0; w < ctx.W->size(); ++w) {
        CVec wl = act_num(ctx, static_cast<int>(w), lam);
        t.by_w.push_back(gamma_table(ctx, wl, N));
        t.ctil.push_back(c_tilde_numeric(ctx, wl, ctx.W->identity()));
    }
    return t;
}

inline Cplx F_tilde(const NumericContext& ctx, const HypergeomTables& t, const LogPoint& a,
                    double* tail_out = nullptr) {
    Cplx sum = 0.0;
    double tail = 0.0;
    for (size_t w = 0; w < t.by_w.size(); ++w) {
        PhiValue pv = phi_eval(ctx, t.by_w[w], a);
        sum += t.ctil[w] * pv.value;
        tail += std::abs(t.ctil[w]) * pv.tail;
    }
    if (tail_out) *tail_out = tail;
    return sum;
}

inline Cplx F_value(const NumericContext& ctx, const HypergeomTables& t, const LogPoint& a,
                    double* tail_out = nullptr) {
    Cplx ft = F_tilde(ctx, t, a, tail_out);
    Cplx norm = gauss_normalization(ctx);
    if (tail_out) *tail_out /= std::abs(norm);
    return ft / norm;
}

// ---------------------------------------------------------------------------
// Rank-one closed forms

namespace rank1 {

// Gauss parameters for the one-variable reduction with multiplicities
// (k1, k2) on the short and doubled root; the reduced system keeps k2 = 0.
struct Params {
    double k1 = 0.0, k2 = 0.0;
    Cplx lxi;  // lambda(xi) for xi the coweight dual to the doubled root
    Cplx a, b, c;
};

inline Params params(double k1, double k2, Cplx lam_coroot) {
    Params p;
    p.k1 = k1;
    p.k2 = k2;
    p.lxi = 0.5 * lam_coroot;
    p.a = p.lxi + 0.5 * k1 + k2;
    p.b = -p.lxi + 0.5 * k1 + k2;
    p.c = 0.5 + k1 + k2;
    return p;
}

inline Cplx z_of(double y) { return Cplx(0.5 - 0.25 * (y + 1.0 / y)); }

// normalized symmetric function, value 1 at y = 1
inline Cplx f_value(const Params& p, double y) { return hyp2f1(p.a, p.b, p.c, z_of(y)); }

// nonsymmetric eigenfunction, value 1 at y = 1
inline Cplx g_value(const Params& p, double y) {
    Cplx z = z_of(y);
    return hyp2f1(p.a, p.b, p.c, z) +
           (y - 1.0 / y) / (4.0 * p.b) * hyp2f1_deriv(p.a, p.b, p.c, z);
}

// the recessive solution at the infinite end, normalized to leading
// coefficient 1 against e^{lambda - rho}
inline Cplx phi_value(const Params& p, double y) {
    Cplx z = z_of(y);
    return std::pow(Cplx(4.0), -p.b) * std::pow(-z, -p.b) *
           hyp2f1(p.b, p.b - p.c + 1.0, p.b - p.a + 1.0, 1.0 / z);
}

}  // namespace rank1

// ---------------------------------------------------------------------------
// Formal series carrier for operator actions
//
// Terms are keyed by (u, v, kappa) standing for the exponent
// u.lam - v.rho(k) + kappa with kappa an integer vector in simple-root
// coordinates of either sign; reflections permute keys exactly, so the Dunkl
// action closes on this carrier.  Terms deeper than the stored depth
// (depth of kappa = -sum of its coordinates) are dropped; coefficients at
// kept depths are exact for single applications, while composed applications
// are checked empirically against eigen identities in the tests.

struct BranchKey {
    int u = 0, v = 0;
    std::vector<int> kap;

    bool operator<(const BranchKey& o) const {
        return std::tie(u, v, kap) < std::tie(o.u, o.v, o.kap);
    }
};

struct AsymptoticSeries {
    CVec lam;
    int depth = 0;
    std::map<BranchKey, Cplx> terms;
};

inline int key_depth(const BranchKey& k) {
    int s = 0;
    for (int x : k.kap) s -= x;
    return s;
}

inline AsymptoticSeries phi_as_series(const NumericContext& ctx, const HCSeries& hc) {
    AsymptoticSeries s;
    s.lam = hc.lam;
    s.depth = hc.depth;
    for (const auto& [c, val] : hc.coef) {
        BranchKey key;
        key.u = ctx.W->identity();
        key.v = ctx.W->identity();
        key.kap.assign(c.begin(), c.end());
        for (auto& x : key.kap) x = -x;
        s.terms[key] = val;
    }
    return s;
}

// unnormalized symmetric combination sum_w ctil(w lam) Phi(w lam); branch u
// records which chamber image each table came from
inline AsymptoticSeries f_tilde_series(const NumericContext& ctx, const HypergeomTables& t) {
    AsymptoticSeries s;
    s.lam = t.lam;
    s.depth = t.depth;
    for (size_t w = 0; w < t.by_w.size(); ++w) {
        for (const auto& [c, val] : t.by_w[w].coef) {
            BranchKey key;
            key.u = static_cast<int>(w);
            key.v = ctx.W->identity();
            key.kap.assign(c.begin(), c.end());
            for (auto& x : key.kap) x = -x;
            s.terms[key] += t.ctil[w] * val;
        }
    }
    return s;
}

namespace detail {

// fundamental coordinates of the exponent of a key
inline CVec key_exponent(const NumericContext& ctx, const AsymptoticSeries& s,
                         const BranchKey& key) {
    CVec mu = act_num(ctx, key.u, s.lam);
    CVec vr = act_num(ctx, key.v, rho_cvec(ctx));
    for (int i = 0; i < ctx.n; ++i) {
        mu[i] -= vr[i];
        for (int j = 0; j < ctx.n; ++j)
            mu[i] += static_cast<double>(ctx.rs->cartan(i, j)) * static_cast<double>(key.kap[j]);
    }
    return mu;
}

inline std::vector<int> reflect_kap(const NumericContext& ctx, int r, const std::vector<int>& kap) {
    long pa = 0;
    for (int j = 0; j < ctx.n; ++j) pa += static_cast<long>(kap[j]) * ctx.pair_alpha[r][j];
    std::vector<int> out(kap);
    const Root& rt = ctx.rs->root(r);
    for (int j = 0; j < ctx.n; ++j) out[j] -= static_cast<int>(pa * rt.alpha[j]);
    return out;
}

inline void add_term(AsymptoticSeries& s, BranchKey key, Cplx val) {
    if (key_depth(key) > s.depth) return;
    auto [it, fresh] = s.terms.emplace(std::move(key), val);
    if (!fresh) it->second += val;
}

}  // namespace detail

// Dunkl operator for the fundamental coweight direction xi_j, acting term by
// term: derivative and constant parts stay on the key; each positive root
// contributes two geometric towers, the direct one and the reflected one.
inline AsymptoticSeries apply_T_series(const NumericContext& ctx, int xi, const AsymptoticSeries& s) {
    if (s.depth < 0) throw DepthExhausted();
    AsymptoticSeries out;
    out.lam = s.lam;
    out.depth = s.depth;
    for (const auto& [key, coefficient] : s.terms) {
        CVec mu = detail::key_exponent(ctx, s, key);
        CVec mu_alpha = alpha_coords_num(ctx, mu);
        detail::add_term(out, key, coefficient * (mu_alpha[xi] - ctx.rho_alpha[xi]));
        for (int r : ctx.rs->positive_roots()) {
            const Root& rt = ctx.rs->root(r);
            double axi = static_cast<double>(rt.alpha[xi]);
            if (axi == 0.0 || ctx.kroot[r] == 0.0) continue;
            Cplx f = ctx.kroot[r] * axi * coefficient;
            int sref = ctx.W->reflection(r);
            BranchKey rkey;
            rkey.u = ctx.W->mul(sref, key.u);
            rkey.v = ctx.W->mul(sref, key.v);
            rkey.kap = detail::reflect_kap(ctx, r, key.kap);
            long stride = 0;  // depth gained per tower step
            for (int j = 0; j < ctx.n; ++j) stride += rt.alpha[j];
            long m_direct = (static_cast<long>(s.depth) - key_depth(key)) / stride;
            long m_refl = (static_cast<long>(s.depth) - key_depth(rkey)) / stride;
            long m_max = std::max(m_direct, m_refl);
            for (long m = 0; m <= m_max; ++m) {
                BranchKey direct(key), refl(rkey);
                for (int j = 0; j < ctx.n; ++j) {
                    direct.kap[j] -= static_cast<int>(m * rt.alpha[j]);
                    refl.kap[j] -= static_cast<int>(m * rt.alpha[j]);
                }
                if (key_depth(direct) <= s.depth) detail::add_term(out, direct, f);
                if (key_depth(refl) <= s.depth) detail::add_term(out, refl, -f);
            }
        }
    }
    return out;
}

// Second-order operator on a single exponential: Laplace part plus the
// k-weighted cotangent-type towers; no reflections appear, so this is exact
// through the stored depth on every branch.
inline AsymptoticSeries apply_L_series(const NumericContext& ctx, const AsymptoticSeries& s) {
    if (s.depth < 0) throw DepthExhausted();
    AsymptoticSeries out;
    out.lam = s.lam;
    out.depth = s.depth;
    for (const auto& [key, coefficient] : s.terms) {
        CVec mu = detail::key_exponent(ctx, s, key);
        detail::add_term(out, key, coefficient * ip_fund(ctx, mu, mu));
        for (int r : ctx.rs->positive_roots()) {
            if (ctx.kroot[r] == 0.0) continue;
            const Root& rt = ctx.rs->root(r);
            CVec af(ctx.n);
            for (int i = 0; i < ctx.n; ++i) af[i] = ctx.rootf[r][i];
            Cplx g = ctx.kroot[r] * ip_fund(ctx, mu, af) * coefficient;
            detail::add_term(out, key, g);
            for (int m = 1;; ++m) {
                BranchKey deeper(key);
                for (int j = 0; j < ctx.n; ++j) deeper.kap[j] -= m * static_cast<int>(rt.alpha[j]);
                if (key_depth(deeper) > s.depth) break;
                detail::add_term(out, deeper, 2.0 * g);
            }
        }
    }
    return out;
}

inline void series_axpy(AsymptoticSeries& acc, const AsymptoticSeries& s, Cplx c) {
    for (const auto& [key, val] : s.terms) detail::add_term(acc, key, c * val);
}

inline AsymptoticSeries series_scaled(const AsymptoticSeries& s, Cplx c) {
    AsymptoticSeries out(s);
    for (auto& [key, val] : out.terms) val *= c;
    return out;
}

inline Cplx series_eval(const NumericContext& ctx, const AsymptoticSeries& s, const LogPoint& a) {
    for (double xi : a.x)
        if (xi <= 0.0) throw NotInPositiveChamber();
    Cplx sum = 0.0;
    std::map<std::pair<int, int>, CVec> base;
    for (const auto& [key, coefficient] : s.terms) {
        auto bk = std::make_pair(key.u, key.v);
        auto it = base.find(bk);
        if (it == base.end()) {
            CVec mu = act_num(ctx, key.u, s.lam);
            CVec vr = act_num(ctx, key.v, rho_cvec(ctx));
            for (int i = 0; i < ctx.n; ++i) mu[i] -= vr[i];
            it = base.emplace(bk, alpha_coords_num(ctx, mu)).first;
        }
        Cplx e = 0.0;
        for (int j = 0; j < ctx.n; ++j)
            e += (it->second[j] + static_cast<double>(key.kap[j])) * a.x[j];
        sum += coefficient * std::exp(e);
    }
    return sum;
}

// w-image of a series under the finite reflection carried by simple index i,
// or the affine one for i = 0 (translation part must stay on the stored
// lattice, which it does exactly when theta^vee has integer root coordinates).
inline AsymptoticSeries apply_pi_series(const NumericContext& ctx, int i, const AsymptoticSeries& s) {
    AsymptoticSeries out;
    out.lam = s.lam;
    out.depth = s.depth;
    int r;
    std::vector<int> shift(ctx.n, 0);
    if (i == 0) {
        r = ctx.rs->theta_short();
        const Root& th = ctx.rs->root(r);
        for (int j = 0; j < ctx.n; ++j) {
            Rational coord = th.coroot_alpha[j] * Rational(2) / ctx.rs->root(ctx.rs->simple_roots()[j]).len2;
            if (!is_integer(coord))
                throw std::invalid_argument("affine translation leaves the stored lattice");
            shift[j] = static_cast<int>(to_long(coord));
        }
    } else {
        r = ctx.rs->simple_roots()[i - 1];
    }
    int sref = ctx.W->reflection(r);
    for (const auto& [key, val] : s.terms) {
        BranchKey nk;
        nk.u = ctx.W->mul(sref, key.u);
        nk.v = ctx.W->mul(sref, key.v);
        nk.kap = detail::reflect_kap(ctx, r, key.kap);
        for (int j = 0; j < ctx.n; ++j) nk.kap[j] += shift[j];
        detail::add_term(out, nk, val);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational-coefficient differential operators on the invariant carrier
//
// Compositions of Dunkl operators cannot be applied term by term to a
// truncated series: the reflection difference evaluates the dropped tail at
// reflected points, where it is exponentially large, so every composed
// application picks up boundary junk of size e^{+depth*x}.  On a W-invariant
// input the reflection terms close instead on differential operators whose
// coefficients are rational in the u_j = e^{-alpha_j}, because
// (1 - r)(R * dF) = R dF - R^r d^r F for constant-coefficient d.  Elements
// of that algebra are carried exactly and only the final evaluation touches
// the truncated series, leaving the plain truncation tail as the only error.

// Laurent polynomial in u_1..u_n with complex coefficients; the exponent
// vector e stands for the character e^{-sum e_j alpha_j}.
struct ExpPoly {
    std::map<std::vector<int>, Cplx> t;
};

inline ExpPoly ep_monomial(std::vector<int> e, Cplx c) {
    ExpPoly p;
    if (c != 0.0) p.t.emplace(std::move(e), c);
    return p;
}

inline void ep_add(ExpPoly& a, const ExpPoly& b, Cplx scale = 1.0) {
    for (const auto& [e, c] : b.t) {
        Cplx& slot = a.t[e];
        slot += scale * c;
        if (slot == 0.0) a.t.erase(e);
    }
}

inline ExpPoly ep_mul(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out;
    std::vector<int> e;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            e = ea;
            for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            out.t[e] += ca * cb;
        }
    return out;
}

inline Cplx ep_eval(const ExpPoly& p, const std::vector<Cplx>& u) {
    Cplx sum = 0.0;
    for (const auto& [e, c] : p.t) {
        Cplx m = c;
        for (size_t j = 0; j < u.size(); ++j) {
            if (e[j] > 0)
                for (int t = 0; t < e[j]; ++t) m *= u[j];
            else
                for (int t = 0; t < -e[j]; ++t) m /= u[j];
        }
        sum += m;
    }
    return sum;
}

// num / prod_v (1 - u^v)^p with the factor exponents v kept unexpanded;
// all stored v are alpha vectors of positive roots, so the denominator is
// bounded away from zero on A_+ and never needs symbolic expansion.
struct RatCoeff {
    ExpPoly num;
    std::map<std::vector<int>, int> den;
};

inline RatCoeff rc_const(int n, Cplx c) {
    RatCoeff r;
    r.num = ep_monomial(std::vector<int>(n, 0), c);
    return r;
}

inline bool rc_is_zero(const RatCoeff& r) { return r.num.t.empty(); }

inline void rc_scale(RatCoeff& r, Cplx c) {
    if (c == 0.0) {
        r.num.t.clear();
        r.den.clear();
        return;
    }
    for (auto& [e, coef] : r.num.t) coef *= c;
}

inline ExpPoly detail_expand_factors(int n, const std::map<std::vector<int>, int>& f) {
    ExpPoly out = ep_monomial(std::vector<int>(n, 0), 1.0);
    for (const auto& [v, p] : f)
        for (int t = 0; t < p; ++t) {
            ExpPoly binom = ep_monomial(std::vector<int>(n, 0), 1.0);
            ep_add(binom, ep_monomial(v, 1.0), -1.0);
            out = ep_mul(out, binom);
        }
    return out;
}

inline RatCoeff rc_add(const RatCoeff& a, const RatCoeff& b, Cplx bscale = 1.0) {
    if (rc_is_zero(b) || bscale == 0.0) return a;
    if (rc_is_zero(a)) {
        RatCoeff out = b;
        rc_scale(out, bscale);
        return out;
    }
    int n = static_cast<int>(a.num.t.begin()->first.size());
    RatCoeff out;
    out.den = a.den;
    for (const auto& [v, p] : b.den) {
        int& slot = out.den[v];
        slot = std::max(slot, p);
    }
    std::map<std::vector<int>, int> ca, cb;
    for (const auto& [v, p] : out.den) {
        auto ia = a.den.find(v);
        int pa = p - (ia == a.den.end() ? 0 : ia->second);
        if (pa > 0) ca[v] = pa;
        auto ib = b.den.find(v);
        int pb = p - (ib == b.den.end() ? 0 : ib->second);
        if (pb > 0) cb[v] = pb;
    }
    out.num = ep_mul(a.num, detail_expand_factors(n, ca));
    ep_add(out.num, ep_mul(b.num, detail_expand_factors(n, cb)), bscale);
    return out;
}

inline RatCoeff rc_mul_poly(const RatCoeff& a, const ExpPoly& p) {
    RatCoeff out;
    out.num = ep_mul(a.num, p);
    out.den = a.den;
    return out;
}

// divides by (1 - u^v)^p for a positive-root alpha vector v
inline void rc_div_factor(RatCoeff& a, const std::vector<int>& v, int p = 1) {
    if (rc_is_zero(a)) return;
    a.den[v] += p;
}

// derivative along the fundamental coweight xi^j: u^e picks up -e_j and a
// denominator factor (1-u^v)^p contributes p v_j u^v / (1-u^v)
inline RatCoeff rc_dxi(const RatCoeff& a, int j) {
    RatCoeff out;
    out.den = a.den;
    for (const auto& [e, c] : a.num.t)
        if (e[j] != 0) out.num.t[e] = c * static_cast<double>(-e[j]);
    for (const auto& [v, p] : a.den) {
        if (v[j] == 0) continue;
        RatCoeff piece;
        piece.num = ep_mul(a.num, ep_monomial(v, static_cast<double>(-p * v[j])));
        piece.den = a.den;
        piece.den[v] += 1;
        out = rc_add(out, piece);
    }
    return out;
}

inline Cplx rc_eval(const RatCoeff& a, const std::vector<Cplx>& u) {
    if (rc_is_zero(a)) return 0.0;
    Cplx val = ep_eval(a.num, u);
    for (const auto& [v, p] : a.den) {
        Cplx m = 1.0;
        for (size_t j = 0; j < u.size(); ++j)
            for (int t = 0; t < v[j]; ++t) m *= u[j];
        for (int t = 0; t < p; ++t) val /= (1.0 - m);
    }
    return val;
}

// Sum_D R_D(u) d^D applied to a W-invariant function, d in the directions
// of the fundamental coweights.
struct InvariantOp {
    std::map<std::vector<int>, RatCoeff> comp;
};

inline InvariantOp iop_identity(int n) {
    InvariantOp op;
    op.comp.emplace(std::vector<int>(n, 0), rc_const(n, 1.0));
    return op;
}

inline void iop_accum(InvariantOp& a, const std::vector<int>& d, const RatCoeff& r, Cplx scale = 1.0) {
    if (rc_is_zero(r) || scale == 0.0) return;
    auto it = a.comp.find(d);
    if (it == a.comp.end())
        it = a.comp.emplace(d, RatCoeff{}).first;
    it->second = rc_add(it->second, r, scale);
    if (rc_is_zero(it->second)) a.comp.erase(it);
}

inline void iop_add(InvariantOp& a, const InvariantOp& b, Cplx scale = 1.0) {
    for (const auto& [d, r] : b.comp) iop_accum(a, d, r, scale);
}

inline void iop_scale(InvariantOp& a, Cplx c) {
    for (auto& [d, r] : a.comp) rc_scale(r, c);
}

// plain directional derivative with the product rule on the coefficients
inline InvariantOp apply_partial(const NumericContext& ctx, int j, const InvariantOp& op) {
    InvariantOp out;
    for (const auto& [d, r] : op.comp) {
        iop_accum(out, d, rc_dxi(r, j));
        std::vector<int> dj = d;
        dj[j] += 1;
        iop_accum(out, dj, r);
    }
    (void)ctx;
    return out;
}

namespace detail {

// expansion of the r-conjugate of a partial-derivative monomial, using
// r(xi^j) = xi^j - alpha(xi^j) alpha^vee in fundamental-coweight coordinates
inline std::map<std::vector<int>, long> conj_monomial(const std::vector<std::vector<long>>& M,
                                                      const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    std::map<std::vector<int>, long> cur;
    cur.emplace(std::vector<int>(n, 0), 1);
    for (int j = 0; j < n; ++j)
        for (int t = 0; t < d[j]; ++t) {
            std::map<std::vector<int>, long> next;
            for (const auto& [e, c] : cur)
                for (int m = 0; m < n; ++m) {
                    if (M[j][m] == 0) continue;
                    std::vector<int> em = e;
                    em[m] += 1;
                    next[em] += c * M[j][m];
                }
            cur = std::move(next);
        }
    return cur;
}

// reflection matrix on the coweight basis and the exponent substitution on
// the u-monomials for the reflection in root r
struct ReflData {
    std::vector<std::vector<long>> M;       // r(xi^j) = sum_m M[j][m] xi^m
    std::vector<std::vector<long>> img;     // alpha coords of r(alpha_m)
};

inline ReflData refl_data(const NumericContext& ctx, int root_idx) {
    ReflData rd;
    const Root& rt = ctx.rs->root(root_idx);
    rd.M.assign(ctx.n, std::vector<long>(ctx.n, 0));
    for (int j = 0; j < ctx.n; ++j)
        for (int m = 0; m < ctx.n; ++m)
            rd.M[j][m] = (j == m ? 1 : 0) - rt.alpha[j] * ctx.pair_alpha[root_idx][m];
    int sref = ctx.W->reflection(root_idx);
    rd.img.resize(ctx.n);
    for (int m = 0; m < ctx.n; ++m) {
        int im = ctx.W->root_image(sref, ctx.rs->simple_roots()[m]);
        rd.img[m] = ctx.rs->root(im).alpha;
    }
    return rd;
}

inline std::vector<int> subst_exponent(const ReflData& rd, const std::vector<int>& e) {
    int n = static_cast<int>(e.size());
    std::vector<int> out(n, 0);
    for (int m = 0; m < n; ++m) {
        if (e[m] == 0) continue;
        for (int j = 0; j < n; ++j) out[j] += e[m] * static_cast<int>(rd.img[m][j]);
    }
    return out;
}

}  // namespace detail

// pullback of the coefficient along the reflection, u^e -> u^{r(e)}; factors
// whose exponent lands on a negative root are flipped back with the sign and
// monomial absorbed into the numerator
inline RatCoeff rc_subst_refl(const detail::ReflData& rd, const RatCoeff& a) {
    RatCoeff out;
    for (const auto& [e, c] : a.num.t) out.num.t[detail::subst_exponent(rd, e)] += c;
    for (const auto& [v, p] : a.den) {
        std::vector<int> w = detail::subst_exponent(rd, v);
        bool neg = false;
        for (int x : w)
            if (x != 0) { neg = x < 0; break; }
        if (!neg) {
            out.den[w] += p;
            continue;
        }
        // 1/(1-u^w)^p = (-1)^p u^{-pw} / (1-u^{-w})^p
        std::vector<int> flip(w.size());
        std::vector<int> mono(w.size());
        for (size_t j = 0; j < w.size(); ++j) {
            flip[j] = -w[j];
            mono[j] = -p * w[j];
        }
        out.num = ep_mul(out.num, ep_monomial(mono, (p % 2 == 0) ? 1.0 : -1.0));
        out.den[flip] += p;
    }
    return out;
}

// Dunkl operator in the coweight direction dir = sum_j dir_j xi^j acting on
// the invariant-carrier algebra
inline InvariantOp apply_T_inv(const NumericContext& ctx, const std::vector<double>& dir,
                               const InvariantOp& op) {
    InvariantOp out;
    double rho_dir = 0.0;
    for (int j = 0; j < ctx.n; ++j) rho_dir += dir[j] * ctx.rho_alpha[j];
    for (const auto& [d, r] : op.comp) {
        for (int j = 0; j < ctx.n; ++j) {
            if (dir[j] == 0.0) continue;
            iop_accum(out, d, rc_dxi(r, j), dir[j]);
            std::vector<int> dj = d;
            dj[j] += 1;
            iop_accum(out, dj, r, dir[j]);
        }
        iop_accum(out, d, r, -rho_dir);
    }
    for (int ri : ctx.rs->positive_roots()) {
        double kk = ctx.kroot[ri];
        if (kk == 0.0) continue;
        const Root& rt = ctx.rs->root(ri);
        double adir = 0.0;
        for (int j = 0; j < ctx.n; ++j) adir += dir[j] * static_cast<double>(rt.alpha[j]);
        if (adir == 0.0) continue;
        std::vector<int> av(ctx.n);
        for (int j = 0; j < ctx.n; ++j) av[j] = static_cast<int>(rt.alpha[j]);
        detail::ReflData rd = detail::refl_data(ctx, ri);
        double q = kk * adir;
        for (const auto& [d, r] : op.comp) {
            RatCoeff direct = r;
            rc_scale(direct, q);
            rc_div_factor(direct, av);
            iop_accum(out, d, direct);
            RatCoeff rr = rc_subst_refl(rd, r);
            rc_scale(rr, -q);
            rc_div_factor(rr, av);
            for (const auto& [dd, cc] : detail::conj_monomial(rd.M, d))
                iop_accum(out, dd, rr, static_cast<double>(cc));
        }
    }
    return out;
}

// the invariant second-order operator: Laplacian plus the k-weighted
// coth-type first-order terms
inline InvariantOp apply_L_inv(const NumericContext& ctx, const InvariantOp& op) {
    InvariantOp out;
    std::vector<InvariantOp> dl(ctx.n);
    for (int l = 0; l < ctx.n; ++l) dl[l] = apply_partial(ctx, l, op);
    for (int j = 0; j < ctx.n; ++j)
        for (int l = 0; l < ctx.n; ++l) {
            double g = ctx.gram_a[j][l];
            if (g == 0.0) continue;
            iop_add(out, apply_partial(ctx, j, dl[l]), g);
        }
    for (int ri : ctx.rs->positive_roots()) {
        double kk = ctx.kroot[ri];
        if (kk == 0.0) continue;
        const Root& rt = ctx.rs->root(ri);
        std::vector<int> av(ctx.n);
        for (int j = 0; j < ctx.n; ++j) av[j] = static_cast<int>(rt.alpha[j]);
        ExpPoly oneplus = ep_monomial(std::vector<int>(ctx.n, 0), 1.0);
        ep_add(oneplus, ep_monomial(av, 1.0));
        // direction vector of alpha in coweight coordinates
        for (int m = 0; m < ctx.n; ++m) {
            double dm = 0.0;
            for (int l = 0; l < ctx.n; ++l)
                dm += static_cast<double>(rt.alpha[l]) * ctx.gram_a[m][l];
            if (dm == 0.0) continue;
            for (const auto& [d, r] : dl[m].comp) {
                RatCoeff piece = rc_mul_poly(r, oneplus);
                rc_scale(piece, kk * dm);
                rc_div_factor(piece, av);
                iop_accum(out, d, piece);
            }
        }
    }
    return out;
}

// w-image under the simple reflection i >= 1 or the affine reflection i = 0,
// which also multiplies by the translation character e^{theta^vee}
inline InvariantOp apply_pi_inv(const NumericContext& ctx, int i, const InvariantOp& op) {
    int root_idx;
    std::vector<int> mono(ctx.n, 0);
    if (i == 0) {
        root_idx = ctx.rs->theta_short();
        const Root& th = ctx.rs->root(root_idx);
        for (int j = 0; j < ctx.n; ++j) {
            Rational coord = th.coroot_alpha[j] * Rational(2) /
                             ctx.rs->root(ctx.rs->simple_roots()[j]).len2;
            if (!is_integer(coord))
                throw std::invalid_argument("affine translation leaves the stored lattice");
            mono[j] = -static_cast<int>(to_long(coord));
        }
    } else {
        root_idx = ctx.rs->simple_roots()[i - 1];
    }
    detail::ReflData rd = detail::refl_data(ctx, root_idx);
    ExpPoly shift = ep_monomial(mono, 1.0);
    InvariantOp out;
    for (const auto& [d, r] : op.comp) {
        RatCoeff rr = rc_subst_refl(rd, r);
        if (i == 0) rr = rc_mul_poly(rr, shift);
        for (const auto& [dd, cc] : detail::conj_monomial(rd.M, d))
            iop_accum(out, dd, rr, static_cast<double>(cc));
    }
    return out;
}

// evaluates (op F~)(a) against the stored series tables
inline Cplx iop_value(const NumericContext& ctx, const InvariantOp& op, const HypergeomTables& t,
                      const LogPoint& a) {
    for (double x : a.x)
        if (!(x > 0.0)) throw NotInPositiveChamber();
    std::vector<Cplx> u(ctx.n);
    for (int j = 0; j < ctx.n; ++j) u[j] = std::exp(-a.x[j]);
    Cplx sum = 0.0;
    for (const auto& [d, r] : op.comp) {
        Cplx coef = rc_eval(r, u);
        if (coef == 0.0) continue;
        Cplx dsum = 0.0;
        for (size_t w = 0; w < ctx.W->size(); ++w) {
            if (t.ctil[w] == 0.0) continue;
            CVec base = act_num(ctx, static_cast<int>(w), t.lam);
            for (int j = 0; j < ctx.n; ++j) base[j] -= ctx.rho_f[j];
            CVec aco = alpha_coords_num(ctx, base);
            for (const auto& [c, g] : t.by_w[w].coef) {
                Cplx mono = g;
                Cplx ex = 0.0;
                for (int j = 0; j < ctx.n; ++j) {
                    Cplx aj = aco[j] - static_cast<double>(c[j]);
                    for (int p = 0; p < d[j]; ++p) mono *= aj;
                    ex += aj * a.x[j];
                }
                dsum += mono * std::exp(ex);
            }
            dsum *= t.ctil[w];
            sum += coef * dsum;
            dsum = 0.0;
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// The nonsymmetric eigenfunction

// Carries the series tables together with the operator that projects the
// symmetric eigenfunction onto the chosen spectral branch.
struct GFunction {
    HypergeomTables tables;
    InvariantOp op;
    std::vector<double> dir;
};

// Builds |W| q(T_dir) applied to F for the branch lam, where dir is a
// coweight direction separating the orbit of lam; lam(alpha^vee) must avoid
// 0 and k_alpha and the dir-values of the orbit must be pairwise distinct.
inline GFunction g_function(const NumericContext& ctx, const CVec& lam, int depth,
                            std::vector<double> dir = {}) {
    if (dir.empty()) {
        dir.assign(ctx.n, 0.0);
        for (int j = 0; j < ctx.n; ++j) dir[j] = std::pow(3.0, j);
    }
    GFunction g;
    g.tables = hypergeom_tables(ctx, lam, depth);
    g.dir = dir;
    Cplx pre = 1.0;
    for (int r : ctx.rs->positive_roots()) {
        Cplx p = pair_num(ctx, lam, r);
        if (std::abs(p) < 1e-10 || std::abs(p - ctx.kroot[r]) < 1e-10) throw ResonantParameter();
        pre /= (1.0 - ctx.kroot[r] / p);
    }
    auto dir_value = [&](const CVec& v) {
        CVec ac = alpha_coords_num(ctx, v);
        Cplx s = 0.0;
        for (int j = 0; j < ctx.n; ++j) s += dir[j] * ac[j];
        return s;
    };
    Cplx lam_dir = dir_value(lam);
    InvariantOp op = iop_identity(ctx.n);
    for (size_t w = 0; w < ctx.W->size(); ++w) {
        if (static_cast<int>(w) == ctx.W->identity()) continue;
        Cplx wl = dir_value(act_num(ctx, static_cast<int>(w), lam));
        Cplx denom = lam_dir - wl;
        if (std::abs(denom) < 1e-10) throw ResonantParameter();
        InvariantOp tw = apply_T_inv(ctx, dir, op);
        iop_add(tw, op, -wl);
        iop_scale(tw, 1.0 / denom);
        op = std::move(tw);
    }
    Cplx norm = gauss_normalization(ctx);
    iop_scale(op, pre * static_cast<double>(ctx.W->size()) / norm);
    g.op = std::move(op);
    return g;
}

inline Cplx g_value(const NumericContext& ctx, const GFunction& g, const LogPoint& a) {
    return iop_value(ctx, g.op, g.tables, a);
}

// Value of the nonsymmetric eigenfunction at a point of A_+.
inline Cplx G_nonsym(const NumericContext& ctx, const CVec& lam, const LogPoint& a, int depth,
                     std::vector<double> dir = {}) {
    GFunction g = g_function(ctx, lam, depth, std::move(dir));
    return g_value(ctx, g, a);
}

// ---------------------------------------------------------------------------
// Affine intertwiner identity on the eigenfunction (rank one)

// Applies the affine intertwiner I_i to the eigenfunction operator; i = 1 is
// the finite simple reflection, i = 0 the affine one.
inline InvariantOp intertwiner_on_g_op(const NumericContext& ctx, int i, const InvariantOp& op) {
    double kk = ctx.kroot[ctx.rs->simple_roots()[0]];
    std::vector<double> dir = {1.0};
    InvariantOp out;
    if (i == 1) {
        // a_1(T) = T_{alpha^vee} = 2 T_xi
        InvariantOp at = apply_T_inv(ctx, dir, op);
        iop_scale(at, 2.0);
        out = apply_pi_inv(ctx, 1, at);
    } else {
        // a_0(T) = 1 - T_{theta^vee} = 1 - 2 T_xi
        InvariantOp at = apply_T_inv(ctx, dir, op);
        iop_scale(at, -2.0);
        iop_add(at, op);
        out = apply_pi_inv(ctx, 0, at);
    }
    iop_add(out, op, kk);
    return out;
}

// Residual of I_i G(lam) = (lam(a_i) + k) G(r_i lam) over a grid of points,
// where the factor runs over the affine inversion set of r_i.
inline double intertwiner_action_on_G_check(const NumericContext& ctx, const CVec& lam, int i,
                                            int depth, const std::vector<double>& grid_y) {
    if (ctx.n != 1) throw std::invalid_argument("closed-form comparison is rank-one only");
    double kk = ctx.kroot[ctx.rs->simple_roots()[0]];
    GFunction g = g_function(ctx, lam, depth, {1.0});
    InvariantOp ig = intertwiner_on_g_op(ctx, i, g.op);
    Cplx factor;
    CVec lam_img(1);
    if (i == 1) {
        factor = lam[0] + kk;
        lam_img[0] = -lam[0];
    } else {
        factor = (1.0 - lam[0]) + kk;
        lam_img[0] = 2.0 - lam[0];
    }
    GFunction g2 = g_function(ctx, lam_img, depth, {1.0});
    double worst = 0.0;
    for (double y : grid_y) {
        LogPoint a{{std::log(y)}};
        Cplx lhs = iop_value(ctx, ig, g.tables, a);
        Cplx rhs = factor * g_value(ctx, g2, a);
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

}  // namespace cherednik
