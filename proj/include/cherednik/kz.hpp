#pragma once
// Trigonometric Knizhnik-Zamolodchikov connection on the trivial bundle with
// fiber the group algebra of W.  Along each coweight direction the connection
// form is a |W| x |W| matrix whose entries are rational in the wall
// coordinates e^{-alpha}(a); reflections act on the fiber by left
// multiplication.  Derivative matrices are assembled analytically so the
// curvature residual carries no finite-difference error.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hypergeom.hpp"

namespace cherednik {

struct SingularPoint : std::runtime_error {
    SingularPoint() : std::runtime_error("connection matrices have a pole at this point") {}
};

using KZMat = std::vector<std::vector<Cplx>>;

// One matrix per direction xi_i (the coweights dual to the simple roots),
// plus all first derivatives along the same directions.
struct KZMatrices {
    int n = 0;
    size_t order = 0;
    std::vector<KZMat> m;                // m[i]: form along xi_i
    std::vector<std::vector<KZMat>> dm;  // dm[i][j]: derivative along xi_i of m[j]
};

// Rows and columns are indexed by Weyl group elements; the component at u
// picks up the diagonal weight -(u lambda)(xi_i), the wall term couples u to
// r_alpha u with minus the sign of u^{-1} alpha as the constant part (the
// convention that annihilates the vector of eigenfunction translates).
inline KZMatrices kz_matrices(const NumericContext& ctx, const CVec& lam, const LogPoint& a,
                              double wall_tol = 1e-12) {
    const int n = ctx.n;
    const size_t N = ctx.W->size();
    KZMatrices kz;
    kz.n = n;
    kz.order = N;
    kz.m.assign(n, KZMat(N, std::vector<Cplx>(N, Cplx(0.0))));
    kz.dm.assign(n, std::vector<KZMat>(n, KZMat(N, std::vector<Cplx>(N, Cplx(0.0)))));

    for (size_t u = 0; u < N; ++u) {
        CVec aco = alpha_coords_num(ctx, act_num(ctx, static_cast<int>(u), lam));
        for (int j = 0; j < n; ++j) kz.m[j][u][u] -= aco[j];
    }

    for (int r : ctx.rs->positive_roots()) {
        const auto& acoR = ctx.rs->root(r).alpha;
        double e = 0.0;
        for (int j = 0; j < n; ++j) e += static_cast<double>(acoR[j]) * a.x[j];
        double ur = std::exp(-e);
        if (std::abs(1.0 - ur) < wall_tol) throw SingularPoint();
        double f = (1.0 + ur) / (1.0 - ur);
        double g = ur / ((1.0 - ur) * (1.0 - ur));
        double kr = ctx.kroot[r];
        int sref = ctx.W->reflection(r);
        for (size_t u = 0; u < N; ++u) {
            size_t v = static_cast<size_t>(ctx.W->mul(sref, static_cast<int>(u)));
            double sgn = ctx.W->sends_negative(ctx.W->inv(static_cast<int>(u)), r) ? -1.0 : 1.0;
            for (int j = 0; j < n; ++j) {
                double aj = static_cast<double>(acoR[j]);
                kz.m[j][u][u] += 0.5 * kr * aj * f;
                kz.m[j][u][v] += 0.5 * kr * aj * (-sgn - f);
                for (int i = 0; i < n; ++i) {
                    double ai = static_cast<double>(acoR[i]);
                    kz.dm[i][j][u][u] -= kr * ai * aj * g;
                    kz.dm[i][j][u][v] += kr * ai * aj * g;
                }
            }
        }
    }
    return kz;
}

// max-entry norm of d_i M_j - d_j M_i + [M_i, M_j] over all direction pairs
inline double kz_flatness_residual(const KZMatrices& kz) {
    const size_t N = kz.order;
    double worst = 0.0;
    for (int i = 0; i < kz.n; ++i) {
        for (int j = i + 1; j < kz.n; ++j) {
            for (size_t r = 0; r < N; ++r) {
                for (size_t c = 0; c < N; ++c) {
                    Cplx comm = 0.0;
                    for (size_t s = 0; s < N; ++s)
                        comm += kz.m[i][r][s] * kz.m[j][s][c] - kz.m[j][r][s] * kz.m[i][s][c];
                    double v = std::abs(kz.dm[i][j][r][c] - kz.dm[j][i][r][c] + comm);
                    if (v > worst) worst = v;
                }
            }
        }
    }
    return worst;
}

}  // namespace cherednik
