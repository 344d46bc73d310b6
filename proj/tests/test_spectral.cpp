#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cherednik/spectral.hpp"

using namespace cherednik;

namespace {

RatVec rvec(std::vector<long> num, std::vector<long> den) {
    RatVec v;
    for (size_t i = 0; i < num.size(); ++i) v.push_back(rat(num[i], den[i]));
    return v;
}

std::string center_key(const ResidualSubspace& L) { return spectral_detail::vec_key(L.center); }

// image of a defining system under a simple reflection, canonicalized
std::string reflected_key(const RootSystem& rs, const ResidualSubspace& L, int simple_pos) {
    const auto& sv = rs.root(rs.simple_roots()[static_cast<size_t>(simple_pos)]).pair_sv;
    RatMat M;
    RatVec b = L.levels;
    for (const RatVec& row : L.eqs) {
        Rational c = 0;
        for (size_t m = 0; m < row.size(); ++m) c += row[m] * Rational(sv[m]);
        RatVec nr = row;
        nr[static_cast<size_t>(simple_pos)] -= c;
        M.push_back(std::move(nr));
    }
    int rank = spectral_detail::rref_system(M, b);
    REQUIRE(rank == L.codim);
    return spectral_detail::system_key(M, b);
}

}  // namespace

TEST_CASE("spectral densities degenerate to one and match the c-function") {
    RootSystem rs("A2");
    WeylGroup W(rs);
    NumericContext ctx0 = make_numeric_context(rs, W, {0.0});
    SigmaDensities d0 = sigma_densities(ctx0, {Cplx(0.31, 0.2), Cplx(-0.4, 0.7)});
    CHECK(std::abs(d0.sigma - 1.0) == 0.0);
    CHECK(std::abs(d0.sigma_prime - 1.0) == 0.0);

    RootSystem rs1("A1");
    WeylGroup W1(rs1);
    NumericContext ctx = make_numeric_context(rs1, W1, {0.5});
    CVec lam{Cplx(0.0, 0.7)};
    SigmaDensities d = sigma_densities(ctx, lam);
    CHECK(d.sigma_prime.real() > 0.0);
    CHECK(std::abs(d.sigma_prime.imag()) < 1e-12 * d.sigma_prime.real());
    CHECK(sigma_c_identity_residual(ctx, lam) < 1e-10);

    NumericContext ctx2 = make_numeric_context(rs, W, {0.3});
    CHECK(sigma_c_identity_residual(ctx2, {Cplx(0.21, 0.63), Cplx(-0.47, 0.29)}) < 1e-10);

    // exact zero of the first numerator argument is a pole of sigma
    CHECK_THROWS_AS(sigma_densities(ctx, CVec{Cplx(-0.5, 0.0)}), PoleAtArgument);
}

TEST_CASE("densities satisfy the affine reflection functional equation") {
    auto check_all = [](const NumericContext& ctx, const CVec& lam) {
        for (int i = 0; i <= ctx.n; ++i) {
            Cplx li = affine_pair(ctx, lam, i);
            double ki = affine_mult(ctx, i);
            Cplx lhs = (Cplx(1.0) + ki / li) * sigma_densities(ctx, lam).sigma;
            Cplx rhs =
                (Cplx(1.0) - ki / li) * sigma_densities(ctx, affine_reflect(ctx, lam, i)).sigma;
            CHECK(std::abs(lhs - rhs) < 1e-10 * (std::abs(lhs) + 1.0));
        }
    };
    {
        RootSystem rs("A2");
        WeylGroup W(rs);
        NumericContext ctx = make_numeric_context(rs, W, {0.3});
        check_all(ctx, {Cplx(0.37, 0.21), Cplx(-0.54, 0.43)});
        check_all(ctx, {Cplx(-0.13, -0.62), Cplx(0.29, 0.18)});
    }
    {
        RootSystem rs("B2");
        WeylGroup W(rs);
        NumericContext ctx = make_numeric_context(rs, W, {0.3, -0.1});
        check_all(ctx, {Cplx(0.41, 0.33), Cplx(-0.27, 0.56)});
        check_all(ctx, {Cplx(-0.35, 0.44), Cplx(0.52, -0.21)});
    }
}

TEST_CASE("integrability window is decided exactly") {
    RootSystem a1("A1"), a2("A2"), b2("B2"), g2("G2");
    CHECK(integrability_check(a2, {rat(0)}));
    CHECK(integrability_check(b2, {rat(0), rat(3)}));
    CHECK(integrability_check(a1, {rat(-2, 5)}));
    CHECK_FALSE(integrability_check(a1, {rat(-3, 5)}));
    CHECK_FALSE(integrability_check(a2, {rat(-1, 3)}));
    CHECK(integrability_check(a2, {rat(-33, 100)}));
    // mixed signs sit outside both covered windows
    CHECK_FALSE(integrability_check(b2, {rat(1, 2), rat(-1, 2)}));
    // boundary at minus the reciprocal Coxeter number
    CHECK_FALSE(integrability_check(g2, {rat(-1, 6), rat(-1, 6)}));
    CHECK(integrability_check(g2, {rat(-33, 200), rat(-33, 200)}));
}

TEST_CASE("rank one residual points sit at the shifted origin") {
    RootSystem rs("A1");
    auto out = enumerate_residual(rs, {rat(-1, 4)});
    REQUIRE(out.size() == 3);
    CHECK(out[0].codim == 0);
    CHECK(out[0].center == rvec({0}, {1}));
    CHECK(out[0].count_k == 0);
    CHECK(out[0].count_zero == 0);
    CHECK(out[0].center_distinguished);
    CHECK(out[0].minus_center_in_orbit);
    for (int i = 1; i <= 2; ++i) {
        CHECK(out[i].codim == 1);
        CHECK(out[i].count_k == 1);
        CHECK(out[i].count_zero == 0);
        CHECK(out[i].distinguished);
        CHECK(out[i].center_distinguished);
        CHECK(out[i].minus_center_in_orbit);
    }
    CHECK(out[1].center == rvec({-1}, {4}));
    CHECK(out[2].center == rvec({1}, {4}));

    auto dom = enumerate_residual(rs, {rat(-1, 4)}, true);
    REQUIRE(dom.size() == 2);
    CHECK(dom[0].codim == 0);
    CHECK(dom[1].center == rvec({-1}, {4}));

    // any vanishing multiplicity degenerates the arrangement to the full space
    auto triv = enumerate_residual(rs, {rat(0)});
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].codim == 0);
}

TEST_CASE("rank two residual points form the orbit of the shifted half sum") {
    RootSystem rs("A2");
    auto out = enumerate_residual(rs, {rat(-1, 5)});
    REQUIRE(out.size() == 13);

    std::set<std::string> points;
    int n_lines = 0;
    for (const auto& L : out) {
        if (L.codim == 2) points.insert(center_key(L));
        if (L.codim == 1) {
            ++n_lines;
            CHECK(L.count_k == 1);
            CHECK(L.count_zero == 0);
        }
    }
    CHECK(n_lines == 6);
    REQUIRE(points.size() == 6);
    // the six images of (k, k) under the Weyl group, k = -1/5
    std::set<std::string> expect;
    auto put = [&](long n1, long d1, long n2, long d2) {
        expect.insert(spectral_detail::vec_key(rvec({n1, n2}, {d1, d2})));
    };
    put(-1, 5, -1, 5);
    put(1, 5, 1, 5);
    put(1, 5, -2, 5);
    put(-2, 5, 1, 5);
    put(2, 5, -1, 5);
    put(-1, 5, 2, 5);
    CHECK(points == expect);

    auto dom = enumerate_residual(rs, {rat(-1, 5)}, true);
    REQUIRE(dom.size() == 3);
    CHECK(dom[0].codim == 0);
    CHECK(dom[1].codim == 1);
    CHECK(dom[1].center == rvec({-1, -1}, {10, 10}));
    CHECK(dom[2].codim == 2);
    CHECK(dom[2].center == rvec({-1, -1}, {5, 5}));
}

TEST_CASE("residual subspaces carry exact counts and symmetric centers") {
    std::mt19937 gen(20250822u);
    std::uniform_int_distribution<long> num(-12, -1), den(1, 9);
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs(type);
        const int no = rs.n_orbits();
        std::vector<std::vector<Rational>> cases;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> korb;
            for (int o = 0; o < no; ++o) korb.push_back(rat(num(gen), den(gen)));
            cases.push_back(korb);
        }
        if (no == 2) {
            cases.push_back({rat(-1, 3), rat(-1, 3)});
            cases.push_back({rat(-2, 5), rat(-1, 5)});
            cases.push_back({rat(-3, 7), rat(-1, 7)});
            cases.push_back({rat(-1, 6), rat(-1, 3)});
        } else {
            cases.push_back({rat(-1, 3)});
        }
        for (const auto& korb : cases) {
            auto out = enumerate_residual(rs, korb);
            REQUIRE(!out.empty());
            CHECK(out[0].codim == 0);
            std::set<std::string> keys;
            for (const auto& L : out) keys.insert(spectral_detail::system_key(L.eqs, L.levels));
            for (const auto& L : out) {
                CHECK(L.count_k == L.count_zero + L.codim);
                CHECK(L.center_distinguished);
                CHECK(L.minus_center_in_orbit);
                for (int i = 0; i < rs.rank(); ++i)
                    CHECK(keys.count(reflected_key(rs, L, i)) == 1);
            }
        }
    }
}

TEST_CASE("residue densities reduce to the plancherel density on the full space") {
    RootSystem rs("A2");
    WeylGroup W(rs);
    NumericContext ctx = make_numeric_context(rs, W, {0.3});
    std::vector<Rational> korb{rat(3, 10)};
    auto out = enumerate_residual(rs, korb);
    REQUIRE(!out.empty());
    REQUIRE(out[0].codim == 0);  // counting of subspaces is sign-blind, so
                                 // positive multiplicity still yields points
    CVec lam{Cplx(0.0, 0.31), Cplx(0.0, 0.53)};
    Cplx ct = c_tilde_numeric(ctx, rho_cvec(ctx), ctx.W->identity());
    Cplx expect = ct * ct * sigma_densities(ctx, lam).sigma_prime;
    Cplx got = residual_density(ctx, korb, out[0], lam);
    CHECK(std::abs(got - expect) < 1e-10 * std::abs(expect));

    // purely imaginary spectral parameter keeps the density positive
    for (double t : {0.2, 0.9, 1.7}) {
        Cplx v = residual_density(ctx, korb, out[0], {Cplx(0.0, t), Cplx(0.0, 0.4 * t)});
        CHECK(v.real() > 0.0);
        CHECK(std::abs(v.imag()) < 1e-10 * v.real());
    }

    NumericContext ctx0 = make_numeric_context(rs, W, {0.0});
    auto triv = enumerate_residual(rs, {rat(0)});
    Cplx one = residual_density(ctx0, {rat(0)}, triv[0], lam);
    CHECK(std::abs(one - 1.0) < 1e-15);
}

TEST_CASE("residue density at the rank one point drops the vanishing factors") {
    RootSystem rs("A1");
    WeylGroup W(rs);
    const double k = -0.25;
    NumericContext ctx = make_numeric_context(rs, W, {k});
    std::vector<Rational> korb{rat(-1, 4)};
    auto dom = enumerate_residual(rs, korb, true);
    REQUIRE(dom.size() == 2);
    const ResidualSubspace& pt = dom[1];
    CVec lam{Cplx(-0.25, 0.0)};
    Cplx got = residual_density(ctx, korb, pt, lam);
    Cplx ct = c_tilde_numeric(ctx, rho_cvec(ctx), ctx.W->identity());
    double ratio = std::tgamma(2.0 * k) / (std::tgamma(k) * std::tgamma(-k));
    Cplx expect = ct * ct * ratio;
    CHECK(std::abs(got - expect) < 1e-12 * std::abs(expect));
    CHECK(got.real() > 0.0);
}

TEST_CASE("normal crossing residues multiply the smooth value by the covolume") {
    const double two_pi = 2.0 * 3.14159265358979323846;
    Cplx phi(2.3, 0.7);
    {
        auto res = normal_crossing_residue({{rat(1)}}, {rat(-1, 4)}, phi);
        CHECK(res.center == rvec({-1}, {4}));
        CHECK(res.det_path == 1.0);
        CHECK(res.covolume_path == 1.0);
        CHECK(std::abs(res.value - Cplx(0.0, -two_pi) * phi) < 1e-12);
    }
    {
        RatMat A{{rat(1), rat(0)}, {rat(0), rat(1)}};
        auto res = normal_crossing_residue(A, rvec({-1, -1}, {3, 2}), phi);
        CHECK(res.det_path == 1.0);
        CHECK(res.covolume_path == 1.0);
        Cplx expect = Cplx(0.0, -two_pi) * Cplx(0.0, -two_pi) * phi;
        CHECK(std::abs(res.value - expect) < 1e-12);
    }
    {
        RatMat A{{rat(2), rat(-1)}, {rat(-1), rat(2)}};
        auto res = normal_crossing_residue(A, rvec({-1, -1}, {3, 3}), phi);
        CHECK(res.center == rvec({-1, -1}, {3, 3}));
        // gram determinant 9 against covector determinant 3: the two
        // normalizations agree
        CHECK(std::abs(res.det_path - 1.0 / 3.0) < 1e-15);
        CHECK(std::abs(res.covolume_path - 1.0 / 3.0) < 1e-15);
        Cplx expect = Cplx(0.0, -two_pi) * Cplx(0.0, -two_pi) * phi / 3.0;
        CHECK(std::abs(res.value - expect) < 1e-12);

        CHECK_THROWS_AS(normal_crossing_residue(A, rvec({1, 1}, {3, 3}), phi),
                        OriginNotInAntidual);
    }
    CHECK_THROWS_AS(
        normal_crossing_residue({{rat(1), rat(1)}, {rat(2), rat(2)}}, rvec({-1, -1}, {2, 2}), phi),
        NotNormalCrossing);
    CHECK_THROWS_AS(normal_crossing_residue({{rat(1), rat(0)}}, {rat(-1)}, phi), NotNormalCrossing);
}

TEST_CASE("rank one spectral mass matches quadrature of the weight") {
    PlancherelReport rep = rank1_plancherel_check(-0.25);
    CHECK(rep.rel_err < 1e-6);
    CHECK(rep.closed_form > 0.0);

    // Gamma recurrences pin the ratio against the half-density convention
    const double k = -0.25;
    double half_density =
        0.5 * std::exp(std::lgamma(2.0 * k) + std::lgamma(-k) - std::lgamma(k));
    CHECK(std::abs(rep.closed_form / half_density - 4.0) < 1e-10);

    // a second multiplicity away from the symmetric point
    PlancherelReport rep2 = rank1_plancherel_check(-0.35);
    CHECK(rep2.rel_err < 1e-6);

    CHECK_THROWS_AS(rank1_plancherel_check(-0.6), NotIntegrable);
    CHECK_THROWS_AS(rank1_plancherel_check(0.1), NotIntegrable);

    // mass blows up toward vanishing multiplicity
    CHECK(rank1_weight_mass(-1e-3) > 300.0);
}
