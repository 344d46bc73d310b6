#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cherednik/affine.hpp"
#include "cherednik/root_system.hpp"
#include "cherednik/weyl.hpp"

#include <set>

using namespace cherednik;

TEST_CASE("root counts and Weyl orders") {
    struct Row {
        const char* type;
        size_t n_roots;
        long long weyl;
    };
    const Row rows[] = {
        {"A1", 2, 2},     {"A2", 6, 6},      {"A3", 12, 24},    {"B2", 8, 8},
        {"B3", 18, 48},   {"C3", 18, 48},    {"D4", 24, 192},   {"G2", 12, 12},
        {"F4", 48, 1152}, {"E6", 72, 51840},
    };
    for (const auto& row : rows) {
        CAPTURE(row.type);
        RootSystem rs(row.type);
        CHECK(rs.n_roots() == row.n_roots);
        CHECK(rs.n_positive() == row.n_roots / 2);
        CHECK(rs.weyl_order() == row.weyl);
    }
}

TEST_CASE("exponents") {
    CHECK(RootSystem("A2").exponents() == std::vector<long>{1, 2});
    CHECK(RootSystem("B2").exponents() == std::vector<long>{1, 3});
    CHECK(RootSystem("G2").exponents() == std::vector<long>{1, 5});
    CHECK(RootSystem("D4").exponents() == std::vector<long>{1, 3, 3, 5});
    CHECK(RootSystem("F4").exponents() == std::vector<long>{1, 5, 7, 11});
    CHECK(RootSystem("E6").exponents() == std::vector<long>{1, 4, 5, 7, 8, 11});
}

TEST_CASE("cartan conventions") {
    RootSystem g2("G2");
    CHECK(g2.cartan(0, 1) == -3);  // alpha_2(alpha_1^vee)
    CHECK(g2.cartan(1, 0) == -1);
    CHECK(g2.gram()[0][0] == 2);
    CHECK(g2.gram()[1][1] == 6);
    CHECK(g2.gram()[0][1] == -3);

    RootSystem b2("B2");
    CHECK(b2.root(b2.simple_roots()[0]).len2 == 2);  // long first in type B
    CHECK(b2.root(b2.simple_roots()[1]).len2 == 1);
    CHECK(b2.n_orbits() == 2);
    CHECK(RootSystem("A3").n_orbits() == 1);
}

TEST_CASE("highest roots and coroot coordinates") {
    RootSystem b2("B2");
    const Root& th = b2.root(b2.theta_short());
    CHECK(th.alpha == std::vector<long>{1, 1});
    CHECK(th.coroot_alpha == RatVec{Rational(2), Rational(1)});
    CHECK(b2.root(b2.theta_long()).alpha == std::vector<long>{1, 2});

    RootSystem g2("G2");
    CHECK(g2.root(g2.theta_short()).coroot_alpha == RatVec{Rational(2), Rational(3)});

    RootSystem a2("A2");
    CHECK(a2.theta_short() == a2.theta_long());  // simply laced
    CHECK(a2.root(a2.theta_short()).alpha == std::vector<long>{1, 1});
}

TEST_CASE("weight reflections and pairings") {
    RootSystem a2("A2");
    Weight l1 = a2.fundamental_weight(0);
    CHECK(a2.pair_coroot(l1, a2.simple_roots()[0]) == 1);
    CHECK(a2.pair_coroot(l1, a2.simple_roots()[1]) == 0);
    Weight r = a2.reflect(l1, a2.simple_roots()[0]);
    // r_1(Lambda_1) = Lambda_1 - alpha_1 = -Lambda_1 + Lambda_2
    CHECK(r.c2 == std::vector<long long>{-2, 2});
    CHECK(a2.reflect(r, a2.simple_roots()[0]) == l1);

    // (delta, alpha_i^vee) = 1 for all i
    Weight d = a2.delta_weight();
    for (int i = 0; i < 2; ++i) CHECK(a2.pair_coroot(d, a2.simple_roots()[i]) == 1);
}

TEST_CASE("alpha coordinates and inner products") {
    RootSystem a2("A2");
    Weight l1 = a2.fundamental_weight(0);
    RatVec ac = a2.alpha_coords(l1);
    CHECK(ac == RatVec{rat(2, 3), rat(1, 3)});
    CHECK(a2.inner(l1, l1) == rat(2, 3));
    Weight theta = a2.root_weight(a2.theta_short());
    CHECK(a2.inner(theta, theta) == 2);

    RootSystem g2("G2");
    Weight hs = g2.root_weight(g2.theta_short());
    CHECK(g2.inner(hs, hs) == 2);
    Weight hl = g2.root_weight(g2.theta_long());
    CHECK(g2.inner(hl, hl) == 6);
}

TEST_CASE("dominance order") {
    RootSystem a2("A2");
    Weight zero = a2.zero_weight();
    Weight a1 = a2.root_weight(a2.simple_roots()[0]);
    Weight theta = a2.root_weight(a2.theta_short());
    CHECK(a2.dominance_leq(zero, theta));
    CHECK(a2.dominance_leq(a1, theta));
    CHECK_FALSE(a2.dominance_leq(theta, a1));
    // Lambda_1 and 0 lie in different P/Q cosets
    CHECK_FALSE(a2.dominance_leq(zero, a2.fundamental_weight(0)));
    CHECK_FALSE(a2.dominance_leq(a2.fundamental_weight(0), zero));
}

TEST_CASE("modified order on an orbit") {
    RootSystem a1("A1");
    Weight l1 = a1.fundamental_weight(0);
    // the dominant weight sits below the rest of its orbit
    CHECK(a1.cher_lt(l1, -l1));
    CHECK_FALSE(a1.cher_lt(-l1, l1));
    CHECK_FALSE(a1.cher_lt(l1, l1));
    // across orbits the dominant representatives decide
    Weight alpha = a1.root_weight(a1.simple_roots()[0]);
    CHECK(a1.cher_lt(a1.zero_weight(), alpha));
    CHECK(a1.cher_lt(a1.zero_weight(), -alpha));
    CHECK(a1.cher_lt(-l1, l1 + alpha));

    RootSystem a2("A2");
    Weight mu = a2.fundamental_weight(0);
    for (const Weight& w : WeylGroup(a2).orbit(mu))
        if (!(w == mu)) CHECK(a2.cher_lt(mu, w));
}

TEST_CASE("dominant representative") {
    RootSystem b2("B2");
    WeylGroup W(b2);
    Weight lam = b2.fundamental_weight(0) - b2.root_weight(b2.theta_long());
    std::vector<int> word;
    Weight dom = b2.dominant_rep(lam, &word);
    CHECK(b2.is_dominant(dom));
    // replaying the word inverted sends dom back to lam
    Weight back = dom;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        back = b2.reflect(back, b2.simple_roots()[*it]);
    CHECK(back == lam);
}

TEST_CASE("weyl group structure") {
    RootSystem a2("A2");
    WeylGroup W(a2);
    CHECK(W.size() == 6);
    CHECK(W.length(W.longest()) == 3);
    CHECK(W.sign(W.longest()) == -1);
    // w0 sends every positive root to a negative one
    for (int r : a2.positive_roots()) CHECK(W.sends_negative(W.longest(), r));
    // inversion count equals length
    for (size_t w = 0; w < W.size(); ++w)
        CHECK(W.inversion_roots(static_cast<int>(w)).size() ==
              static_cast<size_t>(W.length(static_cast<int>(w))));
    // action is a homomorphism
    Weight x = a2.fundamental_weight(0) + a2.fundamental_weight(1) * 3;
    for (size_t a = 0; a < W.size(); ++a)
        for (size_t b = 0; b < W.size(); ++b) {
            int ai = static_cast<int>(a), bi = static_cast<int>(b);
            CHECK(W.act(W.mul(ai, bi), x) == W.act(ai, W.act(bi, x)));
        }
    for (size_t a = 0; a < W.size(); ++a) {
        int ai = static_cast<int>(a);
        CHECK(W.mul(ai, W.inv(ai)) == W.identity());
    }
}

TEST_CASE("reflections through nonsimple roots") {
    RootSystem b2("B2");
    WeylGroup W(b2);
    for (int r : b2.positive_roots()) {
        int s = W.reflection(r);
        CHECK(W.mul(s, s) == W.identity());
        CHECK(W.length(s) % 2 == 1);
        Weight rw = b2.root_weight(r);
        CHECK(W.act(s, rw) == -rw);
    }
    // reflection through a simple root agrees with the generator
    CHECK(W.reflection(b2.simple_roots()[0]) == W.simple(0));
}

TEST_CASE("coset representatives") {
    RootSystem a2("A2");
    WeylGroup W(a2);
    Weight l1 = a2.fundamental_weight(0);
    auto orbit = W.orbit(l1);
    CHECK(orbit.size() == 3);
    auto reps = W.minimal_orbit_reps(l1);
    CHECK(reps.size() == 3);
    // stabilizer of Lambda_1 is generated by r_2
    auto stab = W.dominant_stabilizer_simples(l1);
    CHECK(stab == std::vector<int>{1});
    CHECK(W.parabolic_longest(stab) == W.simple(1));
    // longest w with w(Lambda_1) = Lambda_1 is that stabilizer generator
    CHECK(W.longest_taking(l1, l1) == W.simple(1));
    // the longest element taking delta (regular) anywhere is unique
    Weight d = a2.delta_weight();
    for (size_t w = 0; w < W.size(); ++w)
        CHECK(W.longest_taking(d, W.act(static_cast<int>(w), d)) == static_cast<int>(w));
}

TEST_CASE("weyl group guard") {
    RootSystem e7("E7");
    CHECK(e7.n_roots() == 126);
    CHECK_THROWS_AS(WeylGroup{e7}, std::domain_error);
}

TEST_CASE("affine lengths in rank one") {
    RootSystem a1("A1");
    WeylGroup W(a1);
    AffineWeyl aff(a1, W);
    Weight l1 = a1.fundamental_weight(0);
    CHECK(aff.length(aff.from_translation(l1)) == 1);
    CHECK(aff.length(aff.from_translation(-l1)) == 1);
    CHECK(aff.length(aff.identity()) == 0);
    CHECK(aff.length(aff.simple(0)) == 1);
    CHECK(aff.length(aff.simple(1)) == 1);
    // t_{2 Lambda_1} = t_alpha has length 2
    CHECK(aff.length(aff.from_translation(l1 * 2)) == 2);
}

TEST_CASE("affine decomposition recomposes") {
    RootSystem a1("A1");
    WeylGroup W(a1);
    AffineWeyl aff(a1, W);
    Weight l1 = a1.fundamental_weight(0);

    auto dec = aff.decompose(aff.from_translation(-l1));
    CHECK(dec.word == std::vector<int>{0});
    CHECK(dec.omega.t == l1);
    CHECK(dec.omega.w == W.longest());

    RootSystem b2("B2");
    WeylGroup Wb(b2);
    AffineWeyl affb(b2, Wb);
    std::vector<Weight> lams{
        b2.zero_weight(), b2.fundamental_weight(0), b2.fundamental_weight(1),
        -b2.fundamental_weight(1), b2.fundamental_weight(0) - b2.fundamental_weight(1) * 2};
    for (const auto& lam : lams)
        for (size_t u = 0; u < Wb.size(); ++u) {
            ExtAffElt e{lam * 2, static_cast<int>(u)};
            auto d = affb.decompose(e);
            CHECK(static_cast<long>(d.word.size()) == affb.length(e));
            ExtAffElt rec = d.omega;
            for (int i : d.word) rec = affb.mul(rec, affb.simple(i));
            CHECK(rec == e);
        }
}

TEST_CASE("length zero subgroup") {
    struct Row {
        const char* type;
        size_t omega_size;
    };
    const Row rows[] = {{"A1", 2}, {"A2", 3}, {"A3", 4}, {"B2", 2}, {"G2", 1}, {"D4", 4}};
    for (const auto& row : rows) {
        CAPTURE(row.type);
        RootSystem rs(row.type);
        WeylGroup W(rs);
        AffineWeyl aff(rs, W);
        auto om = aff.omega_group();
        CHECK(om.size() == row.omega_size);
        for (const auto& a : om) CHECK(aff.length(a) == 0);
        // closure under multiplication
        for (const auto& a : om)
            for (const auto& b : om) {
                ExtAffElt c = aff.mul(a, b);
                CHECK(aff.length(c) == 0);
                bool found = false;
                for (const auto& x : om)
                    if (x == c) found = true;
                CHECK(found);
            }
    }
}

TEST_CASE("minuscule nodes") {
    auto nodes = [](const char* t) {
        RootSystem rs(t);
        WeylGroup W(rs);
        return AffineWeyl(rs, W).minuscule_nodes();
    };
    CHECK(nodes("A2") == std::vector<int>{0, 1});
    CHECK(nodes("B2") == std::vector<int>{1});
    CHECK(nodes("G2") == std::vector<int>{});
    CHECK(nodes("D4") == std::vector<int>{0, 2, 3});
    CHECK(nodes("E6") == std::vector<int>{0, 5});
}

TEST_CASE("minimal coset representative") {
    RootSystem a1("A1");
    WeylGroup W(a1);
    AffineWeyl aff(a1, W);
    Weight l1 = a1.fundamental_weight(0);
    // t_{-Lambda_1} is already the shortest element of its coset
    ExtAffElt m = aff.min_length_rep(-l1);
    CHECK(m == aff.from_translation(-l1));
    // for +Lambda_1 the shortest representative is omega_1 = t_{Lambda_1} w0
    ExtAffElt p = aff.min_length_rep(l1);
    CHECK(aff.length(p) == 0);
    CHECK(p.w == W.longest());
}

TEST_CASE("affine action on affine roots matches lengths") {
    RootSystem a2("A2");
    WeylGroup W(a2);
    AffineWeyl aff(a2, W);
    // e . a_i < 0 exactly at right descents, and removing one shortens
    Weight lam = a2.fundamental_weight(0) * 2 - a2.fundamental_weight(1) * 4;
    for (size_t u = 0; u < W.size(); ++u) {
        ExtAffElt e{lam, static_cast<int>(u)};
        long len = aff.length(e);
        for (int i = 0; i <= a2.rank(); ++i) {
            ExtAffElt shorter = aff.mul(e, aff.simple(i));
            bool descent = !aff.is_positive(aff.act_root(e, aff.affine_simple_root(i)));
            CHECK(aff.length(shorter) == (descent ? len - 1 : len + 1));
        }
    }
}
