#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cherednik/mpoly.hpp"
#include "cherednik/ratfunc.hpp"
#include "cherednik/rational.hpp"

using namespace cherednik;

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(is_integer(Rational(5)));
    CHECK_FALSE(is_integer(rat(1, 2)));
    CHECK(to_long(rat(14, 2)) == 7);
    CHECK_THROWS_AS(to_long(rat(1, 3)), std::domain_error);
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("pochhammer rising factorial") {
    // (x)_n = x (x+1) ... (x+n-1)
    CHECK(pochhammer(rat(1, 2), 3) == rat(1, 2) * rat(3, 2) * rat(5, 2));
    CHECK(pochhammer(Rational(3), 0) == 1);
    // (x)_{-n} = 1 / (x-1)(x-2)...(x-n)
    CHECK(pochhammer(Rational(3), -2) == rat(1, 2));
    CHECK(pochhammer(Rational(0), -1) == Rational(-1));
    CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::domain_error);
}

TEST_CASE("exact linear solve and inverse") {
    RatMat a{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
    RatVec rhs{Rational(1), Rational(0)};
    RatVec x;
    REQUIRE(solve_linear(a, rhs, x));
    CHECK(x[0] == rat(2, 3));
    CHECK(x[1] == rat(1, 3));

    RatMat inv = mat_inverse(a);
    CHECK(inv[0][0] == rat(2, 3));
    CHECK(inv[0][1] == rat(1, 3));

    RatMat sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(solve_linear(sing, rhs, x));
    CHECK_THROWS_AS(mat_inverse(sing), std::domain_error);
}

static MPoly kvar() { return MPoly::variable(1, 0); }

TEST_CASE("mpoly arithmetic and ordering") {
    MPoly k = kvar();
    MPoly one = MPoly::constant(1, 1);
    MPoly p = (k + one) * (k - one);  // k^2 - 1
    CHECK(p.degree_in(0) == 2);
    CHECK(p.evaluate({Rational(3)}) == 8);
    CHECK(p.to_string({"k"}) == "k^2 - 1");
    MPoly q = k * k - one;
    CHECK(p == q);
    CHECK((p - q).is_zero());
}

TEST_CASE("mpoly exact division") {
    MPoly k = kvar();
    MPoly one = MPoly::constant(1, 1);
    MPoly prod = (k + one) * (k + one) * (k - one);
    MPoly quot = prod.divide_exact((k + one) * (k - one));
    CHECK(quot == k + one);
    CHECK_THROWS_WITH(prod.divide_exact(k + MPoly::constant(1, 2)),
                      "polynomial division not exact");
}

TEST_CASE("mpoly gcd univariate") {
    MPoly k = kvar();
    MPoly one = MPoly::constant(1, 1);
    MPoly two = MPoly::constant(1, 2);
    MPoly a = (k + one) * (k + one) * (k - one);
    MPoly b = (k + one) * (k + two);
    CHECK(mpoly_gcd(a, b) == k + one);
    CHECK(mpoly_gcd(a, MPoly::constant(1, 0)) == a);
    // coprime inputs collapse to 1
    CHECK(mpoly_gcd(k + one, k + two) == one);
    // content is stripped: gcd(2k+2, 4k+4) = k+1 up to normalization
    MPoly g = mpoly_gcd(two * (k + one), two * two * (k + one));
    CHECK(g == k + one);
}

TEST_CASE("mpoly gcd multivariate") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly one = MPoly::constant(2, 1);
    MPoly common = x * y + one;
    MPoly a = common * (x + y);
    MPoly b = common * (x - y);
    CHECK(mpoly_gcd(a, b) == common);
    MPoly c = (x + y) * (x + y) * (x * y + one);
    CHECK(mpoly_gcd(c, a) == common * (x + y));
}

TEST_CASE("ratfunc normal form") {
    RatFunc k = RatFunc::variable(1, 0);
    RatFunc one = RatFunc::from_rational(1, Rational(1));
    RatFunc f = (k * k - one) / (k + one);  // reduces to k - 1
    CHECK(f.is_polynomial());
    CHECK(f == k - one);
    RatFunc g = one / (k - one) + one / (k + one);  // 2k / (k^2 - 1)
    RatFunc h = (k + k) / (k * k - one);
    CHECK(g == h);
    CHECK(g.evaluate({Rational(2)}) == rat(4, 3));
    CHECK_THROWS_AS(g.evaluate({Rational(1)}), std::domain_error);
    CHECK_THROWS_AS(one / (k - k), std::domain_error);
}

TEST_CASE("ratfunc denominator is monic") {
    RatFunc k = RatFunc::variable(1, 0);
    RatFunc one = RatFunc::from_rational(1, Rational(1));
    RatFunc two = RatFunc::from_rational(1, Rational(2));
    RatFunc f = one / (two * k + two);  // denominator normalizes to k + 1
    CHECK(f.den().leading_coeff() == 1);
    CHECK(f.den() == (k + one).num());
    CHECK(f.num() == MPoly::constant(1, rat(1, 2)));
}

TEST_CASE("ratfunc reciprocal substitution") {
    RatFunc a = RatFunc::variable(1, 0);
    RatFunc one = RatFunc::from_rational(1, Rational(1));
    // f(a) = (a + 2) / a  ->  f(1/a) = (1 + 2a) / 1
    RatFunc f = (a + one + one) / a;
    RatFunc g = f.substitute_reciprocal(0);
    CHECK(g == one + a + a);
    // involution on functions of a alone
    CHECK(g.substitute_reciprocal(0) == f);
    // evaluate consistency at a = 3
    RatFunc h = (a * a + one) / (a + one + one + one);
    CHECK(h.substitute_reciprocal(0).evaluate({Rational(3)}) ==
          h.evaluate({rat(1, 3)}));
}

TEST_CASE("scalar ops trait") {
    using R = ScalarOps<Rational>;
    CHECK(R::is_zero(R::zero()));
    CHECK(R::one() == Rational(1));
    using F = ScalarOps<RatFunc>;
    CHECK(F::is_zero(F::zero()));
    CHECK(F::from_rational(rat(1, 2)) * F::from_rational(Rational(2)) == F::one());
}
