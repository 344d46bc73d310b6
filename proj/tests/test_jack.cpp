#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cherednik/jack.hpp"

#include <map>
#include <vector>

using namespace cherednik;

namespace {

// v as a dense coefficient list in the parameter, low degree first
std::vector<Rational> poly_coeffs(const RatFunc& f) {
    REQUIRE(f.is_polynomial());
    MPoly p = f.num();
    std::vector<Rational> out(static_cast<size_t>(p.degree_in(0)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

std::map<Partition, RatFunc> as_map(const std::vector<JackTerm>& terms) {
    std::map<Partition, RatFunc> m;
    for (const auto& t : terms) m.emplace(t.nu, t.v);
    return m;
}

}  // namespace

TEST_CASE("partition helpers") {
    CHECK(partitions_of(4, 4).size() == 5);
    CHECK(partitions_of(4, 2).size() == 3);
    CHECK(partitions_of(5, 4).size() == 6);

    Partition p = {3, 1};
    CHECK(partition_size(p) == 4);
    CHECK(arm_length(p, 0, 0) == 2);
    CHECK(leg_length(p, 0, 0) == 1);
    CHECK(arm_length(p, 0, 2) == 0);
    CHECK(leg_length(p, 0, 2) == 0);

    CHECK(part_multiplicity_factorial({3, 1}) == 1);
    CHECK(part_multiplicity_factorial({1, 1, 1}) == 6);
    CHECK(part_multiplicity_factorial({2, 2, 1, 1}) == 4);

    RootSystem rs("A2");
    Weight w = partition_weight(rs, {2, 1});
    CHECK(w.c2 == std::vector<long long>{2, 2});
    CHECK(partition_weight(rs, {1, 1, 1}) == rs.zero_weight());
}

TEST_CASE("classical table entries in three variables") {
    std::vector<Rational> one = {Rational(1)};

    auto j1 = as_map(jack_expansion(3, {1}));
    CHECK(j1.size() == 1);
    CHECK(poly_coeffs(j1.at({1})) == std::vector<Rational>{1});

    auto j2 = as_map(jack_expansion(3, {2}));
    CHECK(poly_coeffs(j2.at({2})) == std::vector<Rational>{1, 1});
    CHECK(poly_coeffs(j2.at({1, 1})) == std::vector<Rational>{2});

    auto j11 = as_map(jack_expansion(3, {1, 1}));
    CHECK(j11.size() == 1);
    CHECK(poly_coeffs(j11.at({1, 1})) == std::vector<Rational>{2});

    auto j3 = as_map(jack_expansion(3, {3}));
    CHECK(poly_coeffs(j3.at({3})) == std::vector<Rational>{1, 3, 2});
    CHECK(poly_coeffs(j3.at({2, 1})) == std::vector<Rational>{3, 3});
    CHECK(poly_coeffs(j3.at({1, 1, 1})) == std::vector<Rational>{6});

    auto j21 = as_map(jack_expansion(3, {2, 1}));
    CHECK(poly_coeffs(j21.at({2, 1})) == std::vector<Rational>{2, 1});
    CHECK(poly_coeffs(j21.at({1, 1, 1})) == std::vector<Rational>{6});

    auto j111 = as_map(jack_expansion(3, {1, 1, 1}));
    CHECK(j111.size() == 1);
    CHECK(poly_coeffs(j111.at({1, 1, 1})) == std::vector<Rational>{6});
}

TEST_CASE("variable truncation drops long columns") {
    auto two_vars = as_map(jack_expansion(2, {2, 1}));
    CHECK(two_vars.size() == 1);
    CHECK(poly_coeffs(two_vars.at({2, 1})) == std::vector<Rational>{2, 1});

    auto e4 = as_map(jack_expansion(4, {1, 1, 1, 1}));
    CHECK(e4.size() == 1);
    CHECK(poly_coeffs(e4.at({1, 1, 1, 1})) == std::vector<Rational>{24});
}

TEST_CASE("integrality and positivity across the sweep") {
    for (int n = 2; n <= 4; ++n) {
        for (long sz = 1; sz <= 5; ++sz) {
            for (const Partition& lam : partitions_of(sz, n)) {
                Rational u = part_multiplicity_factorial(lam);
                auto terms = jack_expansion(n, lam);
                CHECK(!terms.empty());
                for (const auto& t : terms) {
                    CAPTURE(n);
                    RatFunc scaled = t.v / RatFunc::from_rational(1, u);
                    REQUIRE(scaled.is_polynomial());
                    for (const auto& [e, c] : scaled.num().terms()) {
                        CHECK(is_integer(c));
                        CHECK(c > 0);
                    }
                }
            }
        }
    }
}
