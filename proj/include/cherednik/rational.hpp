#pragma once

// Exact rational scalars backed by GMP, plus the small helpers the rest of
// the library needs (parsing, printing, gcd, integer checks).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p/q", "p/q".
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("unparsable rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Demands an integer that fits in long; pairings of lattice weights with
// coroots go through here.
inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("rational " + r.get_str() + " is not an integer");
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large for long");
    return r.get_num().get_si();
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// gcd of two rationals: the positive generator of the fractional ideal they
// span; gcd(a/b, c/d) = gcd(ad, cb)/(bd) reduced.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Integer n;
    mpz_gcd(n.get_mpz_t(), Integer(a.get_num() * b.get_den()).get_mpz_t(),
            Integer(b.get_num() * a.get_den()).get_mpz_t());
    Rational g(n, a.get_den() * b.get_den());
    g.canonicalize();
    return g;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 to negative power");
        return 1 / rat_pow(base, -e);
    }
    Rational out = 1, b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// Rising factorial x(x+1)...(x+n-1), the exact stand-in for Gamma(x+n)/Gamma(x).
inline Rational pochhammer(const Rational& x, long n) {
    if (n < 0) {
        Rational d = pochhammer(x + n, -n);
        if (d == 0) throw std::domain_error("pochhammer hits a pole");
        return 1 / d;
    }
    Rational out = 1;
    for (long j = 0; j < n; ++j) out *= x + j;
    return out;
}

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

// Dense exact linear solve; returns false when the matrix is singular.
inline bool solve_linear(RatMat a, RatVec rhs, RatVec& out) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational inv = 1 / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    out = rhs;
    return true;
}

inline RatMat mat_inverse(const RatMat& a) {
    const size_t n = a.size();
    RatMat aug = a, inv(n, RatVec(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(aug[piv], aug[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / aug[col][col];
        for (size_t j = 0; j < n; ++j) {
            aug[col][j] *= s;
            inv[col][j] *= s;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational f = aug[row][col];
            for (size_t j = 0; j < n; ++j) {
                aug[row][j] -= f * aug[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace cherednik
