#pragma once

// Complex special functions for the analytic layer: a Lanczos log-gamma and a
// Gauss hypergeometric evaluator.  hyp2f1 routes between the defining series,
// the Pfaff transform, the connection at unit argument, and terminating
// polynomial cases; callers stay inside |z| bounded away from the unit circle
// except for the explicit z = 1 evaluation.  Accuracy target is ~1e-13
// relative on the moderate strips the series and densities live on.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace cherednik {

using Cplx = std::complex<double>;

namespace detail {

// g = 7, 9-term Lanczos coefficients; relative error below 1e-13 on Re z > 1/2
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace detail

inline Cplx lgamma_c(Cplx z) {
    if (z.real() < 0.5) {
        // reflection; poles at nonpositive integers surface as inf/nan
        Cplx s = std::sin(M_PI * z);
        return std::log(M_PI) - std::log(s) - lgamma_c(Cplx(1.0) - z);
    }
    z -= 1.0;
    Cplx x = detail::lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += detail::lanczos_c[i] / (z + Cplx(i));
    Cplx t = z + (detail::lanczos_g + 0.5);
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline Cplx gamma_c(Cplx z) { return std::exp(lgamma_c(z)); }

// Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1)), the binomial extended off the integers
inline Cplx binom_gamma(Cplx x, Cplx y) {
    return std::exp(lgamma_c(x + 1.0) - lgamma_c(y + 1.0) - lgamma_c(x - y + 1.0));
}

namespace detail {

inline bool near_nonpos_int(Cplx z, long* m_out = nullptr) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    if (r > 0.5 || std::abs(z.real() - r) > 1e-12) return false;
    if (m_out) *m_out = static_cast<long>(-r);
    return true;
}

// partial sums of the defining series with compensated accumulation;
// requires |z| bounded away from 1
inline Cplx hyp2f1_series(Cplx a, Cplx b, Cplx c, Cplx z) {
    Cplx term = 1.0, sum = 1.0, comp = 0.0;
    for (int j = 0; j < 8000; ++j) {
        Cplx cj = c + Cplx(j);
        if (std::abs(cj) < 1e-13)
            throw std::domain_error("hypergeometric series hit a lower-parameter pole");
        term *= (a + Cplx(j)) * (b + Cplx(j)) / cj * z / Cplx(j + 1);
        Cplx y = term - comp;
        Cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) return sum;
    }
    throw std::domain_error("hypergeometric series failed to converge");
}

inline Cplx hyp2f1_terminating(Cplx a, Cplx b, Cplx c, Cplx z, long m) {
    Cplx term = 1.0, sum = 1.0;
    for (long j = 0; j < m; ++j) {
        Cplx cj = c + Cplx(static_cast<double>(j));
        if (std::abs(cj) < 1e-13)
            throw std::domain_error("terminating hypergeometric hit a lower-parameter pole");
        term *= (a + Cplx(static_cast<double>(j))) * (b + Cplx(static_cast<double>(j))) / cj * z /
                Cplx(static_cast<double>(j + 1));
        sum += term;
    }
    return sum;
}

}  // namespace detail

// Gauss hypergeometric 2F1(a, b; c; z).  Supported arguments: terminating
// cases for any z, |z| <= 0.78, |z/(z-1)| <= 0.985 via Pfaff (the map sends
// the ray z < 0 into [0, 1), so the negative axis down to about -65 is in
// range), real z in (0.78, 1) via the connection at 1, and z = 1 by the Gamma
// evaluation (needs Re(c-a-b) > 0).
inline Cplx hyp2f1(Cplx a, Cplx b, Cplx c, Cplx z) {
    long m = 0;
    if (detail::near_nonpos_int(a, &m)) return detail::hyp2f1_terminating(a, b, c, z, m);
    if (detail::near_nonpos_int(b, &m)) return detail::hyp2f1_terminating(b, a, c, z, m);
    if (std::abs(z) < 1e-15) return 1.0;
    if (std::abs(z - 1.0) < 1e-14) {
        if ((c - a - b).real() <= 0.0)
            throw std::domain_error("2F1 at unit argument needs Re(c-a-b) > 0");
        return std::exp(lgamma_c(c) + lgamma_c(c - a - b) - lgamma_c(c - a) - lgamma_c(c - b));
    }
    if (std::abs(z) <= 0.78) return detail::hyp2f1_series(a, b, c, z);
    Cplx w = z / (z - 1.0);
    if (std::abs(w) <= 0.985)
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
    if (std::abs(z.imag()) < 1e-14 && z.real() > 0.78 && z.real() < 1.0) {
        Cplx cab = c - a - b;
        if (detail::near_nonpos_int(cab) || detail::near_nonpos_int(-cab))
            throw std::domain_error("2F1 connection at 1 degenerates at integer c-a-b");
        Cplx u = 1.0 - z;
        Cplx t1 = std::exp(lgamma_c(c) + lgamma_c(cab) - lgamma_c(c - a) - lgamma_c(c - b)) *
                  detail::hyp2f1_series(a, b, a + b - c + 1.0, u);
        Cplx t2 = std::exp(lgamma_c(c) + lgamma_c(-cab) - lgamma_c(a) - lgamma_c(b)) *
                  std::pow(u, cab) * detail::hyp2f1_series(c - a, c - b, c - a - b + 1.0, u);
        return t1 + t2;
    }
    throw std::domain_error("2F1 argument outside the supported region");
}

// d^order/dz^order of 2F1 via parameter shifts
inline Cplx hyp2f1_deriv(Cplx a, Cplx b, Cplx c, Cplx z, int order = 1) {
    Cplx f = 1.0;
    for (int j = 0; j < order; ++j)
        f *= (a + Cplx(j)) * (b + Cplx(j)) / (c + Cplx(j));
    return f * hyp2f1(a + Cplx(order), b + Cplx(order), c + Cplx(order), z);
}

}  // namespace cherednik
