#pragma once

// Sparse multivariate polynomials over the rationals, sized for the small
// parameter rings this library needs: at most MPOLY_MAX_VARS variables
// (multiplicity symbols k_s, k_l, the Jack parameter, coweight coordinates).
// Supplies ring arithmetic, exact division, and gcd.  The gcd is Euclidean in
// one variable and a primitive pseudo-remainder sequence in several; both are
// exact and deterministic.

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace cherednik {

constexpr int MPOLY_MAX_VARS = 4;

using Expo = std::array<int, MPOLY_MAX_VARS>;

inline int expo_total(const Expo& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

// Graded reverse lexicographic order; fixes leading terms and printing.
struct ExpoGrevlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int ta = expo_total(a), tb = expo_total(b);
        if (ta != tb) return ta < tb;
        for (int i = MPOLY_MAX_VARS - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

class MPoly {
  public:
    using TermMap = std::map<Expo, Rational, ExpoGrevlexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rational& c) {
        MPoly p(nvars);
        if (c != 0) p.terms_[Expo{}] = c;
        return p;
    }
    static MPoly variable(int nvars, int idx, long exp = 1) {
        MPoly p(nvars);
        Expo e{};
        e[idx] = static_cast<int>(exp);
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    Rational constant_value() const {
        auto it = terms_.find(Expo{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree_in(int v) const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, expo_total(e));
        return d;
    }
    bool uses_var(int v) const { return degree_in(v) > 0; }
    int highest_used_var() const {
        for (int v = MPOLY_MAX_VARS - 1; v >= 0; --v)
            if (uses_var(v)) return v;
        return -1;
    }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(std::max(nvars_, o.nvars_));
        for (auto& [ea, ca] : terms_)
            for (auto& [eb, cb] : o.terms_) {
                Expo e;
                for (int i = 0; i < MPOLY_MAX_VARS; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly operator*(const Rational& s) const {
        MPoly r(nvars_);
        if (s == 0) return r;
        for (auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Leading data with respect to grevlex.
    Expo leading_expo() const { return terms_.rbegin()->first; }
    Rational leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    // Positive rational g with (*this)/g integer-coefficient, coprime.
    Rational content() const {
        Rational g = 0;
        for (auto& [e, c] : terms_) g = rat_gcd(g, c);
        return g == 0 ? Rational(1) : g;
    }

    Rational evaluate(const RatVec& x) const {
        Rational acc = 0;
        for (auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t v = 0; v < x.size(); ++v) t *= rat_pow(x[v], e[v]);
            acc += t;
        }
        return acc;
    }

    double evaluate_double(const std::vector<double>& x) const {
        double acc = 0;
        for (auto& [e, c] : terms_) {
            double t = c.get_d();
            for (size_t v = 0; v < x.size(); ++v)
                for (int j = 0; j < e[v]; ++j) t *= x[v];
            acc += t;
        }
        return acc;
    }

    // Exact quotient; throws when the division is not exact.
    MPoly divide_exact(const MPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        MPoly rem = *this, q(std::max(nvars_, d.nvars_));
        const Expo de = d.leading_expo();
        const Rational dc = d.leading_coeff();
        while (!rem.is_zero()) {
            Expo re = rem.leading_expo();
            Expo qe;
            bool ok = true;
            for (int i = 0; i < MPOLY_MAX_VARS; ++i) {
                qe[i] = re[i] - de[i];
                if (qe[i] < 0) ok = false;
            }
            if (!ok) throw std::domain_error("polynomial division not exact");
            Rational qc = rem.leading_coeff() / dc;
            q.add_term(qe, qc);
            MPoly t(q.nvars());
            t.terms_[qe] = qc;
            rem = rem - t * d;
        }
        return q;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Highest terms first reads naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool unit = (a == 1);
            bool has_var = expo_total(e) > 0;
            if (!unit || !has_var) os << a.get_str();
            bool lead = !(!unit || !has_var);
            for (size_t v = 0; v < names.size(); ++v) {
                if (e[v] == 0) continue;
                if (!lead) os << "*";
                lead = false;
                os << names[v];
                if (e[v] > 1) os << "^" << e[v];
            }
        }
        return os.str();
    }

  private:
    int nvars_;
    TermMap terms_;
};

namespace detail {

// Dense coefficient list of p in variable v, entries polynomials in the rest.
inline std::vector<MPoly> coeffs_in(const MPoly& p, int v) {
    std::vector<MPoly> out(static_cast<size_t>(p.degree_in(v)) + 1, MPoly(p.nvars()));
    for (auto& [e, c] : p.terms()) {
        Expo r = e;
        int d = r[v];
        r[v] = 0;
        out[d].add_term(r, c);
    }
    return out;
}

inline MPoly from_coeffs(const std::vector<MPoly>& cs, int v, int nvars) {
    MPoly out(nvars);
    for (size_t d = 0; d < cs.size(); ++d)
        for (auto& [e, c] : cs[d].terms()) {
            Expo r = e;
            r[v] = static_cast<int>(d);
            out.add_term(r, c);
        }
    return out;
}

inline int deg_of(const std::vector<MPoly>& cs) {
    for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
        if (!cs[d].is_zero()) return d;
    return -1;
}

}  // namespace detail

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

// Makes content positive-unit: integer coprime coefficients, positive lead.
inline MPoly primitive_part(const MPoly& p) {
    if (p.is_zero()) return p;
    Rational c = p.content();
    if (p.leading_coeff() < 0) c = -c;
    return p * (1 / c);
}

// Pseudo-remainder of a by b in variable v.
inline MPoly prem(const MPoly& a, const MPoly& b, int v) {
    auto ca = coeffs_in(a, v);
    auto cb = coeffs_in(b, v);
    int db = deg_of(cb);
    MPoly lb = cb[db];
    int da = deg_of(ca);
    while (da >= db) {
        MPoly lead = ca[da];
        // ca := lb*ca - lead * x^(da-db) * cb
        for (int j = 0; j <= da; ++j) ca[j] = ca[j] * lb;
        for (int j = 0; j <= db; ++j) ca[j + da - db] = ca[j + da - db] - lead * cb[j];
        int nd = deg_of(ca);
        if (nd == da) throw std::logic_error("pseudo-division failed to reduce degree");
        da = nd;
    }
    ca.resize(da + 1, MPoly(a.nvars()));
    return from_coeffs(ca, v, a.nvars());
}

inline MPoly gcd_univar(const MPoly& a, const MPoly& b, int v) {
    auto da = coeffs_in(a, v);
    auto db = coeffs_in(b, v);
    std::vector<Rational> fa(da.size()), fb(db.size());
    for (size_t i = 0; i < da.size(); ++i) fa[i] = da[i].constant_value();
    for (size_t i = 0; i < db.size(); ++i) fb[i] = db[i].constant_value();
    auto deg = [](const std::vector<Rational>& f) {
        for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
            if (f[d] != 0) return d;
        return -1;
    };
    while (deg(fb) >= 0) {
        int dB = deg(fb);
        Rational lb = fb[dB];
        int dA = deg(fa);
        while (dA >= dB) {
            Rational f = fa[dA] / lb;
            for (int j = 0; j <= dB; ++j) fa[j + dA - dB] -= f * fb[j];
            fa[dA] = 0;
            dA = deg(fa);
        }
        std::swap(fa, fb);
    }
    int d = deg(fa);
    MPoly g(a.nvars());
    if (d < 0) return g;
    for (int j = 0; j <= d; ++j)
        if (fa[j] != 0) {
            Expo e{};
            e[v] = j;
            g.add_term(e, fa[j]);
        }
    return primitive_part(g);
}

}  // namespace detail

// Primitive gcd; the result has integer coprime coefficients and positive
// leading coefficient, with constants collapsing to 1.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    int nv = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return b.is_zero() ? MPoly(nv) : detail::primitive_part(b);
    if (b.is_zero()) return detail::primitive_part(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(nv, 1);
    int va = a.highest_used_var(), vb = b.highest_used_var();
    int v = std::max(va, vb);
    if (va != v || vb != v) {
        // One input is free of the main variable: gcd divides the other's
        // content with respect to it.
        const MPoly& flat = (va == v) ? b : a;
        const MPoly& tall = (va == v) ? a : b;
        auto cs = detail::coeffs_in(tall, v);
        MPoly g = flat;
        for (auto& c : cs) {
            g = mpoly_gcd(g, c);
            if (g.is_constant()) return MPoly::constant(nv, 1);
        }
        return g;
    }
    bool multi = false;
    for (int w = 0; w < v; ++w)
        if (a.uses_var(w) || b.uses_var(w)) multi = true;
    if (!multi) return detail::gcd_univar(a, b, v);

    auto content_wrt = [&](const MPoly& p) {
        auto cs = detail::coeffs_in(p, v);
        MPoly g(p.nvars());
        for (auto& c : cs) g = mpoly_gcd(g, c);
        return g;
    };
    MPoly ca = content_wrt(a), cb = content_wrt(b);
    MPoly pa = a.divide_exact(ca), pb = b.divide_exact(cb);
    // Primitive PRS.
    while (!pb.is_zero()) {
        MPoly r = detail::prem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : r.divide_exact(content_wrt(r));
    }
    if (detail::deg_of(detail::coeffs_in(pa, v)) <= 0) pa = MPoly::constant(nv, 1);
    return detail::primitive_part(mpoly_gcd(ca, cb) * pa);
}

}  // namespace cherednik
