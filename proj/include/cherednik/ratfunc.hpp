#pragma once

// Field of rational functions in the multiplicity symbols, kept in reduced
// normal form: numerator and denominator coprime, denominator monic in
// grevlex.  Equality is structural, so identities decided here are exact.
//
// ScalarOps<K> is the small trait the templated layers (Laurent algebra,
// Dunkl operators, polynomials) use to stay agnostic between exact rationals
// and symbolic multiplicities.

#include "mpoly.hpp"

namespace cherednik {

class RatFunc {
  public:
    RatFunc() : num_(0), den_(MPoly::constant(0, 1)) {}
    explicit RatFunc(int nvars) : num_(nvars), den_(MPoly::constant(nvars, 1)) {}
    RatFunc(const MPoly& n, const MPoly& d) : num_(n), den_(d) { reduce(); }

    static RatFunc from_rational(int nvars, const Rational& c) {
        return RatFunc(MPoly::constant(nvars, c), MPoly::constant(nvars, 1));
    }
    static RatFunc variable(int nvars, int idx) {
        return RatFunc(MPoly::variable(nvars, idx), MPoly::constant(nvars, 1));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    int nvars() const { return std::max(num_.nvars(), den_.nvars()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return RatFunc(nvars());
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        if (is_zero()) return *this;
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational evaluate(const RatVec& x) const {
        Rational d = den_.evaluate(x);
        if (d == 0) throw std::domain_error("rational function pole at evaluation point");
        return num_.evaluate(x) / d;
    }
    double evaluate_double(const std::vector<double>& x) const {
        return num_.evaluate_double(x) / den_.evaluate_double(x);
    }

    // Substitutes var -> 1/var (single-variable functions only); used to pass
    // between the multiplicity k and the Jack parameter alpha = 1/k.
    RatFunc substitute_reciprocal(int var) const {
        auto flip = [&](const MPoly& p, int up_to) {
            MPoly out(p.nvars());
            for (auto& [e, c] : p.terms()) {
                Expo r = e;
                r[var] = up_to - e[var];
                out.add_term(r, c);
            }
            return out;
        };
        int dn = num_.degree_in(var), dd = den_.degree_in(var);
        int d = std::max(dn, dd);
        return RatFunc(flip(num_, d), flip(den_, d));
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (num_.is_zero()) return "0";
        std::string n = num_.to_string(names);
        if (den_ == MPoly::constant(den_.nvars(), 1)) return n;
        std::string d = den_.to_string(names);
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly::constant(den_.nvars(), 1);
            return;
        }
        if (!den_.is_constant()) {
            MPoly g = mpoly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = num_.divide_exact(g);
                den_ = den_.divide_exact(g);
            }
        }
        Rational lc = den_.leading_coeff();
        if (lc != 1) {
            num_ = num_ * (1 / lc);
            den_ = den_ * (1 / lc);
        }
    }

    MPoly num_, den_;
};

// ---------------------------------------------------------------------------

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string str(const Rational& x) { return x.get_str(); }
};

// Symbolic scalars carry a fixed variable count per context; contexts supply
// constants through their own helpers, so from_rational here defaults the
// variable count to the maximum and relies on MPoly tolerating mixed nvars.
template <>
struct ScalarOps<RatFunc> {
    static RatFunc zero() { return RatFunc(0); }
    static RatFunc one() { return from_rational(1); }
    static RatFunc from_rational(const Rational& r) {
        return RatFunc::from_rational(0, r);
    }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string str(const RatFunc& x) {
        return x.to_string({"k", "kl", "a", "t"});
    }
};

}  // namespace cherednik
