#pragma once
// Command-line front end.  run_job does all the work on an argument vector
// and returns the payload, diagnostics, and exit code, so the binary itself
// stays a four-line shell and the whole surface is unit-testable in process.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 tolerance failure.

#include <complex>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfunctions.hpp"
#include "epoly.hpp"
#include "hypergeom.hpp"
#include "jacobi.hpp"
#include "jack.hpp"
#include "kz.hpp"
#include "spectral.hpp"

namespace cherednik {
namespace cli {

using Json = nlohmann::ordered_json;

struct JobResult {
    std::string output;       // payload for stdout (or the --out file)
    std::string diagnostics;  // human messages for stderr
    std::string out_path;     // nonempty when --out was given
    int exit_code = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<long> parse_longs(const std::string& s, const char* what) {
    std::vector<long> out;
    for (const std::string& p : split_csv(s)) {
        try {
            size_t used = 0;
            out.push_back(std::stol(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected comma-separated integers, got '" + s +
                             "'");
        }
    }
    return out;
}

inline std::vector<Rational> parse_rationals(const std::string& s, const char* what) {
    std::vector<Rational> out;
    for (const std::string& p : split_csv(s)) {
        try {
            out.push_back(parse_rational(p));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected comma-separated rationals, got '" + s +
                             "'");
        }
    }
    return out;
}

inline std::vector<double> parse_doubles(const std::string& s, const char* what) {
    std::vector<double> out;
    for (const std::string& p : split_csv(s)) {
        try {
            size_t used = 0;
            out.push_back(std::stod(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": expected comma-separated numbers, got '" + s +
                             "'");
        }
    }
    return out;
}

inline Weight weight_of(const RootSystem& rs, const std::string& s) {
    std::vector<long> f = parse_longs(s, "--weight");
    if (static_cast<int>(f.size()) != rs.rank())
        throw UsageError("--weight needs " + std::to_string(rs.rank()) + " components");
    Weight w;
    for (long v : f) w.c2.push_back(2 * v);
    return w;
}

inline std::vector<std::string> k_names(int n_orbits) {
    if (n_orbits == 1) return {"k"};
    std::vector<std::string> out;
    for (int o = 0; o < n_orbits; ++o) out.push_back("k" + std::to_string(o + 1));
    return out;
}

inline std::vector<long long> fund_coords(const Weight& w) {
    std::vector<long long> out;
    for (long long v : w.c2) out.push_back(v / 2);
    return out;
}

// one serialized monomial list per Laurent polynomial, deterministic order
template <class K, class Str>
Json laurent_json(const LaurentPoly<K>& f, Str&& coeff_str) {
    Json terms = Json::array();
    for (const auto& [mu, c] : f.terms()) {
        Json t;
        t["weight"] = fund_coords(mu);
        t["coeff"] = coeff_str(c);
        terms.push_back(t);
    }
    return terms;
}

inline std::string weight_text(const std::vector<long long>& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
}

inline std::string terms_text(const Json& terms) {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        std::vector<long long> f = t["weight"].get<std::vector<long long>>();
        s += "(" + t["coeff"].get<std::string>() + ")*e^" + weight_text(f);
    }
    return s.empty() ? "0" : s;
}

inline std::string terms_latex(const Json& terms) {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        std::vector<long long> f = t["weight"].get<std::vector<long long>>();
        std::string expo;
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            if (!expo.empty() && f[i] > 0) expo += "+";
            if (f[i] == -1)
                expo += "-";
            else if (f[i] != 1)
                expo += std::to_string(f[i]);
            expo += "\\Lambda_{" + std::to_string(i + 1) + "}";
        }
        if (expo.empty()) expo = "0";
        s += "\\left(" + t["coeff"].get<std::string>() + "\\right) e^{" + expo + "}";
    }
    return s.empty() ? "0" : s;
}

inline Json cvec_json(const CVec& v) {
    Json out = Json::array();
    for (const Cplx& z : v) out.push_back(Json::array({z.real(), z.imag()}));
    return out;
}

inline Json ratvec_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(to_string(r));
    return out;
}

inline CVec complex_vec(const std::string& re_s, const std::string& im_s, int n,
                        const char* what) {
    std::vector<double> re = parse_doubles(re_s, what);
    if (static_cast<int>(re.size()) != n)
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " components");
    std::vector<double> im(re.size(), 0.0);
    if (!im_s.empty()) {
        im = parse_doubles(im_s, what);
        if (im.size() != re.size())
            throw UsageError(std::string(what) + ": real and imaginary parts differ in length");
    }
    CVec out(re.size());
    for (size_t i = 0; i < re.size(); ++i) out[i] = Cplx(re[i], im[i]);
    return out;
}

// The environment cap is read for validity but orchestration is a single
// thread, so the effective thread count is always one.
inline int threads_cap() {
    const char* env = std::getenv("CHEREDNIK_THREADS");
    if (env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) return 1;
    }
    return 1;
}

inline std::vector<double> orbit_doubles(const RootSystem& rs, const std::string& s) {
    std::vector<double> k = parse_doubles(s, "--k");
    if (static_cast<int>(k.size()) != rs.n_orbits())
        throw UsageError("--k needs " + std::to_string(rs.n_orbits()) +
                         " values for this root system");
    return k;
}

inline std::vector<Rational> orbit_rationals(const RootSystem& rs, const std::string& s) {
    std::vector<Rational> k = parse_rationals(s, "--k");
    if (static_cast<int>(k.size()) != rs.n_orbits())
        throw UsageError("--k needs " + std::to_string(rs.n_orbits()) +
                         " values for this root system");
    return k;
}

// weights with |coordinate| sum at most cap, lexicographic order
inline std::vector<Weight> weight_ball(const RootSystem& rs, long cap) {
    std::vector<Weight> out;
    const int n = rs.rank();
    std::vector<long> c(static_cast<size_t>(n), -cap);
    while (true) {
        long a = 0;
        for (long v : c) a += std::labs(v);
        if (a <= cap) {
            Weight w;
            for (long v : c) w.c2.push_back(2 * v);
            out.push_back(w);
        }
        int i = 0;
        for (; i < n; ++i) {
            if (c[static_cast<size_t>(i)] < cap) {
                ++c[static_cast<size_t>(i)];
                break;
            }
            c[static_cast<size_t>(i)] = -cap;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// property suites for the check subcommand

namespace suites {

struct Outcome {
    bool passed = true;
    Json detail;
};

inline Outcome suite_poly(const std::string& type, long maxw) {
    RootSystem rs(type);
    WeylGroup W(rs);
    auto ctx = symbolic_context(rs, W);
    long n_checked = 0;
    bool ok = true;
    for (const Weight& lam : detail::weight_ball(rs, maxw)) {
        if (E_by_intertwiners(ctx, lam) != E_by_triangular_solve(ctx, lam)) ok = false;
        ++n_checked;
    }
    Outcome o;
    o.passed = ok;
    o.detail = Json{{"weights", n_checked}, {"algorithms", "intertwiner vs triangular"}};
    return o;
}

inline Outcome suite_norm(const std::string& type, long maxw, long kint) {
    RootSystem rs(type);
    WeylGroup W(rs);
    std::vector<long> korb(static_cast<size_t>(rs.n_orbits()), kint);
    std::vector<Rational> kq;
    for (long v : korb) kq.push_back(Rational(v));
    DunklContext<Rational> ctx(rs, W, kq);
    long n_checked = 0;
    bool ok = true;
    for (const Weight& mu : detail::weight_ball(rs, maxw)) {
        Rational direct = 0;
        for (const auto& [w, c] : E_by_intertwiners(ctx, mu).terms()) direct += c;
        if (direct != norm_and_evaluation(rs, W, mu, korb).value_e) ok = false;
        ++n_checked;
        if (rs.is_dominant(mu)) {
            Rational sym = 0;
            for (const auto& [w, c] : jacobi_poly(ctx, mu).terms()) sym += c;
            if (sym != symmetric_value_e(rs, W, mu, korb)) ok = false;
        }
    }
    Outcome o;
    o.passed = ok;
    o.detail = Json{{"weights", n_checked}, {"k", kint}};
    return o;
}

inline Outcome suite_shift(const std::string& type) {
    RootSystem rs(type);
    WeylGroup W(rs);
    std::vector<RatFunc> ks, ksp;
    for (int o = 0; o < rs.n_orbits(); ++o) {
        ks.push_back(RatFunc::variable(rs.n_orbits(), o));
        ksp.push_back(ks.back() + ScalarOps<RatFunc>::one());
    }
    DunklContext<RatFunc> ctx(rs, W, ks), ctxp(rs, W, ksp);
    LaurentPoly<RatFunc> delta = weyl_denominator<RatFunc>(rs);
    bool ok = true;
    long n_checked = 0;
    for (const Weight& lam : {rs.zero_weight(), rs.fundamental_weight(0)}) {
        if (jacobi_skew(ctx, lam + rs.delta_weight()) != delta * jacobi_poly(ctxp, lam)) ok = false;
        ++n_checked;
    }
    Outcome o;
    o.passed = ok;
    o.detail = Json{{"weights", n_checked}, {"identity", "skew quotient at adjacent parameters"}};
    return o;
}

inline Outcome suite_jack(long maxsize) {
    bool ok = true;
    long n_terms = 0;
    for (long m = 1; m <= maxsize; ++m) {
        for (const Partition& lam : partitions_of(m, 3)) {
            for (const JackTerm& t : jack_expansion(3, lam)) {
                if (!t.v.is_polynomial()) ok = false;
                else
                    for (const auto& [e, c] : t.v.num().terms())
                        if (!is_integer(c) || c < 0) ok = false;
                ++n_terms;
            }
        }
    }
    Outcome o;
    o.passed = ok;
    o.detail = Json{{"coefficients", n_terms}, {"property", "nonnegative integer"}};
    return o;
}

inline Outcome suite_hypergeom(double tol) {
    RootSystem rs("A1");
    WeylGroup W(rs);
    NumericContext ctx = make_numeric_context(rs, W, {0.3});
    CVec lam{Cplx(0.57, 0.0)};
    HypergeomTables t = hypergeom_tables(ctx, lam, 40);
    rank1::Params p = rank1::params(0.3, 0.0, lam[0]);
    double worst = 0.0;
    for (double y : {4.0, 9.0}) {
        LogPoint a{{std::log(y)}};
        worst = std::max(worst, std::abs(F_value(ctx, t, a) - rank1::f_value(p, y)));
    }
    double rec = gamma_recurrence_residual(ctx, t.by_w[0]);
    Outcome o;
    o.passed = worst < tol && rec < tol;
    o.detail = Json{{"series_vs_closed_form", worst}, {"recurrence_residual", rec}};
    return o;
}

inline Outcome suite_kz(const std::string& type, unsigned long seed, double tol) {
    RootSystem rs(type);
    WeylGroup W(rs);
    NumericContext ctx =
        make_numeric_context(rs, W, std::vector<double>(static_cast<size_t>(rs.n_orbits()), 0.3));
    std::mt19937 gen(static_cast<unsigned>(seed));
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    CVec lam(static_cast<size_t>(rs.rank()));
    for (int j = 0; j < rs.rank(); ++j) lam[static_cast<size_t>(j)] = Cplx(0.41 + 0.17 * j, 0.23);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        LogPoint a;
        bool regular = false;
        while (!regular) {
            a.x.clear();
            for (int j = 0; j < rs.rank(); ++j) a.x.push_back(unif(gen));
            regular = true;
            for (int r : rs.positive_roots()) {
                double e = 0.0;
                for (int j = 0; j < rs.rank(); ++j)
                    e += static_cast<double>(rs.root(r).alpha[static_cast<size_t>(j)]) *
                         a.x[static_cast<size_t>(j)];
                if (std::abs(1.0 - std::exp(-e)) < 1e-3) regular = false;
            }
        }
        worst = std::max(worst, kz_flatness_residual(kz_matrices(ctx, lam, a)));
    }
    Outcome o;
    o.passed = worst < tol;
    o.detail = Json{{"points", 3}, {"max_curvature_residual", worst}};
    return o;
}

inline Outcome suite_spectral(const std::string& type, double tol) {
    RootSystem rs(type);
    std::vector<Rational> korb;
    for (int o = 0; o < rs.n_orbits(); ++o) korb.push_back(rat(-1, 3 + o));
    bool ok = true;
    auto out = enumerate_residual(rs, korb);
    for (const auto& L : out) {
        if (L.count_k != L.count_zero + L.codim) ok = false;
        if (!L.center_distinguished || !L.minus_center_in_orbit) ok = false;
    }
    PlancherelReport rep = rank1_plancherel_check(-0.25);
    if (rep.rel_err > std::max(tol, 1e-6)) ok = false;
    Outcome o;
    o.passed = ok;
    o.detail = Json{{"subspaces", out.size()}, {"mass_rel_err", rep.rel_err}};
    return o;
}

}  // namespace suites

// ---------------------------------------------------------------------------

inline JobResult run_job(const std::vector<std::string>& args) {
    JobResult res;
    Json payload;
    std::string command;
    std::string format = "json";
    bool tolerance_failed = false;

    CLI::App app{"exact computations for trigonometric Dunkl operators and their spectra"};
    app.require_subcommand(1);

    struct Opts {
        std::string type = "A2";
        std::string k = "symbolic";
        std::string weight;
        std::string lambda, lambda_im;
        std::string point;
        std::string partition;
        long n_vars = 3;
        long max_weight = 2;
        long k_int = 1;
        int depth = 12;
        double tol = 1e-8;
        unsigned long seed = 12345;
    };
    Opts o;
    std::string which, suite;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json | text | latex")->default_str("json");
        sub->add_option("--out", res.out_path, "write payload to file instead of stdout");
    };

    CLI::App* poly = app.add_subcommand("poly", "nonsymmetric / symmetric / skew polynomials");
    poly->add_option("which", which, "E | P | skew")->required();
    poly->add_option("--type", o.type, "Cartan type, e.g. A1, B2");
    poly->add_option("--k", o.k, "symbolic, or comma rationals per orbit");
    poly->add_option("--weight", o.weight, "fundamental-weight coordinates")->required();
    add_common(poly);

    CLI::App* norm = app.add_subcommand("norm", "squared norm and identity value");
    norm->add_option("--type", o.type, "Cartan type");
    norm->add_option("--k", o.k, "positive integers per orbit");
    norm->add_option("--weight", o.weight, "fundamental-weight coordinates")->required();
    add_common(norm);

    CLI::App* shift = app.add_subcommand("shift", "check the skew quotient identity");
    shift->add_option("--type", o.type, "Cartan type");
    shift->add_option("--weight", o.weight, "dominant fundamental-weight coordinates");
    add_common(shift);

    CLI::App* jack = app.add_subcommand("jack", "monomial expansion of the integral form");
    jack->add_option("--n", o.n_vars, "number of variables")->default_val(3);
    jack->add_option("--partition", o.partition, "weakly decreasing parts")->required();
    add_common(jack);

    CLI::App* hyp = app.add_subcommand("hypergeom", "series evaluation on the positive chamber");
    hyp->add_option("--type", o.type, "Cartan type");
    hyp->add_option("--k", o.k, "real multiplicities per orbit")->required();
    hyp->add_option("--lambda", o.lambda, "spectral parameter, real parts")->required();
    hyp->add_option("--lambda-im", o.lambda_im, "spectral parameter, imaginary parts");
    hyp->add_option("--point", o.point, "log coordinates of the evaluation point")->required();
    hyp->add_option("--depth", o.depth, "series truncation depth")->default_val(12);
    add_common(hyp);

    CLI::App* kz = app.add_subcommand("kz", "connection matrices and curvature residual");
    kz->add_option("--type", o.type, "Cartan type");
    kz->add_option("--k", o.k, "real multiplicities per orbit")->required();
    kz->add_option("--lambda", o.lambda, "spectral parameter, real parts")->required();
    kz->add_option("--lambda-im", o.lambda_im, "spectral parameter, imaginary parts");
    kz->add_option("--point", o.point, "log coordinates of the base point")->required();
    kz->add_option("--tol", o.tol, "curvature tolerance")->default_val(1e-8);
    add_common(kz);

    CLI::App* spectral = app.add_subcommand("spectral", "densities and residual subspaces");
    spectral->require_subcommand(1);
    CLI::App* sp_res = spectral->add_subcommand("residual", "enumerate residual subspaces");
    sp_res->add_option("--type", o.type, "Cartan type");
    sp_res->add_option("--k", o.k, "rational multiplicities per orbit")->required();
    bool dominant_only = false;
    sp_res->add_flag("--dominant", dominant_only, "keep antidominant centers only");
    add_common(sp_res);
    CLI::App* sp_sigma = spectral->add_subcommand("sigma", "spectral densities at a parameter");
    sp_sigma->add_option("--type", o.type, "Cartan type");
    sp_sigma->add_option("--k", o.k, "real multiplicities per orbit")->required();
    sp_sigma->add_option("--lambda", o.lambda, "spectral parameter, real parts")->required();
    sp_sigma->add_option("--lambda-im", o.lambda_im, "spectral parameter, imaginary parts");
    add_common(sp_sigma);
    CLI::App* sp_int = spectral->add_subcommand("integrable", "weight-function integrability");
    sp_int->add_option("--type", o.type, "Cartan type");
    sp_int->add_option("--k", o.k, "rational multiplicities per orbit")->required();
    add_common(sp_int);
    CLI::App* sp_mass = spectral->add_subcommand("mass", "rank-one weight mass cross-check");
    sp_mass->add_option("--k", o.k, "multiplicity in (-1/2, 0)")->required();
    sp_mass->add_option("--tol", o.tol, "relative tolerance")->default_val(1e-6);
    add_common(sp_mass);

    CLI::App* check = app.add_subcommand("check", "property suites");
    check->add_option("suite", suite, "all | poly | norm | shift | jack | hypergeom | kz | spectral")
        ->required();
    check->add_option("--type", o.type, "Cartan type");
    check->add_option("--max-weight", o.max_weight, "coordinate-sum bound")->default_val(2);
    check->add_option("--k-int", o.k_int, "integer multiplicity for exact checks")->default_val(1);
    check->add_option("--seed", o.seed, "seed for randomized checks")->default_val(12345);
    check->add_option("--tol", o.tol, "numeric tolerance")->default_val(1e-8);
    add_common(check);

    // ----- callbacks ------------------------------------------------------

    poly->callback([&] {
        command = "poly";
        if (which != "E" && which != "P" && which != "skew")
            throw UsageError("poly expects one of: E, P, skew");
        RootSystem rs(o.type);
        WeylGroup W(rs);
        Weight lam = detail::weight_of(rs, o.weight);
        payload = Json{{"schema", 1},     {"command", "poly"},  {"which", which},
                       {"type", o.type},  {"k", o.k},           {"weight", detail::fund_coords(lam)}};
        if (o.k == "symbolic") {
            auto ctx = symbolic_context(rs, W);
            std::vector<std::string> names = detail::k_names(rs.n_orbits());
            LaurentPoly<RatFunc> p = which == "E"   ? E_by_intertwiners(ctx, lam)
                                     : which == "P" ? jacobi_poly(ctx, lam)
                                                    : jacobi_skew(ctx, lam);
            payload["terms"] =
                detail::laurent_json(p, [&](const RatFunc& c) { return c.to_string(names); });
        } else {
            DunklContext<Rational> ctx(rs, W, detail::orbit_rationals(rs, o.k));
            LaurentPoly<Rational> p = which == "E"   ? E_by_intertwiners(ctx, lam)
                                      : which == "P" ? jacobi_poly(ctx, lam)
                                                     : jacobi_skew(ctx, lam);
            payload["terms"] =
                detail::laurent_json(p, [](const Rational& c) { return to_string(c); });
        }
    });

    norm->callback([&] {
        command = "norm";
        RootSystem rs(o.type);
        WeylGroup W(rs);
        Weight mu = detail::weight_of(rs, o.weight);
        std::vector<long> korb =
            o.k == "symbolic" ? std::vector<long>(static_cast<size_t>(rs.n_orbits()), 1)
                              : detail::parse_longs(o.k, "--k");
        if (static_cast<int>(korb.size()) != rs.n_orbits())
            throw UsageError("--k needs " + std::to_string(rs.n_orbits()) + " integers");
        for (long kv : korb)
            if (kv < 1) throw UsageError("norm requires integer multiplicities >= 1");
        NormEvalData d = norm_and_evaluation(rs, W, mu, korb);
        payload = Json{{"schema", 1}, {"command", "norm"},
                       {"type", o.type}, {"k", korb},
                       {"weight", detail::fund_coords(mu)}, {"norm2", to_string(d.norm2)},
                       {"value_at_identity", to_string(d.value_e)}};
    });

    shift->callback([&] {
        command = "shift";
        RootSystem rs(o.type);
        WeylGroup W(rs);
        Weight lam = o.weight.empty() ? rs.zero_weight() : detail::weight_of(rs, o.weight);
        if (!rs.is_dominant(lam)) throw std::invalid_argument("dominant weight expected");
        std::vector<RatFunc> ks, ksp;
        for (int ob = 0; ob < rs.n_orbits(); ++ob) {
            ks.push_back(RatFunc::variable(rs.n_orbits(), ob));
            ksp.push_back(ks.back() + ScalarOps<RatFunc>::one());
        }
        DunklContext<RatFunc> ctx(rs, W, ks), ctxp(rs, W, ksp);
        LaurentPoly<RatFunc> lhs = jacobi_skew(ctx, lam + rs.delta_weight());
        LaurentPoly<RatFunc> rhs = weyl_denominator<RatFunc>(rs) * jacobi_poly(ctxp, lam);
        bool holds = lhs == rhs;
        payload = Json{{"schema", 1},
                       {"command", "shift"},
                       {"type", o.type},
                       {"weight", detail::fund_coords(lam)},
                       {"identity", "skew(weight+delta, k) == delta * symmetric(weight, k+1)"},
                       {"holds", holds},
                       {"terms", lhs.n_terms()}};
        if (!holds) tolerance_failed = true;
    });

    jack->callback([&] {
        command = "jack";
        std::vector<long> parts = detail::parse_longs(o.partition, "--partition");
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw UsageError("partition parts must be decreasing");
        for (long p : parts)
            if (p < 1) throw UsageError("partition parts must be positive");
        std::vector<JackTerm> terms = jack_expansion(static_cast<int>(o.n_vars), parts);
        Json jt = Json::array();
        bool all_nonneg = true;
        for (const JackTerm& t : terms) {
            bool poly_ok = t.v.is_polynomial();
            if (poly_ok)
                for (const auto& [e, c] : t.v.num().terms())
                    if (!is_integer(c) || c < 0) all_nonneg = false;
            if (!poly_ok) all_nonneg = false;
            jt.push_back(Json{{"partition", t.nu},
                              {"coeff", t.v.to_string({"a"})}});
        }
        payload = Json{{"schema", 1},      {"command", "jack"},
                       {"n", o.n_vars},    {"partition", parts},
                       {"terms", jt},      {"nonnegative_integral", all_nonneg}};
    });

    hyp->callback([&] {
        command = "hypergeom";
        RootSystem rs(o.type);
        WeylGroup W(rs);
        NumericContext ctx = make_numeric_context(rs, W, detail::orbit_doubles(rs, o.k));
        CVec lam = detail::complex_vec(o.lambda, o.lambda_im, rs.rank(), "--lambda");
        std::vector<double> x = detail::parse_doubles(o.point, "--point");
        if (static_cast<int>(x.size()) != rs.rank())
            throw UsageError("--point needs " + std::to_string(rs.rank()) + " components");
        HypergeomTables t = hypergeom_tables(ctx, lam, o.depth);
        LogPoint a{x};
        double tail = 0.0;
        Cplx ft = F_tilde(ctx, t, a, &tail);
        Cplx fv = F_value(ctx, t, a);
        payload = Json{{"schema", 1},   {"command", "hypergeom"}, {"type", o.type},
                       {"depth", o.depth}, {"point", x},
                       {"F_tilde", Json::array({ft.real(), ft.imag()})},
                       {"F", Json::array({fv.real(), fv.imag()})},
                       {"tail_bound", tail}};
        if (rs.rank() == 1) {
            rank1::Params p =
                rank1::params(ctx.k[0], 0.0, lam[0]);
            Cplx closed = rank1::f_value(p, std::exp(x[0]));
            payload["closed_form_residual"] = std::abs(fv - closed);
        }
    });

    kz->callback([&] {
        command = "kz";
        RootSystem rs(o.type);
        WeylGroup W(rs);
        NumericContext ctx = make_numeric_context(rs, W, detail::orbit_doubles(rs, o.k));
        CVec lam = detail::complex_vec(o.lambda, o.lambda_im, rs.rank(), "--lambda");
        std::vector<double> x = detail::parse_doubles(o.point, "--point");
        if (static_cast<int>(x.size()) != rs.rank())
            throw UsageError("--point needs " + std::to_string(rs.rank()) + " components");
        KZMatrices m = kz_matrices(ctx, lam, LogPoint{x});
        double resid = kz_flatness_residual(m);
        Json mats = Json::array();
        for (const KZMat& mi : m.m) {
            Json rows = Json::array();
            for (const auto& row : mi) {
                Json r = Json::array();
                for (const Cplx& z : row) r.push_back(Json::array({z.real(), z.imag()}));
                rows.push_back(r);
            }
            mats.push_back(rows);
        }
        payload = Json{{"schema", 1},        {"command", "kz"},
                       {"type", o.type},     {"order", m.order},
                       {"point", x},         {"curvature_residual", resid},
                       {"matrices", mats}};
        if (resid > o.tol) tolerance_failed = true;
    });

    sp_res->callback([&] {
        command = "spectral residual";
        RootSystem rs(o.type);
        auto out = enumerate_residual(rs, detail::orbit_rationals(rs, o.k), dominant_only);
        Json list = Json::array();
        for (const auto& L : out) {
            Json dirs = Json::array();
            for (const RatVec& d : L.directions) dirs.push_back(detail::ratvec_json(d));
            list.push_back(Json{{"codim", L.codim},
                                {"center", detail::ratvec_json(L.center)},
                                {"basepoint", detail::ratvec_json(L.basepoint)},
                                {"directions", dirs},
                                {"count_k", L.count_k},
                                {"count_zero", L.count_zero},
                                {"distinguished", L.distinguished},
                                {"center_distinguished", L.center_distinguished},
                                {"minus_center_in_orbit", L.minus_center_in_orbit}});
        }
        payload = Json{{"schema", 1},       {"command", "spectral residual"},
                       {"type", o.type},    {"k", o.k},
                       {"dominant", dominant_only}, {"subspaces", list}};
    });

    sp_sigma->callback([&] {
        command = "spectral sigma";
        RootSystem rs(o.type);
        WeylGroup W(rs);
        NumericContext ctx = make_numeric_context(rs, W, detail::orbit_doubles(rs, o.k));
        CVec lam = detail::complex_vec(o.lambda, o.lambda_im, rs.rank(), "--lambda");
        SigmaDensities d = sigma_densities(ctx, lam);
        payload = Json{{"schema", 1},
                       {"command", "spectral sigma"},
                       {"type", o.type},
                       {"sigma", Json::array({d.sigma.real(), d.sigma.imag()})},
                       {"sigma_prime", Json::array({d.sigma_prime.real(), d.sigma_prime.imag()})},
                       {"c_identity_residual", sigma_c_identity_residual(ctx, lam)}};
    });

    sp_int->callback([&] {
        command = "spectral integrable";
        RootSystem rs(o.type);
        bool ok = integrability_check(rs, detail::orbit_rationals(rs, o.k));
        payload = Json{{"schema", 1},
                       {"command", "spectral integrable"},
                       {"type", o.type},
                       {"k", o.k},
                       {"integrable", ok}};
    });

    sp_mass->callback([&] {
        command = "spectral mass";
        std::vector<double> ks = detail::parse_doubles(o.k, "--k");
        if (ks.size() != 1) throw UsageError("mass takes a single multiplicity");
        PlancherelReport rep = rank1_plancherel_check(ks[0]);
        payload = Json{{"schema", 1},          {"command", "spectral mass"},
                       {"k", ks[0]},           {"quadrature", rep.quadrature},
                       {"closed_form", rep.closed_form}, {"rel_err", rep.rel_err}};
        if (rep.rel_err > o.tol) tolerance_failed = true;
    });

    check->callback([&] {
        command = "check";
        std::vector<std::string> names;
        if (suite == "all")
            names = {"poly", "norm", "shift", "jack", "hypergeom", "kz", "spectral"};
        else
            names = {suite};
        Json results = Json::array();
        bool all_ok = true;
        for (const std::string& name : names) {
            suites::Outcome oc;
            if (name == "poly")
                oc = suites::suite_poly(o.type, o.max_weight);
            else if (name == "norm")
                oc = suites::suite_norm(o.type, o.max_weight, o.k_int);
            else if (name == "shift")
                oc = suites::suite_shift(o.type);
            else if (name == "jack")
                oc = suites::suite_jack(4);
            else if (name == "hypergeom")
                oc = suites::suite_hypergeom(std::max(o.tol, 1e-8));
            else if (name == "kz")
                oc = suites::suite_kz(o.type, o.seed, std::max(o.tol, 1e-8));
            else if (name == "spectral")
                oc = suites::suite_spectral(o.type, o.tol);
            else
                throw UsageError("unknown suite '" + suite + "'");
            all_ok = all_ok && oc.passed;
            results.push_back(
                Json{{"suite", name}, {"passed", oc.passed}, {"detail", oc.detail}});
        }
        payload = Json{{"schema", 1},      {"command", "check"}, {"type", o.type},
                       {"seed", o.seed},   {"threads", detail::threads_cap()},
                       {"suites", results}, {"passed", all_ok}};
        if (!all_ok) tolerance_failed = true;
    });

    // ----- drive ----------------------------------------------------------

    std::vector<const char*> argv;
    argv.push_back("cherednik");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.output = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.output = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 1;
        res.diagnostics = e.what();
        return res;
    } catch (const UsageError& e) {
        res.exit_code = 1;
        res.diagnostics = e.what();
        return res;
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.diagnostics = e.what();
        payload = Json{{"schema", 1}, {"command", command}, {"error", e.what()}};
        res.output = payload.dump(2);
        return res;
    }

    if (format == "text" || format == "latex") {
        std::ostringstream out;
        if (command == "poly" && format == "text")
            out << detail::terms_text(payload["terms"]);
        else if (command == "poly")
            out << detail::terms_latex(payload["terms"]);
        else if (command == "jack" && format == "latex") {
            for (const auto& t : payload["terms"]) {
                std::string parts;
                for (long p : t["partition"].get<std::vector<long>>())
                    parts += (parts.empty() ? "" : ",") + std::to_string(p);
                out << "\\left(" << t["coeff"].get<std::string>() << "\\right) m_{(" << parts
                    << ")}";
                out << "\n";
            }
        } else {
            // generic flat text rendering
            for (const auto& [key, val] : payload.items()) {
                if (key == "schema") continue;
                out << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                    << "\n";
            }
        }
        res.output = out.str();
    } else if (format == "json") {
        res.output = payload.dump(2);
    } else {
        res.exit_code = 1;
        res.diagnostics = "--format must be json, text, or latex";
        return res;
    }
    if (tolerance_failed) res.exit_code = 3;
    return res;
}

}  // namespace cli
}  // namespace cherednik
