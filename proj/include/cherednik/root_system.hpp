#pragma once

// Reduced root systems of types A..G with exact rational geometry.
//
// Everything lives in coordinates tied to the simple roots: a root stores its
// integer simple-root coordinates, and a weight stores doubled coordinates in
// the fundamental-weight basis, so the half-weight lattice (1/2)P needed by
// the Weyl denominator is exactly representable.  The bilinear form is the
// Bourbaki-style Gram matrix of the simple roots; only length ratios matter,
// and the normalization per type is documented next to the tables below.

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace cherednik {

struct RootSystemType {
    char letter = 'A';
    int rank = 1;

    std::string str() const { return std::string(1, letter) + std::to_string(rank); }
};

inline RootSystemType parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
    RootSystemType t;
    t.letter = s[0];
    t.rank = std::stoi(s.substr(1));
    bool ok = (t.letter == 'A' && t.rank >= 1) || (t.letter == 'B' && t.rank >= 2) ||
              (t.letter == 'C' && t.rank >= 3) || (t.letter == 'D' && t.rank >= 4) ||
              (t.letter == 'E' && t.rank >= 6 && t.rank <= 8) ||
              (t.letter == 'F' && t.rank == 4) || (t.letter == 'G' && t.rank == 2);
    if (!ok) throw std::invalid_argument("unsupported root system type: " + s);
    return t;
}

// Weight in (1/2)P: c2[i] are doubled coordinates in the fundamental-weight
// basis, so lambda = (1/2) sum c2[i] Lambda_i.  Elements of P have all c2
// even.
struct Weight {
    std::vector<long long> c2;

    bool operator==(const Weight& o) const { return c2 == o.c2; }
    bool operator!=(const Weight& o) const { return c2 != o.c2; }
    bool operator<(const Weight& o) const { return c2 < o.c2; }

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < c2.size(); ++i) r.c2[i] += o.c2[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < c2.size(); ++i) r.c2[i] -= o.c2[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& v : r.c2) v = -v;
        return r;
    }
    Weight operator*(long long s) const {
        Weight r = *this;
        for (auto& v : r.c2) v *= s;
        return r;
    }
    bool is_zero() const {
        for (auto v : c2) if (v != 0) return false;
        return true;
    }
    bool in_P() const {
        for (auto v : c2) if (v % 2 != 0) return false;
        return true;
    }
    long long l1_fund() const {
        long long s = 0;
        for (auto v : c2) s += v < 0 ? -v : v;
        return s / 2;
    }
    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < c2.size(); ++i) {
            if (i) s += ",";
            if (c2[i] % 2 == 0) s += std::to_string(c2[i] / 2);
            else s += std::to_string(c2[i]) + "/2";
        }
        return s + "]";
    }
};

struct Root {
    std::vector<long> alpha;      // integer coordinates in the simple-root basis
    std::vector<long> pair_sv;    // alpha(alpha_i^vee) for each simple coroot
    RatVec coroot_alpha;          // alpha^vee in the simple-coroot basis
    Rational len2;                // (alpha, alpha)
    long height = 0;
    int orbit = 0;                // 0 = short, 1 = long (0 for simply laced)
    bool positive = false;
    int negative_of = -1;         // index of -alpha
};

class RootSystem {
  public:
    explicit RootSystem(const std::string& type_str) : RootSystem(parse_type(type_str)) {}

    explicit RootSystem(RootSystemType t) : type_(t) {
        build_cartan();
        build_roots();
        classify();
    }

    const RootSystemType& type() const { return type_; }
    int rank() const { return type_.rank; }
    size_t n_roots() const { return roots_.size(); }
    size_t n_positive() const { return positive_.size(); }
    const Root& root(int i) const { return roots_[i]; }
    const std::vector<int>& positive_roots() const { return positive_; }
    const std::vector<int>& simple_roots() const { return simple_; }
    int n_orbits() const { return n_orbits_; }
    long cartan(int i, int j) const { return A_[i][j]; }  // alpha_j(alpha_i^vee)
    const RatMat& gram() const { return gram_; }
    int theta_short() const { return theta_short_; }      // highest short root
    int theta_long() const { return theta_long_; }        // highest root
    const std::vector<long>& exponents() const { return exponents_; }
    std::vector<long> degrees() const {
        std::vector<long> d = exponents_;
        for (auto& x : d) ++x;
        return d;
    }
    long long weyl_order() const { return weyl_order_; }

    Weight zero_weight() const { return Weight{std::vector<long long>(rank(), 0)}; }
    Weight fundamental_weight(int i) const {
        Weight w = zero_weight();
        w.c2[i] = 2;
        return w;
    }
    // delta = half the sum of the positive roots = sum of fundamental weights.
    Weight delta_weight() const {
        Weight w = zero_weight();
        for (int i = 0; i < rank(); ++i) w.c2[i] = 2;
        return w;
    }
    Weight root_weight(int r) const {
        Weight w = zero_weight();
        for (int i = 0; i < rank(); ++i) w.c2[i] = 2 * roots_[r].pair_sv[i];
        return w;
    }
    Weight half_root_weight(int r) const {
        Weight w = zero_weight();
        for (int i = 0; i < rank(); ++i) w.c2[i] = roots_[r].pair_sv[i];
        return w;
    }

    // lambda(alpha^vee) for the given root; a half-integer on (1/2)P.
    Rational pair_coroot(const Weight& w, int r) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i)
            s += roots_[r].coroot_alpha[i] * Rational(static_cast<long>(w.c2[i]));
        return s / 2;
    }
    long pair_coroot_int(const Weight& w, int r) const { return to_long(pair_coroot(w, r)); }

    Weight reflect(const Weight& w, int r) const {
        Rational p = pair_coroot(w, r);
        Weight out = w;
        for (int i = 0; i < rank(); ++i) {
            Rational delta = p * Rational(2 * roots_[r].pair_sv[i]);
            out.c2[i] -= to_long(delta);
        }
        return out;
    }

    RatVec alpha_coords(const Weight& w) const {
        RatVec fc(rank());
        for (int i = 0; i < rank(); ++i) fc[i] = Rational(static_cast<long>(w.c2[i])) / 2;
        RatVec out(rank(), 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) out[i] += Ainv_[i][j] * fc[j];
        return out;
    }

    Rational inner(const Weight& a, const Weight& b) const {
        RatVec x = alpha_coords(a), y = alpha_coords(b);
        return inner_alpha(x, y);
    }
    Rational inner_alpha(const RatVec& x, const RatVec& y) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) s += x[i] * gram_[i][j] * y[j];
        return s;
    }

    bool is_dominant(const Weight& w) const {
        for (auto v : w.c2) if (v < 0) return false;
        return true;
    }
    bool is_regular_dominant(const Weight& w) const {
        for (auto v : w.c2) if (v <= 0) return false;
        return true;
    }

    // Dominance partial order: leq(a, b) iff b - a is a nonnegative integer
    // combination of positive roots.
    bool dominance_leq(const Weight& a, const Weight& b) const {
        RatVec d = alpha_coords(b - a);
        for (auto& x : d)
            if (!is_integer(x) || x < 0) return false;
        return true;
    }

    Weight dominant_rep(const Weight& w, std::vector<int>* word = nullptr) const {
        Weight cur = w;
        if (word) word->clear();
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < rank(); ++i) {
                if (cur.c2[i] < 0) {
                    cur = reflect(cur, simple_[i]);
                    if (word) word->push_back(i);
                    moved = true;
                    break;
                }
            }
        }
        return cur;
    }

    // Strict order compatible with the Cherednik operators: a < b when the
    // dominant representatives compare strictly in dominance, or the
    // representatives agree and a is strictly above b in dominance.  The
    // orientation of the tie-break is deliberate.
    bool cher_lt(const Weight& a, const Weight& b) const {
        if (a == b) return false;
        Weight ap = dominant_rep(a), bp = dominant_rep(b);
        if (ap != bp) return dominance_leq(ap, bp);
        return dominance_leq(b, a);
    }

    // Positive system membership for an integer alpha-coordinate vector.
    int root_index(const std::vector<long>& alpha) const {
        auto it = root_lookup_.find(alpha);
        return it == root_lookup_.end() ? -1 : it->second;
    }

  private:
    void build_cartan() {
        const int n = rank();
        A_.assign(n, std::vector<long>(n, 0));
        len2_.assign(n, Rational(2));
        for (int i = 0; i < n; ++i) A_[i][i] = 2;
        auto bond = [&](int i, int j) { A_[i][j] = A_[j][i] = -1; };
        switch (type_.letter) {
            case 'A':
                for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
                A_[n - 2][n - 1] = -1;
                A_[n - 1][n - 2] = -2;
                len2_[n - 1] = 1;
                break;
            case 'C':
                for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
                A_[n - 2][n - 1] = -2;
                A_[n - 1][n - 2] = -1;
                len2_[n - 1] = 4;
                break;
            case 'D':
                for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
                bond(n - 3, n - 2);
                bond(n - 3, n - 1);
                break;
            case 'E':
                // Bourbaki numbering: chain 1-3-4-5-...-n with 2 hung off 4.
                bond(0, 2);
                bond(1, 3);
                for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
                break;
            case 'F':
                bond(0, 1);
                A_[1][2] = -1;
                A_[2][1] = -2;
                bond(2, 3);
                len2_[2] = len2_[3] = 1;
                break;
            case 'G':
                A_[0][1] = -3;
                A_[1][0] = -1;
                len2_[0] = 2;
                len2_[1] = 6;
                break;
        }
        gram_.assign(n, RatVec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram_[i][j] = Rational(A_[i][j]) * len2_[i] / 2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (gram_[i][j] != gram_[j][i]) throw std::logic_error("asymmetric Gram matrix");
        RatMat arat(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) arat[i][j] = Rational(A_[i][j]);
        Ainv_ = mat_inverse(arat);
    }

    void add_root(const std::vector<long>& alpha) {
        if (root_lookup_.count(alpha)) return;
        Root r;
        r.alpha = alpha;
        const int n = rank();
        r.pair_sv.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.pair_sv[i] += A_[i][j] * alpha[j];
        Rational l2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) l2 += Rational(alpha[i]) * gram_[i][j] * Rational(alpha[j]);
        r.len2 = l2;
        r.coroot_alpha.assign(n, 0);
        for (int i = 0; i < n; ++i) r.coroot_alpha[i] = Rational(alpha[i]) * len2_[i] / l2;
        r.height = 0;
        bool nonneg = true, nonpos = true;
        for (long c : alpha) {
            r.height += c;
            if (c > 0) nonpos = false;
            if (c < 0) nonneg = false;
        }
        if (!nonneg && !nonpos) throw std::logic_error("root with mixed signs");
        r.positive = nonneg;
        root_lookup_[alpha] = static_cast<int>(roots_.size());
        roots_.push_back(std::move(r));
    }

    void build_roots() {
        const int n = rank();
        for (int i = 0; i < n; ++i) {
            std::vector<long> a(n, 0);
            a[i] = 1;
            add_root(a);
            a[i] = -1;
            add_root(a);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            size_t sz = roots_.size();
            for (size_t r = 0; r < sz; ++r)
                for (int i = 0; i < n; ++i) {
                    long p = 0;
                    for (int j = 0; j < n; ++j) p += A_[i][j] * roots_[r].alpha[j];
                    std::vector<long> img = roots_[r].alpha;
                    img[i] -= p;
                    if (!root_lookup_.count(img)) {
                        add_root(img);
                        grew = true;
                    }
                }
        }
    }

    void classify() {
        const int n = rank();
        simple_.resize(n);
        for (int i = 0; i < n; ++i) {
            std::vector<long> a(n, 0);
            a[i] = 1;
            simple_[i] = root_lookup_.at(a);
        }
        Rational minlen = roots_[0].len2, maxlen = roots_[0].len2;
        for (auto& r : roots_) {
            minlen = std::min(minlen, r.len2);
            maxlen = std::max(maxlen, r.len2);
        }
        n_orbits_ = (minlen == maxlen) ? 1 : 2;
        for (auto& r : roots_) r.orbit = (r.len2 == minlen) ? 0 : 1;
        for (size_t i = 0; i < roots_.size(); ++i) {
            if (roots_[i].positive) positive_.push_back(static_cast<int>(i));
            std::vector<long> neg = roots_[i].alpha;
            for (auto& c : neg) c = -c;
            roots_[i].negative_of = root_lookup_.at(neg);
        }
        theta_short_ = theta_long_ = -1;
        for (int idx : positive_) {
            const Root& r = roots_[idx];
            bool dominant = true;
            for (int i = 0; i < n; ++i)
                if (r.pair_sv[i] < 0) dominant = false;
            if (!dominant) continue;
            if (r.len2 == minlen) theta_short_ = idx;
            if (r.len2 == maxlen) theta_long_ = idx;
        }
        if (theta_short_ < 0 || theta_long_ < 0) throw std::logic_error("missing dominant root");
        // Exponents: the conjugate of the height partition of R_+.
        long maxh = 0;
        for (int idx : positive_) maxh = std::max(maxh, roots_[idx].height);
        std::vector<long> cnt(maxh + 1, 0);
        for (int idx : positive_) ++cnt[roots_[idx].height];
        exponents_.assign(cnt[1], 0);
        for (long h = 1; h <= maxh; ++h)
            for (long j = 0; j < cnt[h]; ++j) ++exponents_[j];
        std::sort(exponents_.begin(), exponents_.end());
        long sum = 0;
        weyl_order_ = 1;
        for (long m : exponents_) {
            sum += m;
            weyl_order_ *= (m + 1);
        }
        if (sum != static_cast<long>(positive_.size()))
            throw std::logic_error("exponent bookkeeping failed");
    }

    RootSystemType type_;
    std::vector<std::vector<long>> A_;
    RatVec len2_;
    RatMat gram_, Ainv_;
    std::vector<Root> roots_;
    std::vector<int> positive_, simple_;
    std::map<std::vector<long>, int> root_lookup_;
    int n_orbits_ = 1;
    int theta_short_ = -1, theta_long_ = -1;
    std::vector<long> exponents_;
    long long weyl_order_ = 1;
};

}  // namespace cherednik
