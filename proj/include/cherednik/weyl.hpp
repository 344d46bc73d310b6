#pragma once

// Finite Weyl group, enumerated as permutations of the root list.
//
// Elements are indices into a BFS-ordered table; index 0 is the identity and
// lengths are nondecreasing along the table.  Each element carries a reduced
// word, so acting on weights is a fold of simple reflections.  Enumeration is
// guarded: anything past E6 (|W| = 51840) is refused rather than attempted.

#include "root_system.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace cherednik {

inline constexpr long long kMaxWeylOrder = 51840;

class WeylGroup {
  public:
    explicit WeylGroup(const RootSystem& rs) : rs_(&rs) {
        if (rs.weyl_order() > kMaxWeylOrder)
            throw std::domain_error("Weyl group too large to enumerate: " +
                                    std::to_string(rs.weyl_order()));
        const int n = rs.rank();
        const size_t nr = rs.n_roots();
        gen_.assign(n, std::vector<int>(nr));
        for (int i = 0; i < n; ++i)
            for (size_t r = 0; r < nr; ++r) {
                const Root& rt = rs.root(static_cast<int>(r));
                std::vector<long> img = rt.alpha;
                long p = rt.pair_sv[i];
                img[i] -= p;
                // r_i(alpha) = alpha - alpha(alpha_i^vee) alpha_i
                gen_[i][r] = rs.root_index(img);
            }
        std::vector<int> id(nr);
        for (size_t r = 0; r < nr; ++r) id[r] = static_cast<int>(r);
        perm_.push_back(id);
        word_.push_back({});
        index_[id] = 0;
        for (size_t head = 0; head < perm_.size(); ++head) {
            for (int i = 0; i < n; ++i) {
                std::vector<int> np(nr);
                for (size_t r = 0; r < nr; ++r) np[r] = perm_[head][gen_[i][r]];
                if (!index_.count(np)) {
                    index_[np] = static_cast<int>(perm_.size());
                    std::vector<int> w = word_[head];
                    w.push_back(i);
                    perm_.push_back(std::move(np));
                    word_.push_back(std::move(w));
                }
            }
        }
        if (static_cast<long long>(perm_.size()) != rs.weyl_order())
            throw std::logic_error("Weyl enumeration size mismatch");
        longest_ = 0;
        for (size_t w = 0; w < perm_.size(); ++w)
            if (word_[w].size() > word_[longest_].size()) longest_ = static_cast<int>(w);
    }

    const RootSystem& roots() const { return *rs_; }
    size_t size() const { return perm_.size(); }
    int identity() const { return 0; }
    int longest() const { return longest_; }
    int length(int w) const { return static_cast<int>(word_[w].size()); }
    int sign(int w) const { return length(w) % 2 == 0 ? 1 : -1; }
    const std::vector<int>& word(int w) const { return word_[w]; }
    int root_image(int w, int r) const { return perm_[w][r]; }

    int simple(int i) const {
        std::vector<int> np = gen_[i];
        return index_.at(np);
    }

    int mul(int a, int b) const {
        const size_t nr = perm_[a].size();
        std::vector<int> np(nr);
        for (size_t r = 0; r < nr; ++r) np[r] = perm_[a][perm_[b][r]];
        return index_.at(np);
    }

    int inv(int a) const {
        const size_t nr = perm_[a].size();
        std::vector<int> np(nr);
        for (size_t r = 0; r < nr; ++r) np[perm_[a][r]] = static_cast<int>(r);
        return index_.at(np);
    }

    int reflection(int root_idx) const {
        const Root& rt = rs_->root(root_idx);
        std::vector<long> a = rt.alpha;
        if (!rt.positive)
            for (auto& c : a) c = -c;
        int pos = rs_->root_index(a);
        auto it = refl_cache_.find(pos);
        if (it != refl_cache_.end()) return it->second;
        const size_t nr = rs_->n_roots();
        std::vector<int> np(nr);
        for (size_t r = 0; r < nr; ++r) {
            const Root& x = rs_->root(static_cast<int>(r));
            Rational p = 0;
            const Root& al = rs_->root(pos);
            for (int i = 0; i < rs_->rank(); ++i)
                p += al.coroot_alpha[i] * Rational(x.pair_sv[i]);
            std::vector<long> img = x.alpha;
            long pl = to_long(p);
            for (int i = 0; i < rs_->rank(); ++i) img[i] -= pl * al.alpha[i];
            np[r] = rs_->root_index(img);
        }
        int idx = index_.at(np);
        refl_cache_[pos] = idx;
        return idx;
    }

    Weight act(int w, const Weight& x) const {
        Weight cur = x;
        const auto& wd = word_[w];
        for (auto it = wd.rbegin(); it != wd.rend(); ++it)
            cur = rs_->reflect(cur, rs_->simple_roots()[*it]);
        return cur;
    }

    // True when w(alpha) is a negative root.
    bool sends_negative(int w, int root_idx) const { return !rs_->root(perm_[w][root_idx]).positive; }

    std::vector<int> inversion_roots(int w) const {
        std::vector<int> out;
        for (int r : rs_->positive_roots())
            if (sends_negative(w, r)) out.push_back(r);
        return out;
    }

    // Longest element of the parabolic subgroup generated by the given simple
    // reflections.
    int parabolic_longest(const std::vector<int>& simples) const {
        std::vector<int> cur{identity()};
        std::map<int, bool> seen{{identity(), true}};
        int best = identity();
        for (size_t head = 0; head < cur.size(); ++head) {
            for (int i : simples) {
                int nxt = mul(cur[head], simple(i));
                if (!seen.count(nxt)) {
                    seen[nxt] = true;
                    cur.push_back(nxt);
                    if (length(nxt) > length(best)) best = nxt;
                }
            }
        }
        return best;
    }

    // Stabilizer of a dominant weight is the parabolic on its zero pairings.
    std::vector<int> dominant_stabilizer_simples(const Weight& dom) const {
        std::vector<int> out;
        for (int i = 0; i < rs_->rank(); ++i)
            if (dom.c2[i] == 0) out.push_back(i);
        return out;
    }

    // All w with w(dominant) = target, as a sorted list.
    std::vector<int> coset_reps(const Weight& dom, const Weight& target) const {
        std::vector<int> out;
        for (size_t w = 0; w < perm_.size(); ++w)
            if (act(static_cast<int>(w), dom) == target) out.push_back(static_cast<int>(w));
        return out;
    }

    // The longest w with w(lambda_plus) = lambda; unique by parabolic theory.
    int longest_taking(const Weight& dom, const Weight& target) const {
        auto reps = coset_reps(dom, target);
        if (reps.empty()) throw std::invalid_argument("target not in the orbit");
        int best = reps[0];
        for (int w : reps)
            if (length(w) > length(best)) best = w;
        return best;
    }

    std::vector<Weight> orbit(const Weight& x) const {
        std::vector<Weight> out{x};
        std::map<Weight, bool> seen{{x, true}};
        for (size_t head = 0; head < out.size(); ++head)
            for (int i = 0; i < rs_->rank(); ++i) {
                Weight y = rs_->reflect(out[head], rs_->simple_roots()[i]);
                if (!seen.count(y)) {
                    seen[y] = true;
                    out.push_back(y);
                }
            }
        return out;
    }

    // Minimal-length representatives of W / Stab(dom), one per orbit point.
    std::vector<int> minimal_orbit_reps(const Weight& dom) const {
        std::map<Weight, int> best;
        for (size_t w = 0; w < perm_.size(); ++w) {
            Weight img = act(static_cast<int>(w), dom);
            auto it = best.find(img);
            if (it == best.end() || length(static_cast<int>(w)) < length(it->second))
                best[img] = static_cast<int>(w);
        }
        std::vector<int> out;
        for (auto& [img, w] : best) out.push_back(w);
        return out;
    }

  private:
    const RootSystem* rs_;
    std::vector<std::vector<int>> gen_;
    std::vector<std::vector<int>> perm_;
    std::vector<std::vector<int>> word_;
    std::map<std::vector<int>, int> index_;
    mutable std::map<int, int> refl_cache_;
    int longest_ = 0;
};

}  // namespace cherednik
