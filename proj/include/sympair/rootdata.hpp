#pragma once

// Root systems for products of unitary groups U(k) (type A blocks, roots
// e_r - e_s) and rank-one factors with a doubled root (the SU(2) weight
// convention: lattice Z, positive root 2, Weyl group acting by negation).
// Weyl elements are stored as signed permutations of the full coordinate
// space; block preservation is an invariant, not a type distinction.

#include <algorithm>
#include <functional>
#include <numeric>

#include "sympair/core.hpp"

namespace sympair {

enum class BlockKind { unitary, su2 };

struct Block {
    BlockKind kind;
    int size;  // su2 blocks always have size 1
};

class RootDatum {
  public:
    explicit RootDatum(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        int off = 0;
        for (const auto& b : blocks_) {
            check(b.size >= 1, "RootDatum: empty block");
            check(b.kind != BlockKind::su2 || b.size == 1, "RootDatum: su2 block must have rank 1");
            offsets_.push_back(off);
            off += b.size;
        }
        rank_ = off;
        for (size_t bi = 0; bi < blocks_.size(); ++bi) {
            int o = offsets_[bi], k = blocks_[bi].size;
            if (blocks_[bi].kind == BlockKind::unitary) {
                for (int r = 0; r < k; ++r)
                    for (int s = r + 1; s < k; ++s) {
                        Weight a(rank_, 0);
                        a[o + r] = 1;
                        a[o + s] = -1;
                        positive_roots_.push_back(std::move(a));
                    }
            } else {
                Weight a(rank_, 0);
                a[o] = 2;
                positive_roots_.push_back(std::move(a));
            }
        }
    }

    static RootDatum unitary(std::vector<int> sizes) {
        std::vector<Block> bs;
        for (int k : sizes) bs.push_back({BlockKind::unitary, k});
        return RootDatum(std::move(bs));
    }

    static RootDatum su2() { return RootDatum({Block{BlockKind::su2, 1}}); }

    int rank() const { return rank_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_offset(int b) const { return offsets_[b]; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }

    std::vector<Weight> all_roots() const {
        std::vector<Weight> r = positive_roots_;
        for (const auto& a : positive_roots_) r.push_back(weight_neg(a));
        return r;
    }

    // Structural test; valid for any vector that is a root of this datum.
    bool is_positive_root(const Weight& a) const {
        for (int i = 0; i < rank_; ++i) {
            if (a[i] > 0) return true;
            if (a[i] < 0) return false;
        }
        throw error("is_positive_root: zero vector is not a root");
    }

    bool dominant(const Weight& w) const {
        check(static_cast<int>(w.size()) == rank_, "dominant: rank mismatch");
        for (size_t bi = 0; bi < blocks_.size(); ++bi) {
            int o = offsets_[bi];
            if (blocks_[bi].kind == BlockKind::unitary) {
                for (int i = 1; i < blocks_[bi].size; ++i)
                    if (w[o + i - 1] < w[o + i]) return false;
            } else {
                if (w[o] < 0) return false;
            }
        }
        return true;
    }

    // Representative of the Weyl orbit in the dominant chamber.
    Weight dominant_rep(Weight w) const {
        for (size_t bi = 0; bi < blocks_.size(); ++bi) {
            int o = offsets_[bi];
            if (blocks_[bi].kind == BlockKind::unitary) {
                std::sort(w.begin() + o, w.begin() + o + blocks_[bi].size,
                          std::greater<Int>());
            } else {
                if (w[o] < 0) w[o] = -w[o];
            }
        }
        return w;
    }

    Weight two_rho() const {
        Weight r(rank_, 0);
        for (const auto& a : positive_roots_) r = weight_add(r, a);
        return r;
    }

    std::string signature() const {
        std::string s;
        for (const auto& b : blocks_) {
            s += (b.kind == BlockKind::unitary ? 'U' : 'S');
            s += std::to_string(b.size);
            s += '|';
        }
        return s;
    }

  private:
    std::vector<Block> blocks_;
    std::vector<int> offsets_;
    int rank_ = 0;
    std::vector<Weight> positive_roots_;
};

// Signed permutation: (w.mu)[perm[i]] = sign[i] * mu[i]. Unitary blocks use
// signs +1 only; su2 blocks fix their coordinate and may flip its sign.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> sign;

    bool operator==(const WeylElement& o) const { return perm == o.perm && sign == o.sign; }
    bool operator<(const WeylElement& o) const {
        return std::tie(perm, sign) < std::tie(o.perm, o.sign);
    }
};

inline WeylElement weyl_identity(int rank) {
    WeylElement w;
    w.perm.resize(rank);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(rank, 1);
    return w;
}

inline Weight weyl_apply(const WeylElement& w, const Weight& mu) {
    check(w.perm.size() == mu.size(), "weyl_apply: rank mismatch");
    Weight r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) r[w.perm[i]] = w.sign[i] * mu[i];
    return r;
}

// (a*b) acts as: apply b, then a.
inline WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
    check(a.perm.size() == b.perm.size(), "weyl_compose: rank mismatch");
    WeylElement r;
    size_t n = a.perm.size();
    r.perm.resize(n);
    r.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.perm[i] = a.perm[b.perm[i]];
        r.sign[i] = a.sign[b.perm[i]] * b.sign[i];
    }
    return r;
}

inline WeylElement weyl_inverse(const WeylElement& w) {
    WeylElement r;
    size_t n = w.perm.size();
    r.perm.resize(n);
    r.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.perm[w.perm[i]] = static_cast<int>(i);
        r.sign[w.perm[i]] = w.sign[i];
    }
    return r;
}

// Determinant of the signed permutation matrix; the sign character of W.
inline int weyl_sign(const WeylElement& w) {
    size_t n = w.perm.size();
    std::vector<bool> seen(n, false);
    int parity = 0;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = w.perm[j]) {
            seen[j] = true;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    int s = parity ? -1 : 1;
    for (int x : w.sign) s *= x;
    return s;
}

inline Int weyl_order(const RootDatum& rd) {
    Int n = 1;
    for (const auto& b : rd.blocks()) {
        if (b.kind == BlockKind::unitary)
            for (int i = 2; i <= b.size; ++i) n *= i;
        else
            n *= 2;
    }
    return n;
}

// All block-preserving signed permutations, in a fixed deterministic order.
inline std::vector<WeylElement> weyl_enumerate(const RootDatum& rd, Int cap = 40320) {
    Int total = weyl_order(rd);
    if (total > cap)
        throw cap_error("weyl_enumerate: group order " + std::to_string(total) +
                        " exceeds cap " + std::to_string(cap));

    std::vector<WeylElement> out;
    out.push_back(weyl_identity(rd.rank()));
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        const Block& b = rd.blocks()[bi];
        int o = rd.block_offset(bi);
        std::vector<WeylElement> local;
        if (b.kind == BlockKind::unitary) {
            std::vector<int> p(b.size);
            std::iota(p.begin(), p.end(), 0);
            do {
                WeylElement w = weyl_identity(rd.rank());
                for (int i = 0; i < b.size; ++i) w.perm[o + i] = o + p[i];
                local.push_back(std::move(w));
            } while (std::next_permutation(p.begin(), p.end()));
        } else {
            local.push_back(weyl_identity(rd.rank()));
            WeylElement s = weyl_identity(rd.rank());
            s.sign[o] = -1;
            local.push_back(std::move(s));
        }
        std::vector<WeylElement> next;
        next.reserve(out.size() * local.size());
        for (const auto& a : out)
            for (const auto& l : local) next.push_back(weyl_compose(a, l));
        out = std::move(next);
    }
    return out;
}

// w(rho) - rho as an integral weight: minus the sum of positive roots made
// negative by w^{-1}. Keeps everything integral even when rho itself is not.
inline Weight rho_shift(const RootDatum& rd, const WeylElement& w) {
    WeylElement winv = weyl_inverse(w);
    Weight s(rd.rank(), 0);
    for (const auto& a : rd.positive_roots())
        if (!rd.is_positive_root(weyl_apply(winv, a))) s = weight_sub(s, a);
    return s;
}

// Affine dot action w(lambda + rho) - rho.
inline Weight dot_action(const RootDatum& rd, const WeylElement& w, const Weight& lambda) {
    return weight_add(weyl_apply(w, lambda), rho_shift(rd, w));
}

}  // namespace sympair
