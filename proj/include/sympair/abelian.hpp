#pragma once

// Character groups of the abelian stabilizers attached to a torus with an
// involution theta. The fixed-point subgroup of the torus has character
// group Z^r / (1-theta) Z^r, presented here in Smith normal form as a free
// part plus finite cyclic torsion. Characters restrict along the quotient
// map, and finite virtual characters over the quotient form a ring.

#include <map>
#include <tuple>

#include "sympair/core.hpp"
#include "sympair/smith.hpp"

namespace sympair {

struct LatticeInvolution {
    IntMat mat;

    explicit LatticeInvolution(IntMat m) : mat(std::move(m)) {
        if (!mat_is_identity(mat_mul(mat, mat)))
            throw error("LatticeInvolution: matrix does not square to the identity");
    }

    int rank() const { return static_cast<int>(mat.size()); }
    Weight apply(const Weight& w) const { return mat_apply(mat, w); }
};

// Element of the quotient group: integer coordinates on the free part,
// residues (normalized to [0, modulus)) on the torsion part.
struct HxCharacter {
    std::vector<Int> free_part;
    std::vector<Int> torsion;

    bool operator==(const HxCharacter& o) const {
        return free_part == o.free_part && torsion == o.torsion;
    }
    bool operator!=(const HxCharacter& o) const { return !(*this == o); }
    bool operator<(const HxCharacter& o) const {
        return std::tie(free_part, torsion) < std::tie(o.free_part, o.torsion);
    }
    bool is_zero() const { return weight_is_zero(free_part) && weight_is_zero(torsion); }
};

class QuotientPresentation {
  public:
    QuotientPresentation(int rank, const LatticeInvolution& theta) : rank_(rank) {
        check(theta.rank() == rank, "quotient_presentation: rank mismatch");
        IntMat one_minus(rank, std::vector<Int>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                one_minus[i][j] = (i == j ? 1 : 0) - theta.mat[i][j];

        SmithResult snf = smith_normal_form(one_minus);
        for (int i = 0; i < rank; ++i) {
            if (snf.diag[i] == 0) {
                free_rows_.push_back(snf.u[i]);
                free_preimages_.push_back(column(snf.u_inv, i));
            } else if (snf.diag[i] >= 2) {
                torsion_rows_.push_back(snf.u[i]);
                moduli_.push_back(snf.diag[i]);
                torsion_preimages_.push_back(column(snf.u_inv, i));
            }
            // diag == 1: coordinate dies in the quotient
        }

        // the quotient map must kill exactly (1-theta): every generator of the
        // image restricts to zero
        for (int j = 0; j < rank; ++j) {
            Weight gen(rank, 0);
            for (int i = 0; i < rank; ++i) gen[i] = one_minus[i][j];
            check(restrict(gen).is_zero(), "quotient_presentation: kernel mismatch");
        }
    }

    int ambient_rank() const { return rank_; }
    int free_rank() const { return static_cast<int>(free_rows_.size()); }
    int torsion_count() const { return static_cast<int>(moduli_.size()); }
    const std::vector<Int>& moduli() const { return moduli_; }

    HxCharacter restrict(const Weight& w) const {
        check(static_cast<int>(w.size()) == rank_, "restrict: weight rank mismatch");
        HxCharacter c;
        c.free_part.reserve(free_rows_.size());
        for (const auto& row : free_rows_) c.free_part.push_back(weight_dot(row, w));
        c.torsion.reserve(moduli_.size());
        for (size_t t = 0; t < moduli_.size(); ++t)
            c.torsion.push_back(mod_nonneg(weight_dot(torsion_rows_[t], w), moduli_[t]));
        return c;
    }

    HxCharacter zero() const {
        HxCharacter c;
        c.free_part.assign(free_rows_.size(), 0);
        c.torsion.assign(moduli_.size(), 0);
        return c;
    }

    HxCharacter add(const HxCharacter& a, const HxCharacter& b) const {
        validate(a);
        validate(b);
        HxCharacter c;
        c.free_part = weight_add(a.free_part, b.free_part);
        c.torsion.resize(moduli_.size());
        for (size_t t = 0; t < moduli_.size(); ++t)
            c.torsion[t] = mod_nonneg(a.torsion[t] + b.torsion[t], moduli_[t]);
        return c;
    }

    HxCharacter sub(const HxCharacter& a, const HxCharacter& b) const {
        return add(a, neg(b));
    }

    HxCharacter neg(const HxCharacter& a) const {
        validate(a);
        HxCharacter c;
        c.free_part = weight_neg(a.free_part);
        c.torsion.resize(moduli_.size());
        for (size_t t = 0; t < moduli_.size(); ++t)
            c.torsion[t] = mod_nonneg(-a.torsion[t], moduli_[t]);
        return c;
    }

    // lattice vector mapping onto the j-th free (resp. torsion) generator;
    // witnesses surjectivity of the quotient map
    const Weight& free_preimage(int j) const { return free_preimages_.at(j); }
    const Weight& torsion_preimage(int j) const { return torsion_preimages_.at(j); }

    void validate(const HxCharacter& c) const {
        if (c.free_part.size() != free_rows_.size() || c.torsion.size() != moduli_.size())
            throw error("HxCharacter does not match this presentation");
    }

  private:
    static Weight column(const IntMat& m, int j) {
        Weight c(m.size());
        for (size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
        return c;
    }

    int rank_;
    std::vector<Weight> free_rows_;
    std::vector<Weight> torsion_rows_;
    std::vector<Int> moduli_;
    std::vector<Weight> free_preimages_;
    std::vector<Weight> torsion_preimages_;
};

inline QuotientPresentation quotient_presentation(int rank, const LatticeInvolution& theta) {
    return QuotientPresentation(rank, theta);
}

// Finite Z-linear combination of quotient characters; zero coefficients are
// never stored.
struct VirtualCharacter {
    std::map<HxCharacter, Int> terms;

    void add_term(const HxCharacter& c, Int mult) {
        if (mult == 0) return;
        auto it = terms.find(c);
        if (it == terms.end()) {
            terms.emplace(c, mult);
        } else {
            it->second += mult;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const VirtualCharacter& o) const { return terms == o.terms; }
    bool empty() const { return terms.empty(); }

    static VirtualCharacter unit(const HxCharacter& c) {
        VirtualCharacter v;
        v.add_term(c, 1);
        return v;
    }
};

inline VirtualCharacter vchar_add(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r = a;
    for (const auto& [c, m] : b.terms) r.add_term(c, m);
    return r;
}

inline VirtualCharacter vchar_scale(Int k, const VirtualCharacter& a) {
    VirtualCharacter r;
    if (k == 0) return r;
    for (const auto& [c, m] : a.terms) r.terms.emplace(c, k * m);
    return r;
}

// Convolution of supports: the ring product of R(H_x).
inline VirtualCharacter vchar_tensor(const VirtualCharacter& a, const VirtualCharacter& b,
                                     const QuotientPresentation& pres) {
    VirtualCharacter r;
    for (const auto& [ca, ma] : a.terms)
        for (const auto& [cb, mb] : b.terms) r.add_term(pres.add(ca, cb), ma * mb);
    return r;
}

}  // namespace sympair
