#pragma once

// The symmetric-pair catalog. Each pair (G, H) with H the fixed points of an
// involution contributes finitely many H-orbit classes on the critical set
// of the flag variety; every class is described here in base-point
// coordinates: one involution of the character lattice, one quotient
// presentation for the abelian stabilizer, a classification of the roots
// (compact/non-compact imaginary, real, complex), the subgroup of the Weyl
// group preserving the orbit, and coset representatives enumerating the
// distinct H-orbits inside the class. All later computations transport along
// the right Weyl action: the lattice, involution and stabilizer are shared
// across the class, only the positive system varies.
//
// Supported pairs: a torus inside the rank-one group with doubled root
// ("su2-torus"), the diagonal inside K x K ("diag:..."), and
// U(p) x U(q) inside U(p+q) ("upq:p,q").

#include <functional>
#include <map>
#include <set>

#include "sympair/abelian.hpp"
#include "sympair/rootdata.hpp"

namespace sympair {

enum class PairKind { su2_torus, diag, upq };

struct PairSpec {
    PairKind kind;
    std::string label;
    RootDatum g;
    RootDatum h;
    IntMat embed;  // r_H x r_G: restriction of torus characters to the H-torus
    int p = 0, q = 0;
};

inline PairSpec make_su2_torus() {
    PairSpec s{PairKind::su2_torus, "su2-torus", RootDatum::su2(),
               RootDatum::unitary({1}), {{1}}, 0, 0};
    return s;
}

inline PairSpec make_diag(const RootDatum& k_datum, const std::string& label) {
    std::vector<Block> gblocks = k_datum.blocks();
    for (const auto& b : k_datum.blocks()) gblocks.push_back(b);
    int r = k_datum.rank();
    IntMat embed(r, std::vector<Int>(2 * r, 0));
    for (int i = 0; i < r; ++i) embed[i][i] = embed[i][r + i] = 1;
    return PairSpec{PairKind::diag, label, RootDatum(gblocks), k_datum, embed, 0, 0};
}

inline PairSpec make_diag_u(int k) {
    if (k < 1) throw error("diag:u<k> requires k >= 1");
    return make_diag(RootDatum::unitary({k}), "diag:u" + std::to_string(k));
}

inline PairSpec make_diag_su2() { return make_diag(RootDatum::su2(), "diag:su2"); }

inline PairSpec make_upq(int p, int q) {
    if (!(p >= q && q >= 1)) throw error("upq requires p >= q >= 1");
    int n = p + q;
    return PairSpec{PairKind::upq,
                    "upq:" + std::to_string(p) + "," + std::to_string(q),
                    RootDatum::unitary({n}),
                    RootDatum::unitary({p, q}),
                    mat_identity(n),
                    p,
                    q};
}

inline PairSpec parse_pair(const std::string& s) {
    if (s == "su2-torus") return make_su2_torus();
    if (s == "diag:su2") return make_diag_su2();
    if (s.rfind("diag:u", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(s.substr(6));
        } catch (...) {
            throw error("bad pair string: " + s);
        }
        return make_diag_u(k);
    }
    if (s.rfind("upq:", 0) == 0) {
        auto comma = s.find(',', 4);
        if (comma == std::string::npos) throw error("bad pair string: " + s);
        int p = 0, q = 0;
        try {
            p = std::stoi(s.substr(4, comma - 4));
            q = std::stoi(s.substr(comma + 1));
        } catch (...) {
            throw error("bad pair string: " + s);
        }
        return make_upq(p, q);
    }
    throw error("unknown pair: " + s + " (expected su2-torus | diag:su2 | diag:u<k> | upq:<p>,<q>)");
}

enum class RootLabel { compact_imaginary, noncompact_imaginary, real_root, complex_root };

struct OrbitDatum {
    int base_id = 0;
    std::string name;
    LatticeInvolution theta;
    QuotientPresentation hx;
    std::vector<Weight> roots;  // all roots of G, both signs
    std::vector<RootLabel> labels;
    std::map<Weight, int> root_index;
    std::vector<WeylElement> wxh;  // subgroup of W preserving the H-orbit of the base point
    std::vector<WeylElement> coset_reps;
    Int wxh_order = 0;
    IntMat h_to_base;  // r_G x r_H; restriction of an H-weight factors through it

    RootLabel label_of(const Weight& a) const {
        auto it = root_index.find(a);
        check(it != root_index.end(), "label_of: not a root");
        return labels[it->second];
    }
    Weight theta_apply(const Weight& a) const { return theta.apply(a); }
    HxCharacter restrict_base(const Weight& a) const { return hx.restrict(a); }
    HxCharacter restrict_hweight(const Weight& nu) const {
        return hx.restrict(mat_apply(h_to_base, nu));
    }
};

namespace detail {

inline OrbitDatum build_orbit(const PairSpec& pair, int base_id, const std::string& name,
                              IntMat theta_mat,
                              const std::function<bool(const Weight&)>& is_compact_imaginary,
                              std::vector<WeylElement> wxh, IntMat h_to_base, Int weyl_cap) {
    const RootDatum& g = pair.g;
    LatticeInvolution theta(std::move(theta_mat));
    OrbitDatum orb{base_id,
                   name,
                   theta,
                   quotient_presentation(g.rank(), theta),
                   g.all_roots(),
                   {},
                   {},
                   std::move(wxh),
                   {},
                   0,
                   std::move(h_to_base)};
    for (size_t i = 0; i < orb.roots.size(); ++i) orb.root_index.emplace(orb.roots[i], i);

    orb.labels.reserve(orb.roots.size());
    for (const auto& a : orb.roots) {
        Weight ta = orb.theta_apply(a);
        check(orb.root_index.count(ta) > 0, "orbit involution does not preserve the root set");
        if (ta == a)
            orb.labels.push_back(is_compact_imaginary(a) ? RootLabel::compact_imaginary
                                                         : RootLabel::noncompact_imaginary);
        else if (ta == weight_neg(a))
            orb.labels.push_back(RootLabel::real_root);
        else
            orb.labels.push_back(RootLabel::complex_root);
    }
    // imaginary type is theta-invariant; complex partners stay complex
    for (size_t i = 0; i < orb.roots.size(); ++i)
        check(orb.label_of(orb.theta_apply(orb.roots[i])) == orb.labels[i],
              "root labels not theta-stable");

    // right cosets of the orbit-preserving subgroup, in enumeration order
    std::vector<WeylElement> w_all = weyl_enumerate(g, weyl_cap);
    orb.wxh_order = static_cast<Int>(orb.wxh.size());
    std::set<WeylElement> seen;
    for (const auto& w : w_all) {
        if (seen.count(w)) continue;
        orb.coset_reps.push_back(w);
        for (const auto& u : orb.wxh) seen.insert(weyl_compose(u, w));
    }
    check(orb.wxh_order * static_cast<Int>(orb.coset_reps.size()) ==
              static_cast<Int>(w_all.size()),
          "orbit subgroup does not tile the Weyl group");
    return orb;
}

}  // namespace detail

// One OrbitDatum per class of H-orbits modulo the right Weyl action.
inline std::vector<OrbitDatum> catalog(const PairSpec& pair, Int weyl_cap = 40320) {
    std::vector<OrbitDatum> out;
    const int rg = pair.g.rank();

    if (pair.kind == PairKind::su2_torus) {
        // pole class: involution fixes the lattice, both roots non-compact
        // imaginary, the two poles are the two cosets
        out.push_back(detail::build_orbit(
            pair, 0, "poles", mat_identity(1), [](const Weight&) { return false; },
            {weyl_identity(1)}, {{1}}, weyl_cap));
        // equator class: involution negates the lattice, roots real, stabilizer
        // has a two-torsion character group
        WeylElement flip = weyl_identity(1);
        flip.sign[0] = -1;
        out.push_back(detail::build_orbit(
            pair, 1, "equator", {{-1}}, [](const Weight&) { return false; },
            {weyl_identity(1), flip}, {{1}}, weyl_cap));
        check(out[1].hx.free_rank() == 0 && out[1].hx.moduli() == std::vector<Int>{2},
              "equator stabilizer should be two-torsion");
    } else if (pair.kind == PairKind::diag) {
        const int r = pair.h.rank();
        IntMat theta(rg, std::vector<Int>(rg, 0));
        for (int i = 0; i < r; ++i) theta[i][r + i] = theta[r + i][i] = 1;
        std::vector<WeylElement> wxh;
        for (const auto& s : weyl_enumerate(pair.h, weyl_cap)) {
            WeylElement d = weyl_identity(rg);
            for (int i = 0; i < r; ++i) {
                d.perm[i] = s.perm[i];
                d.sign[i] = s.sign[i];
                d.perm[r + i] = r + s.perm[i];
                d.sign[r + i] = s.sign[i];
            }
            wxh.push_back(std::move(d));
        }
        IntMat h_to_base(rg, std::vector<Int>(r, 0));
        for (int i = 0; i < r; ++i) h_to_base[i][i] = 1;
        out.push_back(detail::build_orbit(
            pair, 0, "diag", std::move(theta), [](const Weight&) { return false; },
            std::move(wxh), std::move(h_to_base), weyl_cap));
        check(out[0].hx.free_rank() == r && out[0].hx.torsion_count() == 0,
              "diagonal stabilizer should be a torus of rank of K");
    } else {
        const int p = pair.p, q = pair.q, n = p + q;
        std::vector<WeylElement> w_all = weyl_enumerate(pair.g, weyl_cap);
        for (int j = 0; j <= q; ++j) {
            // involution: swap inside each of the j adjacent pairs following
            // the first p-j coordinates
            IntMat theta = mat_identity(n);
            for (int k = 0; k < j; ++k) {
                int a = p - j + 2 * k, b = a + 1;
                theta[a][a] = theta[b][b] = 0;
                theta[a][b] = theta[b][a] = 1;
            }
            auto slot_sign = [p, q, j, n](int i) -> int {
                if (i < p - j) return +1;
                if (i >= p + j) return -1;
                return 0;  // paired slot
            };
            auto is_ci = [slot_sign](const Weight& a) {
                int r = -1, s = -1;
                for (size_t i = 0; i < a.size(); ++i) {
                    if (a[i] == 1) r = static_cast<int>(i);
                    if (a[i] == -1) s = static_cast<int>(i);
                }
                check(r >= 0 && s >= 0, "imaginary root of unexpected shape");
                return slot_sign(r) * slot_sign(s) > 0;
            };
            // subgroup: permutations preserving the two fixed ranges and the
            // pair partition
            std::vector<WeylElement> wxh;
            auto pair_of = [p, j](int i) -> int {
                if (i < p - j || i >= p + j) return -1;
                return (i - (p - j)) / 2;
            };
            for (const auto& w : w_all) {
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    if (i < p - j)
                        ok = w.perm[i] < p - j;
                    else if (i >= p + j)
                        ok = w.perm[i] >= p + j;
                }
                for (int k = 0; k < j && ok; ++k) {
                    int a = p - j + 2 * k;
                    ok = pair_of(w.perm[a]) >= 0 && pair_of(w.perm[a]) == pair_of(w.perm[a + 1]);
                }
                if (ok) wxh.push_back(w);
            }
            Int expected = 1;
            for (int i = 2; i <= p - j; ++i) expected *= i;
            for (int i = 2; i <= q - j; ++i) expected *= i;
            for (int i = 2; i <= j; ++i) expected *= i;
            for (int i = 0; i < j; ++i) expected *= 2;
            check(static_cast<Int>(wxh.size()) == expected,
                  "upq orbit subgroup has unexpected order");

            // base-point reordering permutation: pair slots interleave the
            // tail of the first factor with the head of the second
            std::vector<int> wj(n);
            for (int i = 0; i < p - j; ++i) wj[i] = i;
            for (int i = p + j; i < n; ++i) wj[i] = i;
            for (int k = 0; k < j; ++k) {
                wj[p - j + 2 * k] = p - j + k;
                wj[p - j + 2 * k + 1] = p + k;
            }
            IntMat h_to_base(n, std::vector<Int>(n, 0));
            for (int i = 0; i < n; ++i) h_to_base[i][wj[i]] = 1;

            out.push_back(detail::build_orbit(pair, j, "j=" + std::to_string(j),
                                              std::move(theta), is_ci, std::move(wxh),
                                              std::move(h_to_base), weyl_cap));
            check(out.back().hx.free_rank() == n - j && out.back().hx.torsion_count() == 0,
                  "upq stabilizer should be a torus of rank n-j");
        }
    }
    return out;
}

struct RootClassification {
    std::vector<Weight> ci_plus;    // compact imaginary, positive for xw
    std::vector<Weight> nci_plus;   // non-compact imaginary, positive for xw
    std::vector<Weight> real_plus;  // real, positive for xw
    std::vector<std::pair<Weight, Weight>> complex_pairs;  // {a, theta a} both positive
    std::vector<Weight> complex_split;  // complex, positive, theta-partner negative
};

inline std::vector<Weight> positive_system(const PairSpec& pair, const WeylElement& w) {
    std::vector<Weight> r;
    r.reserve(pair.g.positive_roots().size());
    for (const auto& a : pair.g.positive_roots()) r.push_back(weyl_apply(w, a));
    return r;
}

inline RootClassification classify_roots(const PairSpec& pair, const OrbitDatum& orbit,
                                         const WeylElement& w) {
    RootClassification rc;
    std::set<Weight> pos;
    for (const auto& a : positive_system(pair, w)) pos.insert(a);
    for (const auto& a : pos) {
        switch (orbit.label_of(a)) {
            case RootLabel::compact_imaginary:
                rc.ci_plus.push_back(a);
                break;
            case RootLabel::noncompact_imaginary:
                rc.nci_plus.push_back(a);
                break;
            case RootLabel::real_root:
                rc.real_plus.push_back(a);
                break;
            case RootLabel::complex_root: {
                Weight ta = orbit.theta_apply(a);
                if (pos.count(ta)) {
                    if (a < ta) rc.complex_pairs.emplace_back(a, ta);
                } else {
                    rc.complex_split.push_back(a);
                }
                break;
            }
        }
    }
    return rc;
}

// Half-sum of the theta-stable complex part of the positive system, as a
// character of the stabilizer: alpha and theta(alpha) restrict equally, so
// one representative per pair realizes the half-sum exactly. A pair with a
// missing partner would be a data bug and fails loudly.
inline HxCharacter delta_character(const PairSpec& pair, const OrbitDatum& orbit,
                                   const WeylElement& w) {
    RootClassification rc = classify_roots(pair, orbit, w);
    HxCharacter d = orbit.hx.zero();
    for (const auto& [a, ta] : rc.complex_pairs) {
        check(orbit.restrict_base(a) == orbit.restrict_base(ta),
              "complex pair restricts inconsistently");
        d = orbit.hx.add(d, orbit.restrict_base(a));
    }
    return d;
}

// Integer exponents controlling the signs of the two formula routes.
struct SignExponents {
    Int m;  // for the positive system of xw
    Int n;  // for the base positive system
    Int k;  // mixed count between base and xw systems
};

inline SignExponents sign_exponents(const PairSpec& pair, const OrbitDatum& orbit,
                                    const WeylElement& w) {
    std::set<Weight> base_pos;
    for (const auto& a : pair.g.positive_roots()) base_pos.insert(a);
    std::set<Weight> wpos;
    for (const auto& a : positive_system(pair, w)) wpos.insert(a);

    SignExponents e{0, 0, 0};
    Int theta_stable_w = 0, theta_fixed_w = 0, nci_w = 0;
    for (const auto& a : wpos) {
        Weight ta = orbit.theta_apply(a);
        if (wpos.count(ta)) {
            ++theta_stable_w;
            if (ta == a) ++theta_fixed_w;
        }
        if (orbit.label_of(a) == RootLabel::noncompact_imaginary) ++nci_w;
    }
    check((theta_stable_w - theta_fixed_w) % 2 == 0, "theta-stable complex set has odd size");
    e.m = (theta_stable_w - theta_fixed_w) / 2 + nci_w;

    Int theta_stable_base = 0, theta_fixed_base = 0;
    for (const auto& a : base_pos) {
        Weight ta = orbit.theta_apply(a);
        if (base_pos.count(ta)) {
            ++theta_stable_base;
            if (ta == a) ++theta_fixed_base;
        }
    }
    e.n = theta_stable_base - (theta_stable_base - theta_fixed_base) / 2;

    for (const auto& a : base_pos) {
        if (!wpos.count(a)) continue;
        RootLabel l = orbit.label_of(a);
        if (l == RootLabel::complex_root) ++e.k;
        if (l == RootLabel::compact_imaginary) ++e.k;
    }
    return e;
}

// Splitting of the base-positive imaginary roots by the positive system of
// xw, and the sums of the roots flipped by w.
struct Polarization {
    std::vector<Weight> nci_kept;     // stay positive for xw
    std::vector<Weight> nci_flipped;  // made negative by w
    Weight nci_flip_sum;
    Weight ci_flip_sum;
    Weight flip_sum;  // over all base-positive roots
    Int ci_flip_count = 0;
};

inline Polarization polarization(const PairSpec& pair, const OrbitDatum& orbit,
                                 const WeylElement& w) {
    std::set<Weight> wpos;
    for (const auto& a : positive_system(pair, w)) wpos.insert(a);
    Polarization p;
    int rg = pair.g.rank();
    p.nci_flip_sum.assign(rg, 0);
    p.ci_flip_sum.assign(rg, 0);
    p.flip_sum.assign(rg, 0);
    for (const auto& a : pair.g.positive_roots()) {
        bool kept = wpos.count(a) > 0;
        if (!kept) p.flip_sum = weight_add(p.flip_sum, a);
        switch (orbit.label_of(a)) {
            case RootLabel::noncompact_imaginary:
                if (kept) {
                    p.nci_kept.push_back(a);
                } else {
                    p.nci_flipped.push_back(a);
                    p.nci_flip_sum = weight_add(p.nci_flip_sum, a);
                }
                break;
            case RootLabel::compact_imaginary:
                if (!kept) {
                    p.ci_flip_sum = weight_add(p.ci_flip_sum, a);
                    ++p.ci_flip_count;
                }
                break;
            default:
                break;
        }
    }
    return p;
}

}  // namespace sympair
