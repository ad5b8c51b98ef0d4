#pragma once

// Exhaustive structural checks over a catalog: the parity relation between
// the sign exponents of the two routes, transport of determinant and wedge
// under change of positive system, the delta shift identity, independence of
// the choice of coset representatives, and agreement of the two evaluation
// routes. These run the same way from the test suite and from the CLI.

#include <functional>
#include <random>
#include <sstream>

#include "sympair/localize.hpp"
#include "sympair/oracle.hpp"

namespace sympair {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // first failure, empty when ok
};

inline CheckResult check_parity(const PairSpec& pair, const std::vector<OrbitDatum>& orbits,
                                const Limits& lim = {}) {
    CheckResult r{"parity n + k = m + d_ci (mod 2)", true, ""};
    for (const auto& orbit : orbits)
        for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
            SignExponents se = sign_exponents(pair, orbit, w);
            Int d = polarization(pair, orbit, w).ci_flip_count;
            if ((se.n + se.k) % 2 != (se.m + d) % 2) {
                r.ok = false;
                std::ostringstream os;
                os << pair.label << " class " << orbit.base_id << ": n=" << se.n
                   << " k=" << se.k << " m=" << se.m << " d_ci=" << d;
                r.detail = os.str();
                return r;
            }
        }
    return r;
}

// det of the nci module transported to the positive system of xw equals the
// flipped-sum twist of the kept part.
inline CheckResult check_det_transport(const PairSpec& pair,
                                       const std::vector<OrbitDatum>& orbits,
                                       const Limits& lim = {}) {
    CheckResult r{"nci determinant transport", true, ""};
    for (const auto& orbit : orbits)
        for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
            RootClassification rc = classify_roots(pair, orbit, w);
            Polarization pol = polarization(pair, orbit, w);
            HxCharacter lhs = orbit.hx.zero();
            for (const auto& a : rc.nci_plus) lhs = orbit.hx.add(lhs, orbit.restrict_base(a));
            HxCharacter rhs = orbit.hx.neg(orbit.restrict_base(pol.nci_flip_sum));
            for (const auto& a : pol.nci_kept) rhs = orbit.hx.add(rhs, orbit.restrict_base(a));
            if (!(lhs == rhs)) {
                r.ok = false;
                r.detail = pair.label + " class " + std::to_string(orbit.base_id);
                return r;
            }
        }
    return r;
}

// wedge over the ci roots positive for xw equals +-1 times a one-character
// twist of the base wedge.
inline CheckResult check_wedge_transport(const PairSpec& pair,
                                         const std::vector<OrbitDatum>& orbits,
                                         const Limits& lim = {}) {
    CheckResult r{"ci wedge transport", true, ""};
    for (const auto& orbit : orbits) {
        std::vector<HxCharacter> base_ci;
        for (const auto& a :
             classify_roots(pair, orbit, weyl_identity(pair.g.rank())).ci_plus)
            base_ci.push_back(orbit.restrict_base(a));
        VirtualCharacter base_wedge = wedge_expand(base_ci, orbit.hx, lim.wedge_cap);
        for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
            RootClassification rc = classify_roots(pair, orbit, w);
            Polarization pol = polarization(pair, orbit, w);
            std::vector<HxCharacter> w_ci;
            for (const auto& a : rc.ci_plus) w_ci.push_back(orbit.restrict_base(a));
            VirtualCharacter lhs = wedge_expand(w_ci, orbit.hx, lim.wedge_cap);
            VirtualCharacter twist = VirtualCharacter::unit(
                orbit.hx.neg(orbit.restrict_base(pol.ci_flip_sum)));
            VirtualCharacter rhs = vchar_scale(pol.ci_flip_count % 2 ? -1 : 1,
                                               vchar_tensor(twist, base_wedge, orbit.hx));
            if (!(lhs == rhs)) {
                r.ok = false;
                r.detail = pair.label + " class " + std::to_string(orbit.base_id);
                return r;
            }
        }
    }
    return r;
}

// delta(xw) - delta(x) equals the restriction of the flipped-root sums.
inline CheckResult check_delta_shift(const PairSpec& pair,
                                     const std::vector<OrbitDatum>& orbits,
                                     const Limits& lim = {}) {
    CheckResult r{"delta shift", true, ""};
    for (const auto& orbit : orbits) {
        HxCharacter delta0 = delta_character(pair, orbit, weyl_identity(pair.g.rank()));
        for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
            Polarization pol = polarization(pair, orbit, w);
            Weight combo = weight_sub(weight_add(pol.nci_flip_sum, pol.ci_flip_sum),
                                      pol.flip_sum);
            HxCharacter lhs = orbit.restrict_base(combo);
            HxCharacter rhs = orbit.hx.sub(delta_character(pair, orbit, w), delta0);
            if (!(lhs == rhs)) {
                r.ok = false;
                r.detail = pair.label + " class " + std::to_string(orbit.base_id);
                return r;
            }
        }
    }
    return r;
}

// Imaginary root counts of the positive system do not depend on w.
inline CheckResult check_imaginary_counts(const PairSpec& pair,
                                          const std::vector<OrbitDatum>& orbits,
                                          const Limits& lim = {}) {
    CheckResult r{"imaginary counts are w-independent", true, ""};
    for (const auto& orbit : orbits) {
        RootClassification base =
            classify_roots(pair, orbit, weyl_identity(pair.g.rank()));
        for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
            RootClassification rc = classify_roots(pair, orbit, w);
            if (rc.ci_plus.size() != base.ci_plus.size() ||
                rc.nci_plus.size() != base.nci_plus.size()) {
                r.ok = false;
                r.detail = pair.label + " class " + std::to_string(orbit.base_id);
                return r;
            }
        }
    }
    return r;
}

// Replacing every coset representative w by u*w with u in the orbit
// subgroup must leave all contributions unchanged.
inline CheckResult check_representative_independence(const PairSpec& pair,
                                                     const std::vector<OrbitDatum>& orbits,
                                                     const std::vector<Weight>& lambdas,
                                                     unsigned seed = 20180621,
                                                     const Limits& lim = {}) {
    CheckResult r{"representative independence", true, ""};
    std::mt19937 rng(seed);
    for (const Weight& lambda : lambdas) {
        std::vector<Weight> mus = candidate_support(pair, lambda, lim);
        for (const auto& orbit : orbits) {
            std::vector<WeylElement> perturbed;
            for (const auto& w : orbit.coset_reps) {
                std::uniform_int_distribution<size_t> pick(0, orbit.wxh.size() - 1);
                perturbed.push_back(weyl_compose(orbit.wxh[pick(rng)], w));
            }
            for (const auto& mu : mus) {
                Int a = 0, b = 0;
                for (size_t c = 0; c < orbit.coset_reps.size(); ++c) {
                    a += ind_multiplicity(
                        orbit_factor(pair, orbit, orbit.coset_reps[c], lambda, lim), mu, orbit,
                        pair, lim.max_dim);
                    b += ind_multiplicity(orbit_factor(pair, orbit, perturbed[c], lambda, lim),
                                          mu, orbit, pair, lim.max_dim);
                }
                if (a != b) {
                    r.ok = false;
                    r.detail = pair.label + " class " + std::to_string(orbit.base_id);
                    return r;
                }
            }
        }
    }
    return r;
}

// The coset-sum route and the Weyl-averaged route agree per class.
inline CheckResult check_route_equivalence(const PairSpec& pair,
                                           const std::vector<OrbitDatum>& orbits,
                                           const std::vector<Weight>& lambdas,
                                           const Limits& lim = {}) {
    CheckResult r{"route equivalence", true, ""};
    for (const Weight& lambda : lambdas) {
        std::vector<Weight> mus = candidate_support(pair, lambda, lim);
        for (const auto& orbit : orbits)
            for (const auto& mu : mus) {
                Int a = class_mult_cosets(pair, orbit, lambda, mu, lim);
                Int b = class_mult_weyl_sum(pair, orbit, lambda, mu, lim);
                if (a != b) {
                    r.ok = false;
                    std::ostringstream os;
                    os << pair.label << " class " << orbit.base_id << ": cosets " << a
                       << " vs weyl sum " << b;
                    r.detail = os.str();
                    return r;
                }
            }
    }
    return r;
}

// Branch table totals match the oracle exactly, including margin zeros.
inline CheckResult check_oracle_agreement(const PairSpec& pair,
                                          const std::vector<OrbitDatum>& orbits,
                                          const std::vector<Weight>& lambdas,
                                          const Limits& lim = {}) {
    CheckResult r{"oracle agreement", true, ""};
    for (const Weight& lambda : lambdas) {
        BranchTable table = branch_table(pair, orbits, lambda, lim);
        OracleTable oracle = oracle_branch(pair, lambda, lim.max_dim);
        for (const auto& [mu, entry] : table.entries) {
            auto it = oracle.mults.find(mu);
            Int expect = it == oracle.mults.end() ? 0 : it->second;
            if (entry.total != expect) {
                r.ok = false;
                std::ostringstream os;
                os << pair.label << " lambda/mu mismatch: got " << entry.total << " expected "
                   << expect;
                r.detail = os.str();
                return r;
            }
        }
        for (const auto& [mu, m] : oracle.mults)
            if (!table.entries.count(mu)) {
                r.ok = false;
                r.detail = pair.label + ": oracle constituent missing from the table";
                return r;
            }
    }
    return r;
}

// Dominant G-weights with block entries in [lo, hi] (su2 blocks clamp at 0).
inline std::vector<Weight> dominant_box(const RootDatum& rd, Int lo, Int hi) {
    std::vector<Weight> out{{}};
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        const Block& b = rd.blocks()[bi];
        std::vector<Weight> locals;
        if (b.kind == BlockKind::su2) {
            for (Int v = std::max<Int>(lo, 0); v <= hi; ++v) locals.push_back({v});
        } else {
            Weight cur;
            std::function<void()> rec = [&]() {
                if (static_cast<int>(cur.size()) == b.size) {
                    locals.push_back(cur);
                    return;
                }
                Int top = cur.empty() ? hi : cur.back();
                for (Int v = top; v >= lo; --v) {
                    cur.push_back(v);
                    rec();
                    cur.pop_back();
                }
            };
            rec();
        }
        std::vector<Weight> next;
        next.reserve(out.size() * locals.size());
        for (const auto& a : out)
            for (const auto& l : locals) {
                Weight cat = a;
                cat.insert(cat.end(), l.begin(), l.end());
                next.push_back(std::move(cat));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace sympair
