#pragma once

// Assembly of the branching decomposition. Every H-orbit inside a class
// contributes a signed admissible module
//   (-1)^m * C_{shift} (x) Sym(nci generators) (x) /\(ci generators)
// induced up from the abelian stabilizer; multiplicities of an irreducible
// H-module are obtained by the Frobenius pairing and summed over orbits.
// A second route evaluates the same class contribution as a dot-action sum
// over the full Weyl group with polarized generators, divided by the order
// of the orbit-preserving subgroup; the two routes agreeing entry-wise is a
// strong correctness check and both are exposed.

#include <thread>

#include "sympair/hreps.hpp"

namespace sympair {

struct Limits {
    Int max_weyl = 40320;
    Int max_dim = 2000000;
    int wedge_cap = 20;
    int jobs = 1;
};

// The admissible module attached to the H-orbit of (base of `orbit`) * w.
inline SeriesFactor orbit_factor(const PairSpec& pair, const OrbitDatum& orbit,
                                 const WeylElement& w, const Weight& lambda,
                                 const Limits& lim = {}) {
    if (!pair.g.dominant(lambda)) throw error("orbit_factor: lambda is not G-dominant");
    RootClassification rc = classify_roots(pair, orbit, w);
    SignExponents se = sign_exponents(pair, orbit, w);

    HxCharacter shift = orbit.restrict_base(weyl_apply(w, lambda));
    shift = orbit.hx.add(shift, delta_character(pair, orbit, w));
    for (const auto& a : rc.nci_plus) shift = orbit.hx.add(shift, orbit.restrict_base(a));

    std::vector<HxCharacter> sym, wedge;
    for (const auto& a : rc.nci_plus) sym.push_back(orbit.restrict_base(a));
    for (const auto& a : rc.ci_plus) wedge.push_back(orbit.restrict_base(a));

    return make_series_factor(se.m % 2 ? -1 : 1, std::move(shift), std::move(sym),
                              std::move(wedge), orbit.hx, lim.wedge_cap);
}

// Multiplicity of the H-irreducible mu contributed by one class, summed over
// its coset representatives.
inline Int class_mult_cosets(const PairSpec& pair, const OrbitDatum& orbit, const Weight& lambda,
                             const Weight& mu, const Limits& lim = {}) {
    Int total = 0;
    for (const auto& w : orbit.coset_reps)
        total += ind_multiplicity(orbit_factor(pair, orbit, w, lambda, lim), mu, orbit, pair,
                                  lim.max_dim);
    return total;
}

// Same class contribution through the Weyl-averaged route: dot action,
// polarized generators, exact division at the end. Inexact division means
// the orbit data is wrong, not the input.
inline Int class_mult_weyl_sum(const PairSpec& pair, const OrbitDatum& orbit,
                               const Weight& lambda, const Weight& mu, const Limits& lim = {}) {
    if (!pair.g.dominant(lambda)) throw error("class_mult_weyl_sum: lambda is not G-dominant");
    HxCharacter delta0 = delta_character(pair, orbit, weyl_identity(pair.g.rank()));
    std::vector<HxCharacter> wedge;
    for (const auto& a : classify_roots(pair, orbit, weyl_identity(pair.g.rank())).ci_plus)
        wedge.push_back(orbit.restrict_base(a));

    const Int n_exp = sign_exponents(pair, orbit, weyl_identity(pair.g.rank())).n;
    Int acc = 0;
    for (const auto& w : weyl_enumerate(pair.g, lim.max_weyl)) {
        SignExponents se = sign_exponents(pair, orbit, w);
        Polarization pol = polarization(pair, orbit, w);

        HxCharacter shift = orbit.restrict_base(dot_action(pair.g, w, lambda));
        shift = orbit.hx.add(shift, delta0);
        for (const auto& a : pol.nci_kept) shift = orbit.hx.add(shift, orbit.restrict_base(a));

        std::vector<HxCharacter> sym;
        for (const auto& a : pol.nci_kept) sym.push_back(orbit.restrict_base(a));
        for (const auto& a : pol.nci_flipped)
            sym.push_back(orbit.restrict_base(weight_neg(a)));

        SeriesFactor f = make_series_factor(se.k % 2 ? -1 : 1, std::move(shift), std::move(sym),
                                            wedge, orbit.hx, lim.wedge_cap);
        acc += ind_multiplicity(f, mu, orbit, pair, lim.max_dim);
    }
    if (n_exp % 2) acc = -acc;
    if (acc % orbit.wxh_order != 0)
        throw internal_error("class contribution not divisible by the orbit subgroup order");
    return acc / orbit.wxh_order;
}

struct BranchEntry {
    Int total = 0;
    std::vector<Int> per_orbit;  // aligned with BranchTable::orbit_keys
};

struct BranchTable {
    std::string pair_label;
    Weight lambda;
    std::vector<std::pair<int, int>> orbit_keys;  // (class id, coset index)
    std::map<Weight, BranchEntry> entries;        // keyed by dominant H-weight
};

inline Int branch_mult(const PairSpec& pair, const std::vector<OrbitDatum>& orbits,
                       const Weight& lambda, const Weight& mu, const Limits& lim = {},
                       std::vector<Int>* per_orbit = nullptr) {
    Int total = 0;
    for (const auto& orbit : orbits)
        for (const auto& w : orbit.coset_reps) {
            Int v = ind_multiplicity(orbit_factor(pair, orbit, w, lambda, lim), mu, orbit, pair,
                                     lim.max_dim);
            if (per_orbit) per_orbit->push_back(v);
            total += v;
        }
    return total;
}

// Candidate support: dominant representatives of the restricted weights of
// the G-irreducible, padded with a ring of nearby dominant weights so the
// table itself witnesses vanishing outside the support.
inline std::vector<Weight> candidate_support(const PairSpec& pair, const Weight& lambda,
                                             const Limits& lim = {}) {
    const WeightSystem& ws = weight_system(pair.g, lambda, lim.max_dim);
    std::set<Weight> support;
    for (const auto& [nu, m] : ws.mults)
        support.insert(pair.h.dominant_rep(mat_apply(pair.embed, nu)));
    std::set<Weight> margin;
    for (const auto& mu : support)
        for (size_t i = 0; i < mu.size(); ++i)
            for (Int d : {-2LL, -1LL, 1LL, 2LL}) {
                Weight m2 = mu;
                m2[i] += d;
                if (pair.h.dominant(m2) && !support.count(m2)) margin.insert(std::move(m2));
            }
    std::vector<Weight> out(support.begin(), support.end());
    out.insert(out.end(), margin.begin(), margin.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline BranchTable branch_table(const PairSpec& pair, const std::vector<OrbitDatum>& orbits,
                                const Weight& lambda, const Limits& lim = {}) {
    if (!pair.g.dominant(lambda)) throw error("branch_table: lambda is not G-dominant");
    BranchTable table;
    table.pair_label = pair.label;
    table.lambda = lambda;

    std::vector<std::pair<const OrbitDatum*, SeriesFactor>> factors;
    for (const auto& orbit : orbits)
        for (size_t c = 0; c < orbit.coset_reps.size(); ++c) {
            table.orbit_keys.emplace_back(orbit.base_id, static_cast<int>(c));
            factors.emplace_back(&orbit, orbit_factor(pair, orbit, orbit.coset_reps[c], lambda, lim));
        }

    std::vector<Weight> cands = candidate_support(pair, lambda, lim);
    for (const auto& mu : cands) weight_system(pair.h, mu, lim.max_dim);  // warm the cache

    const size_t nf = factors.size();
    std::vector<std::vector<Int>> cells(cands.size(), std::vector<Int>(nf, 0));
    auto run = [&](size_t begin, size_t end) {
        for (size_t idx = begin; idx < end; ++idx) {
            size_t mi = idx / nf, fi = idx % nf;
            cells[mi][fi] = ind_multiplicity(factors[fi].second, cands[mi], *factors[fi].first,
                                             pair, lim.max_dim);
        }
    };
    size_t total_cells = cands.size() * nf;
    int jobs = lim.jobs;
    if (jobs <= 1 || total_cells < 2) {
        run(0, total_cells);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (total_cells + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t b = t * chunk, e = std::min(total_cells, b + chunk);
            if (b < e) pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
    }

    for (size_t mi = 0; mi < cands.size(); ++mi) {
        BranchEntry entry;
        entry.per_orbit = cells[mi];
        for (Int v : cells[mi]) entry.total += v;
        table.entries.emplace(cands[mi], std::move(entry));
    }
    return table;
}

}  // namespace sympair
