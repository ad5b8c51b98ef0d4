#pragma once

// Weight multiplicities of irreducible representations, via Freudenthal's
// recursion run block by block, and the Frobenius pairing that evaluates
// multiplicities inside modules induced from an abelian stabilizer.
// Weight systems are memoized per (root datum, highest weight): the same
// irreducible is paired against every orbit factor.

#include <mutex>

#include "sympair/pairs.hpp"
#include "sympair/series.hpp"

namespace sympair {

struct WeightSystem {
    Weight rep_label;
    std::map<Weight, Int> mults;
    Int dim = 0;
};

namespace detail {

// Dominant block weights below mu: equal coordinate sum, prefix sums bounded
// by mu's (the dominance order ideal).
inline void dominant_below_rec(const Weight& mu, const std::vector<Int>& mu_prefix, Weight& cur,
                               Int partial, std::vector<Weight>& out) {
    const int k = static_cast<int>(mu.size());
    const int i = static_cast<int>(cur.size());
    const Int total = mu_prefix[k];
    if (i == k - 1) {
        Int last = total - partial;
        if ((i == 0 || last <= cur[i - 1])) {
            cur.push_back(last);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    Int hi = mu_prefix[i + 1] - partial;  // prefix dominance at i+1
    if (i > 0 && cur[i - 1] < hi) hi = cur[i - 1];
    // remaining k-i coordinates are each at most the value chosen here
    Int remaining = total - partial;
    Int lo = floor_div(remaining + (k - i) - 1, k - i);  // ceil(remaining / (k-i))
    for (Int v = hi; v >= lo; --v) {
        cur.push_back(v);
        dominant_below_rec(mu, mu_prefix, cur, partial + v, out);
        cur.pop_back();
    }
}

inline bool is_weight_of_unitary(const Weight& mu, Weight v) {
    std::sort(v.begin(), v.end(), std::greater<Int>());
    Int pv = 0, pm = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        pv += v[i];
        pm += mu[i];
        if (pv > pm) return false;
    }
    return pv == pm;
}

inline std::map<Weight, Int> block_system_unitary(const Weight& mu) {
    const int k = static_cast<int>(mu.size());
    std::vector<Int> prefix(k + 1, 0);
    for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + mu[i];

    std::vector<Weight> doms;
    if (k == 1) {
        doms.push_back(mu);
    } else {
        Weight cur;
        dominant_below_rec(mu, prefix, cur, 0, doms);
    }
    // process higher weights first: the key strictly respects dominance
    auto height_key = [](const Weight& v) {
        Int key = 0, acc = 0;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            acc += v[i];
            key += acc;
        }
        return key;
    };
    std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
        Int ka = height_key(a), kb = height_key(b);
        return ka != kb ? ka > kb : a > b;
    });

    std::vector<Weight> pos_roots;
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s) {
            Weight a(k, 0);
            a[r] = 1;
            a[s] = -1;
            pos_roots.push_back(std::move(a));
        }
    Weight two_rho(k);
    for (int i = 0; i < k; ++i) two_rho[i] = k - 1 - 2 * i;

    std::map<Weight, Int> dom_mult;
    for (const auto& nu : doms) {
        if (nu == mu) {
            dom_mult[nu] = 1;
            continue;
        }
        Int numer = 0;
        for (const auto& a : pos_roots) {
            Weight v = nu;
            for (Int t = 1;; ++t) {
                v = weight_add(v, a);
                if (!is_weight_of_unitary(mu, v)) break;
                Weight rep = v;
                std::sort(rep.begin(), rep.end(), std::greater<Int>());
                auto it = dom_mult.find(rep);
                check(it != dom_mult.end(), "freudenthal: higher weight not yet computed");
                numer += it->second * weight_dot(v, a);
            }
        }
        numer *= 2;
        Weight diff = weight_sub(mu, nu);
        Weight sum = weight_add(weight_add(mu, nu), two_rho);
        Int denom = weight_dot(diff, sum);
        check(denom > 0 && numer % denom == 0, "freudenthal: inexact division");
        dom_mult[nu] = numer / denom;
    }

    std::map<Weight, Int> full;
    for (const auto& [nu, m] : dom_mult) {
        Weight v = nu;
        std::sort(v.begin(), v.end());
        do {
            full[v] = m;
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return full;
}

inline std::map<Weight, Int> block_system_su2(Int n) {
    check(n >= 0, "su2 block weight must be dominant");
    std::map<Weight, Int> full;
    for (Int v = -n; v <= n; v += 2) full[{v}] = 1;
    return full;
}

}  // namespace detail

// Exact multiplicities of all weights of the irreducible with highest
// weight mu.
inline WeightSystem weight_multiplicities(const RootDatum& rd, const Weight& mu,
                                          Int dim_cap = 2000000) {
    if (!rd.dominant(mu)) throw error("weight_multiplicities: weight is not dominant");
    WeightSystem ws;
    ws.rep_label = mu;
    ws.mults[{}] = 1;
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        const Block& b = rd.blocks()[bi];
        int o = rd.block_offset(bi);
        Weight mu_b(mu.begin() + o, mu.begin() + o + b.size);
        std::map<Weight, Int> block = b.kind == BlockKind::unitary
                                          ? detail::block_system_unitary(mu_b)
                                          : detail::block_system_su2(mu_b[0]);
        std::map<Weight, Int> next;
        for (const auto& [w, m] : ws.mults)
            for (const auto& [bw, bm] : block) {
                Weight cat = w;
                cat.insert(cat.end(), bw.begin(), bw.end());
                next.emplace(std::move(cat), m * bm);
            }
        ws.mults = std::move(next);
        if (static_cast<Int>(ws.mults.size()) > dim_cap)
            throw cap_error("weight system exceeds the dimension cap");
    }
    ws.dim = 0;
    for (const auto& [w, m] : ws.mults) ws.dim += m;
    return ws;
}

// Product formula for the dimension; an independent check on the weight
// system totals.
inline Int weyl_dimension(const RootDatum& rd, const Weight& mu) {
    if (!rd.dominant(mu)) throw error("weyl_dimension: weight is not dominant");
    __int128 num = 1, den = 1;
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        const Block& b = rd.blocks()[bi];
        int o = rd.block_offset(bi);
        if (b.kind == BlockKind::unitary) {
            for (int r = 0; r < b.size; ++r)
                for (int s = r + 1; s < b.size; ++s) {
                    num *= mu[o + r] - mu[o + s] + s - r;
                    den *= s - r;
                }
        } else {
            num *= mu[o] + 1;
        }
    }
    check(den != 0 && num % den == 0, "weyl_dimension: inexact");
    return static_cast<Int>(num / den);
}

// Memoized access; safe for concurrent readers.
inline const WeightSystem& weight_system(const RootDatum& rd, const Weight& mu,
                                         Int dim_cap = 2000000) {
    static std::map<std::pair<std::string, Weight>, WeightSystem> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(rd.signature(), mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, weight_multiplicities(rd, mu, dim_cap)).first;
    return it->second;
}

// Multiplicity of the factor inside the restriction of the irreducible
// H-module with highest weight mu: the Frobenius pairing of the factor with
// all H-weights of the module, pushed into the stabilizer's character group.
inline Int ind_multiplicity(const SeriesFactor& f, const Weight& mu, const OrbitDatum& orbit,
                            const PairSpec& pair, Int dim_cap = 2000000) {
    if (!pair.h.dominant(mu)) throw error("ind_multiplicity: H-weight is not dominant");
    const WeightSystem& ws = weight_system(pair.h, mu, dim_cap);
    Int total = 0;
    for (const auto& [nu, m] : ws.mults)
        total += m * factor_coeff(f, orbit.restrict_hweight(nu), orbit.hx);
    return total;
}

}  // namespace sympair
