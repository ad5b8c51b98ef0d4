#pragma once

// Ground-truth branching that never touches the localization machinery:
// restrict the full weight system of the G-irreducible along the torus
// embedding, then decompose the resulting genuine H-character by repeatedly
// peeling off the irreducible with the lexicographically largest surviving
// weight. Torus targets skip the peeling (every weight is an irreducible).

#include "sympair/hreps.hpp"

namespace sympair {

struct OracleTable {
    std::string pair_label;
    Weight lambda;
    std::map<Weight, Int> mults;
};

// Greedy highest-weight peeling of a genuine character. The pivot is always
// a highest weight of some constituent, so a non-dominant or negative pivot
// proves the input was not a character.
inline std::map<Weight, Int> peel_decompose(std::map<Weight, Int> character, const RootDatum& h,
                                            Int dim_cap = 2000000) {
    std::map<Weight, Int> out;
    Int guard = 0;
    for (const auto& [w, m] : character) guard += (m < 0 ? -m : m);
    guard = 4 * guard + 16;

    while (!character.empty()) {
        if (--guard < 0) throw internal_error("peel_decompose: no convergence");
        auto pivot = character.rbegin();  // lexicographically largest weight
        Weight mu = pivot->first;
        Int c = pivot->second;
        if (c < 0) throw internal_error("peel_decompose: negative pivot, not a character");
        if (!h.dominant(mu))
            throw internal_error("peel_decompose: non-dominant pivot, not a character");
        const WeightSystem& ws = weight_system(h, mu, dim_cap);
        for (const auto& [w, m] : ws.mults) {
            auto it = character.find(w);
            Int next = (it == character.end() ? 0 : it->second) - c * m;
            if (next == 0) {
                if (it != character.end()) character.erase(it);
            } else if (it == character.end()) {
                character.emplace(w, next);
            } else {
                it->second = next;
            }
        }
        out[mu] += c;
    }
    return out;
}

inline OracleTable oracle_branch(const PairSpec& pair, const Weight& lambda,
                                 Int dim_cap = 2000000) {
    if (!pair.g.dominant(lambda)) throw error("oracle_branch: lambda is not G-dominant");
    const WeightSystem& ws = weight_system(pair.g, lambda, dim_cap);

    std::map<Weight, Int> restricted;
    for (const auto& [nu, m] : ws.mults) restricted[mat_apply(pair.embed, nu)] += m;

    OracleTable table;
    table.pair_label = pair.label;
    table.lambda = lambda;
    if (pair.h.positive_roots().empty()) {
        table.mults = std::move(restricted);  // torus target: weights are irreducibles
    } else {
        table.mults = peel_decompose(std::move(restricted), pair.h, dim_cap);
    }

    // dimension conservation
    Int total = 0;
    for (const auto& [mu, m] : table.mults) {
        check(m > 0, "oracle table has a non-positive multiplicity");
        total += m * weyl_dimension(pair.h, mu);
    }
    check(total == weyl_dimension(pair.g, lambda), "oracle table does not conserve dimension");
    return table;
}

}  // namespace sympair
