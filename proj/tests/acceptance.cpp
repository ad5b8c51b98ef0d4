// Acceptance suite: end-to-end reproduction of the closed-form branching
// tables, the oracle sweeps, and the structural identities, each criterion
// printed as one pass/fail line with its runtime. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "sympair/sympair.hpp"

using namespace sympair;

namespace {

struct Criterion {
    const char* id;
    const char* description;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

Int table_total(const BranchTable& t, const Weight& mu) {
    auto it = t.entries.find(mu);
    return it == t.entries.end() ? 0 : it->second.total;
}

bool tables_equal(const BranchTable& t, const std::map<Weight, Int>& expect, std::string& why) {
    for (const auto& [mu, entry] : t.entries) {
        auto it = expect.find(mu);
        Int want = it == expect.end() ? 0 : it->second;
        if (entry.total != want) {
            why = "unexpected total at a queried weight";
            return false;
        }
    }
    for (const auto& [mu, m] : expect)
        if (!t.entries.count(mu)) {
            why = "expected constituent missing from the table";
            return false;
        }
    return true;
}

// --- criterion bodies ------------------------------------------------------

bool c1_rank_one_strings(std::string& why) {
    PairSpec pair = make_su2_torus();
    auto orbits = catalog(pair);
    for (Int n = 0; n <= 10; ++n) {
        BranchTable t = branch_table(pair, orbits, {n});
        std::map<Weight, Int> expect;
        for (Int k = -n; k <= 0; ++k) expect[{2 * k + n}] = 1;
        if (!tables_equal(t, expect, why)) return false;
        // per-orbit breakdown: equator with parity support, poles negative
        // on the shifted cones
        for (const auto& [mu, entry] : t.entries) {
            Int v = mu[0];
            bool par = (v - n) % 2 == 0;
            Int north = (par && v >= n + 2) ? -1 : 0;
            Int south = (par && v <= -n - 2) ? -1 : 0;
            Int equator = par ? 1 : 0;
            if (entry.per_orbit != std::vector<Int>{north, south, equator}) {
                why = "per-orbit breakdown differs from the three expected terms";
                return false;
            }
        }
    }
    return true;
}

bool c2_clebsch_gordan(std::string& why) {
    PairSpec pair = make_diag_su2();
    auto orbits = catalog(pair);
    for (Int n = 0; n <= 8; ++n)
        for (Int m = n; m <= 8; ++m) {
            BranchTable t = branch_table(pair, orbits, {n, m});
            std::map<Weight, Int> expect;
            for (Int k = 0; k <= n; ++k) expect[{m + n - 2 * k}] = 1;
            if (!tables_equal(t, expect, why)) return false;
        }
    return true;
}

bool c3_tensor_rule_u2(std::string& why) {
    PairSpec pair = make_diag_u(2);
    auto orbits = catalog(pair);
    auto doms = dominant_box(RootDatum::unitary({2}), 0, 2);
    for (const Weight& a : doms)
        for (const Weight& b : doms) {
            Weight lambda{a[0], a[1], b[0], b[1]};
            OracleTable oracle = oracle_branch(pair, lambda);
            for (const auto& mu : candidate_support(pair, lambda)) {
                auto it = oracle.mults.find(mu);
                Int expect = it == oracle.mults.end() ? 0 : it->second;
                if (class_mult_weyl_sum(pair, orbits[0], lambda, mu) != expect) {
                    why = "Weyl-averaged route disagrees with the tensor decomposition";
                    return false;
                }
            }
        }
    return true;
}

bool c4_two_torus_strings(std::string& why) {
    PairSpec pair = make_upq(1, 1);
    auto orbits = catalog(pair);
    for (Int l1 = -5; l1 <= 5; ++l1)
        for (Int l2 = -5; l2 <= l1; ++l2) {
            BranchTable t = branch_table(pair, orbits, {l1, l2});
            std::map<Weight, Int> expect;
            for (Int k = 0; k <= l1 - l2; ++k) expect[{l1 - k, l2 + k}] = 1;
            if (!tables_equal(t, expect, why)) return false;
        }
    return true;
}

bool c5_oracle_sweeps(std::string& why) {
    for (auto [name, box] : std::vector<std::pair<const char*, Int>>{
             {"upq:2,1", 3}, {"upq:3,1", 3}, {"upq:2,2", 2}}) {
        PairSpec pair = parse_pair(name);
        auto orbits = catalog(pair);
        CheckResult r =
            check_oracle_agreement(pair, orbits, dominant_box(pair.g, 0, box));
        if (!r.ok) {
            why = r.detail;
            return false;
        }
    }
    return true;
}

const std::vector<const char*> kPropertyPairs{"su2-torus", "diag:u2", "diag:u3", "upq:2,1",
                                              "upq:2,2"};

bool c6_parity(std::string& why) {
    for (const char* name : kPropertyPairs) {
        PairSpec pair = parse_pair(name);
        CheckResult r = check_parity(pair, catalog(pair));
        if (!r.ok) {
            why = r.detail;
            return false;
        }
    }
    return true;
}

bool c7_transport(std::string& why) {
    for (const char* name : kPropertyPairs) {
        PairSpec pair = parse_pair(name);
        auto orbits = catalog(pair);
        for (auto check : {check_det_transport, check_wedge_transport, check_delta_shift}) {
            CheckResult r = check(pair, orbits, Limits{});
            if (!r.ok) {
                why = r.name + ": " + r.detail;
                return false;
            }
        }
    }
    return true;
}

bool c8_representative_independence(std::string& why) {
    struct Sweep {
        const char* name;
        std::vector<Weight> lambdas;
    };
    std::vector<Sweep> sweeps;
    {
        Sweep s{"su2-torus", {}};
        for (Int n = 0; n <= 10; ++n) s.lambdas.push_back({n});
        sweeps.push_back(std::move(s));
    }
    {
        Sweep s{"diag:su2", {}};
        for (Int n = 0; n <= 8; ++n)
            for (Int m = n; m <= 8; ++m) s.lambdas.push_back({n, m});
        sweeps.push_back(std::move(s));
    }
    {
        Sweep s{"diag:u2", {}};
        auto doms = dominant_box(RootDatum::unitary({2}), 0, 2);
        for (const Weight& a : doms)
            for (const Weight& b : doms) s.lambdas.push_back({a[0], a[1], b[0], b[1]});
        sweeps.push_back(std::move(s));
    }
    {
        Sweep s{"upq:1,1", {}};
        for (Int l1 = -5; l1 <= 5; ++l1)
            for (Int l2 = -5; l2 <= l1; ++l2) s.lambdas.push_back({l1, l2});
        sweeps.push_back(std::move(s));
    }
    sweeps.push_back({"upq:2,1", dominant_box(RootDatum::unitary({3}), 0, 3)});
    sweeps.push_back({"upq:3,1", dominant_box(RootDatum::unitary({4}), 0, 3)});
    sweeps.push_back({"upq:2,2", dominant_box(RootDatum::unitary({4}), 0, 2)});

    for (const auto& sweep : sweeps) {
        PairSpec pair = parse_pair(sweep.name);
        CheckResult r =
            check_representative_independence(pair, catalog(pair), sweep.lambdas);
        if (!r.ok) {
            why = r.detail;
            return false;
        }
    }
    return true;
}

bool c9_route_equivalence(std::string& why) {
    for (auto [name, box] : std::vector<std::pair<const char*, Int>>{
             {"upq:2,1", 3}, {"upq:3,1", 3}, {"upq:2,2", 2}}) {
        PairSpec pair = parse_pair(name);
        auto orbits = catalog(pair);
        CheckResult r =
            check_route_equivalence(pair, orbits, dominant_box(pair.g, 0, box));
        if (!r.ok) {
            why = r.detail;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"C1", "rank-one torus restriction strings with per-orbit terms", 1.0,
         c1_rank_one_strings},
        {"C2", "Clebsch-Gordan tables for the diagonal rank-one pair", 5.0, c2_clebsch_gordan},
        {"C3", "Weyl-averaged route matches U(2) tensor decompositions", 30.0,
         c3_tensor_rule_u2},
        {"C4", "two-torus restriction closed form", 5.0, c4_two_torus_strings},
        {"C5", "oracle sweeps for upq:2,1 upq:3,1 upq:2,2", 600.0, c5_oracle_sweeps},
        {"C6", "sign exponent parity across the catalog", 60.0, c6_parity},
        {"C7", "determinant, wedge and delta transport identities", 60.0, c7_transport},
        {"C8", "representative independence under random perturbation", 600.0,
         c8_representative_independence},
        {"C9", "coset route equals Weyl-averaged route with exact division", 600.0,
         c9_route_equivalence},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > c.limit_seconds) {
            ok = false;
            why = "exceeded time limit";
        }
        std::printf("[%s] %s %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.description,
                    secs, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
