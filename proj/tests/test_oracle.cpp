#include <doctest.h>

#include <random>

#include "sympair/oracle.hpp"

using namespace sympair;

namespace {

std::map<Weight, Int> character_of(const RootDatum& rd, const std::map<Weight, Int>& irreps) {
    std::map<Weight, Int> chi;
    for (const auto& [mu, c] : irreps)
        for (const auto& [w, m] : weight_system(rd, mu).mults) chi[w] += c * m;
    return chi;
}

// interlacing patterns for restriction from U(p+1) to U(p) x U(1): choose
// mu' with lambda_i >= mu'_i >= lambda_{i+1}
Int interlacing_count(const Weight& lambda) {
    Int count = 1;
    for (size_t i = 0; i + 1 < lambda.size(); ++i) count *= lambda[i] - lambda[i + 1] + 1;
    return count;
}

}  // namespace

TEST_CASE("peeling recovers single and double irreducibles") {
    RootDatum u2 = RootDatum::unitary({2});
    auto single = character_of(u2, {{{2, 0}, 1}});
    CHECK(peel_decompose(single, u2) == std::map<Weight, Int>{{{2, 0}, 1}});

    auto two = character_of(u2, {{{2, 0}, 1}, {{3, 1}, 2}});
    CHECK(peel_decompose(two, u2) == std::map<Weight, Int>{{{2, 0}, 1}, {{3, 1}, 2}});
}

TEST_CASE("peeling the square of the defining representation of U(2)") {
    RootDatum u2 = RootDatum::unitary({2});
    std::map<Weight, Int> chi{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
    CHECK(peel_decompose(chi, u2) == std::map<Weight, Int>{{{2, 0}, 1}, {{1, 1}, 1}});
}

TEST_CASE("peeling rejects non-characters") {
    RootDatum u2 = RootDatum::unitary({2});
    std::map<Weight, Int> not_closed{{{0, 1}, 1}};  // non-dominant top weight
    CHECK_THROWS_AS(peel_decompose(not_closed, u2), internal_error);
    std::map<Weight, Int> negative{{{1, 0}, -1}};
    CHECK_THROWS_AS(peel_decompose(negative, u2), internal_error);
}

TEST_CASE("peeling inverts random non-negative combinations") {
    RootDatum h = RootDatum::unitary({2, 1});
    std::mt19937 rng(77);
    std::uniform_int_distribution<Int> entry(-2, 3);
    std::uniform_int_distribution<Int> mult(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<Weight, Int> irreps;
        for (int i = 0; i < 3; ++i) {
            Weight mu = h.dominant_rep({entry(rng), entry(rng), entry(rng)});
            Int c = mult(rng);
            if (c > 0) irreps[mu] += c;
        }
        if (irreps.empty()) continue;
        CHECK(peel_decompose(character_of(h, irreps), h) == irreps);
    }
}

TEST_CASE("oracle tables for the catalog pairs") {
    SUBCASE("rank-one restriction") {
        PairSpec pair = make_su2_torus();
        for (Int n = 0; n <= 6; ++n) {
            OracleTable t = oracle_branch(pair, {n});
            CHECK(t.mults.size() == static_cast<size_t>(n + 1));
            for (Int k = -n; k <= n; k += 2) CHECK(t.mults.at({k}) == 1);
        }
    }
    SUBCASE("Clebsch-Gordan strings") {
        PairSpec pair = make_diag_su2();
        for (Int n = 0; n <= 4; ++n)
            for (Int m = n; m <= 5; ++m) {
                OracleTable t = oracle_branch(pair, {n, m});
                CHECK(t.mults.size() == static_cast<size_t>(n + 1));
                for (Int k = 0; k <= n; ++k) CHECK(t.mults.at({m + n - 2 * k}) == 1);
            }
    }
    SUBCASE("adjoint-sized restriction for upq:2,1") {
        PairSpec pair = make_upq(2, 1);
        OracleTable t = oracle_branch(pair, {2, 1, 0});
        std::map<Weight, Int> expect{
            {{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{1, 1, 1}, 1}, {{1, 0, 2}, 1}};
        CHECK(t.mults == expect);
    }
}

TEST_CASE("constituent count equals the interlacing count when q is one") {
    for (auto [p, lambda] : std::vector<std::pair<int, Weight>>{
             {1, {2, 0}}, {2, {2, 1, 0}}, {2, {3, 1, 1}}, {3, {2, 1, 1, 0}},
             {3, {3, 2, 1, 0}}}) {
        PairSpec pair = make_upq(p, 1);
        OracleTable t = oracle_branch(pair, lambda);
        Int total = 0;
        for (const auto& [mu, m] : t.mults) total += m;
        CHECK(total == interlacing_count(lambda));
    }
}

TEST_CASE("oracle dimension bookkeeping is enforced") {
    PairSpec pair = make_upq(3, 1);
    OracleTable t = oracle_branch(pair, {2, 1, 1, 0});
    Int dim = 0;
    for (const auto& [mu, m] : t.mults) dim += m * weyl_dimension(pair.h, mu);
    CHECK(dim == weyl_dimension(pair.g, {2, 1, 1, 0}));
}
