#include <doctest.h>

#include "sympair/checks.hpp"

using namespace sympair;

namespace {

WeylElement transposition(int rank, int a, int b) {
    WeylElement w = weyl_identity(rank);
    std::swap(w.perm[a], w.perm[b]);
    return w;
}

// Character of the stabilizer predicted for the upq base point: j copies of
// det(A)det(B)^{-1} times the explicit pair-slot correction, pulled back
// through the base-point reordering.
HxCharacter expected_upq_delta(const PairSpec& pair, const OrbitDatum& orbit) {
    int p = pair.p, q = pair.q, n = p + q, j = orbit.base_id;
    Weight chi(n, 0);
    for (int i = 0; i < p; ++i) chi[i] = 1;
    for (int i = p; i < n; ++i) chi[i] = -1;
    Weight psi(n, 0);
    for (int k = 1; k <= j; ++k) psi[p - j + k - 1] = q - p + 2 + 2 * j - 4 * k;
    Weight h_weight = weight_add(weight_scale(j, chi), psi);
    return orbit.restrict_hweight(h_weight);
}

}  // namespace

TEST_CASE("pair grammar") {
    CHECK(parse_pair("su2-torus").kind == PairKind::su2_torus);
    CHECK(parse_pair("diag:su2").g.rank() == 2);
    CHECK(parse_pair("diag:u3").h.rank() == 3);
    CHECK(parse_pair("upq:3,2").g.rank() == 5);
    CHECK_THROWS_AS(parse_pair("upq:1,2"), error);  // p >= q >= 1
    CHECK_THROWS_AS(parse_pair("so5"), error);
    CHECK_THROWS_AS(parse_pair("upq:x,y"), error);
}

TEST_CASE("su2-torus catalog: pole class with two cosets plus the equator") {
    PairSpec pair = make_su2_torus();
    auto orbits = catalog(pair);
    REQUIRE(orbits.size() == 2);

    CHECK(orbits[0].coset_reps.size() == 2);
    CHECK(orbits[0].wxh_order == 1);
    CHECK(orbits[1].coset_reps.size() == 1);
    CHECK(orbits[1].wxh_order == 2);
    // three H-orbits in total
    CHECK(orbits[0].coset_reps.size() + orbits[1].coset_reps.size() == 3);

    WeylElement id = weyl_identity(1);
    RootClassification pole = classify_roots(pair, orbits[0], id);
    CHECK(pole.nci_plus == std::vector<Weight>{{2}});
    CHECK(pole.ci_plus.empty());
    CHECK(pole.complex_pairs.empty());

    RootClassification equator = classify_roots(pair, orbits[1], id);
    CHECK(equator.nci_plus.empty());
    CHECK(equator.ci_plus.empty());
    CHECK(equator.real_plus == std::vector<Weight>{{2}});

    CHECK(delta_character(pair, orbits[0], id).is_zero());
    CHECK(delta_character(pair, orbits[1], id).is_zero());

    CHECK(sign_exponents(pair, orbits[0], id).m == 1);
    CHECK(sign_exponents(pair, orbits[1], id).m == 0);
}

TEST_CASE("diagonal catalog: one class, cosets indexed by the Weyl group of K") {
    PairSpec pair = make_diag_su2();
    auto orbits = catalog(pair);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].coset_reps.size() == 2);
    CHECK(orbits[0].wxh_order == 2);

    PairSpec u2 = make_diag_u(2);
    auto orbits2 = catalog(u2);
    REQUIRE(orbits2.size() == 1);
    CHECK(orbits2[0].coset_reps.size() == 2);
    CHECK(orbits2[0].wxh_order == 2);

    // no imaginary roots; delta at the base point is the full positive sum of
    // one factor pushed to the diagonal
    WeylElement id = weyl_identity(4);
    RootClassification rc = classify_roots(u2, orbits2[0], id);
    CHECK(rc.ci_plus.empty());
    CHECK(rc.nci_plus.empty());
    CHECK(rc.real_plus.empty());
    CHECK(rc.complex_pairs.size() == 1);
    Weight two_rho_left{1, -1, 0, 0};
    CHECK(delta_character(u2, orbits2[0], id) == orbits2[0].restrict_base(two_rho_left));

    SignExponents se = sign_exponents(u2, orbits2[0], id);
    CHECK(se.n == 1);  // number of positive roots of K
    // the k exponent realizes the sign character across the whole group
    for (const auto& w : weyl_enumerate(u2.g))
        CHECK((sign_exponents(u2, orbits2[0], w).k % 2 ? -1 : 1) == weyl_sign(w));
}

TEST_CASE("upq catalog: class count, subgroup orders, coset counts") {
    PairSpec pair = make_upq(2, 1);
    auto orbits = catalog(pair);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].wxh_order == 2);
    CHECK(orbits[1].wxh_order == 2);
    CHECK(orbits[0].coset_reps.size() == 3);
    CHECK(orbits[1].coset_reps.size() == 3);

    PairSpec p22 = make_upq(2, 2);
    auto orbits22 = catalog(p22);
    REQUIRE(orbits22.size() == 3);
    CHECK(orbits22[0].wxh_order == 4);   // 2! 2!
    CHECK(orbits22[1].wxh_order == 2);   // 1! 1! 1! 2
    CHECK(orbits22[2].wxh_order == 8);   // 2! 2^2
    CHECK(orbits22[0].coset_reps.size() == 6);
    CHECK(orbits22[1].coset_reps.size() == 12);
    CHECK(orbits22[2].coset_reps.size() == 3);

    // subgroup orders follow (p-j)! (q-j)! j! 2^j
    PairSpec p32 = make_upq(3, 2);
    auto orbits32 = catalog(p32);
    REQUIRE(orbits32.size() == 3);
    CHECK(orbits32[0].wxh_order == 12);  // 3! 2!
    CHECK(orbits32[1].wxh_order == 4);   // 2! 1! 1! 2
    CHECK(orbits32[2].wxh_order == 8);   // 1! 0! 2! 4
}

TEST_CASE("upq root classification at the base point") {
    PairSpec pair = make_upq(2, 1);
    auto orbits = catalog(pair);
    WeylElement id = weyl_identity(3);

    RootClassification j0 = classify_roots(pair, orbits[0], id);
    CHECK(j0.nci_plus == std::vector<Weight>{{0, 1, -1}, {1, 0, -1}});  // p*q of them
    CHECK(j0.ci_plus == std::vector<Weight>{{1, -1, 0}});
    CHECK(j0.complex_pairs.empty());

    RootClassification j1 = classify_roots(pair, orbits[1], id);
    CHECK(j1.nci_plus.empty());
    CHECK(j1.ci_plus.empty());
    CHECK(j1.real_plus == std::vector<Weight>{{0, 1, -1}});
    CHECK(j1.complex_pairs.size() == 1);

    PairSpec p22 = make_upq(2, 2);
    auto orbits22 = catalog(p22);
    RootClassification q0 = classify_roots(p22, orbits22[0], weyl_identity(4));
    CHECK(q0.nci_plus.size() == 4);
    CHECK(q0.ci_plus.size() == 2);
}

TEST_CASE("upq delta matches the closed form at every base point") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        PairSpec pair = make_upq(p, q);
        for (const auto& orbit : catalog(pair)) {
            HxCharacter got =
                delta_character(pair, orbit, weyl_identity(pair.g.rank()));
            CHECK(got == expected_upq_delta(pair, orbit));
        }
    }
}

TEST_CASE("upq sign identity with the explicit orientation count") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
        PairSpec pair = make_upq(p, q);
        int n = p + q;
        for (const auto& orbit : catalog(pair)) {
            int j = orbit.base_id;
            for (const auto& w : weyl_enumerate(pair.g)) {
                SignExponents se = sign_exponents(pair, orbit, w);
                Polarization pol = polarization(pair, orbit, w);
                WeylElement winv = weyl_inverse(w);
                Int ordered = 0;
                for (int k = 0; k < j; ++k) {
                    int a = p - j + 2 * k;
                    if (winv.perm[a] < winv.perm[a + 1]) ++ordered;
                }
                Int d = static_cast<Int>(pol.nci_kept.size()) + ordered;
                int lhs = static_cast<int>((se.n + se.k) % 2);
                int rhs = static_cast<int>(
                    (j * (n + 1) + (weyl_sign(w) < 0 ? 1 : 0) + d) % 2);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("polarization splits and flip sums") {
    PairSpec pair = make_upq(1, 1);
    auto orbits = catalog(pair);
    WeylElement id = weyl_identity(2);

    Polarization base = polarization(pair, orbits[0], id);
    CHECK(base.nci_flipped.empty());
    CHECK(weight_is_zero(base.nci_flip_sum));
    CHECK(weight_is_zero(base.ci_flip_sum));
    CHECK(weight_is_zero(base.flip_sum));
    CHECK(base.ci_flip_count == 0);

    Polarization swapped = polarization(pair, orbits[0], transposition(2, 0, 1));
    CHECK(swapped.nci_kept.empty());
    CHECK(swapped.nci_flipped == std::vector<Weight>{{1, -1}});
    CHECK(swapped.nci_flip_sum == Weight{1, -1});
}

TEST_CASE("structural sweeps: parity, transport, delta shift, imaginary counts") {
    for (const char* name : {"su2-torus", "diag:su2", "diag:u2", "upq:2,1", "upq:2,2"}) {
        PairSpec pair = parse_pair(name);
        auto orbits = catalog(pair);
        CHECK(check_parity(pair, orbits).ok);
        CHECK(check_det_transport(pair, orbits).ok);
        CHECK(check_wedge_transport(pair, orbits).ok);
        CHECK(check_delta_shift(pair, orbits).ok);
        CHECK(check_imaginary_counts(pair, orbits).ok);
    }
}

TEST_CASE("classification at any Weyl element keeps imaginary status, moves positivity") {
    PairSpec pair = make_upq(2, 1);
    auto orbits = catalog(pair);
    for (const auto& w : weyl_enumerate(pair.g)) {
        RootClassification rc = classify_roots(pair, orbits[0], w);
        // every root in exactly one family
        size_t covered = rc.ci_plus.size() + rc.nci_plus.size() + rc.real_plus.size() +
                         2 * rc.complex_pairs.size() + rc.complex_split.size();
        CHECK(covered == pair.g.positive_roots().size());
        for (const auto& a : rc.nci_plus) CHECK(orbits[0].theta_apply(a) == a);
        for (const auto& a : rc.ci_plus) CHECK(orbits[0].theta_apply(a) == a);
    }
}
