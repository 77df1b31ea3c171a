#include "obl/periodicity.hpp"

#include <doctest.h>

using namespace obl;

TEST_CASE("prime family period formulas") {
    CHECK(prime_family_period(7, TileKind::M_j, 1) == 28);
    CHECK(prime_family_period(7, TileKind::D_j, 1) == 21);
    CHECK(prime_family_period(13, TileKind::M_j, 1) == 130);
    CHECK(prime_family_period(13, TileKind::D_j, 1) == 117);
    CHECK(prime_family_period(11, TileKind::S, 3) == 11);
    CHECK(prime_family_period(7, TileKind::DS, 3) == 14);
    CHECK_THROWS_AS(prime_family_period(9, TileKind::S, 1), UnsupportedComposite);
}

TEST_CASE("pentagon periods") {
    // oracle: first-order pair d_n = 3d + 2p, p_n = 6d + 2p with d1=5, p1=10
    long long d = 5, p = 10;
    for (int n = 1; n <= 12; ++n) {
        auto [dn, pn] = pentagon_periods(n);
        CHECK(dn == d);
        CHECK(pn == p);
        long long d_next = 3 * d + 2 * p, p_next = 6 * d + 2 * p;
        d = d_next;
        p = p_next;
    }
    CHECK(pentagon_periods(4) == std::pair<long long, long long>(1235, 1850));
    CHECK(pentagon_periods(10).first == 57586835);
    // second-order recurrence, exact integers up to n = 20
    for (int n = 3; n <= 20; ++n)
        CHECK(pentagon_periods(n).first ==
              5 * pentagon_periods(n - 1).first + 6 * pentagon_periods(n - 2).first);
}

TEST_CASE("ring structure") {
    SUBCASE("N=7 rings 0..2") {
        long long periods[] = {7, 21, 35};
        Fraction windings[] = {Fraction(3, 7), Fraction(10, 21), Fraction(17, 35)};
        for (int k = 0; k <= 2; ++k) {
            RingSpec spec = ring_structure(7, k, /*simulate=*/true);
            CHECK(spec.tile_count == periods[k]);
            REQUIRE(spec.periods.size() == 1);
            CHECK(spec.periods[0] == periods[k]);
            CHECK(spec.winding == windings[k]);
        }
    }
    SUBCASE("N=14 even rings decompose") {
        RingSpec r0 = ring_structure(14, 0, true);
        CHECK(r0.decomposes);
        CHECK(r0.periods == std::vector<long long>{7, 7});
        RingSpec r1 = ring_structure(14, 1, true);
        CHECK(!r1.decomposes);
        CHECK(r1.periods == std::vector<long long>{28});
        RingSpec r2 = ring_structure(14, 2, true);
        CHECK(r2.periods == std::vector<long long>{21, 21});
        CHECK(r2.step_sequence == std::vector<int>{6, 7, 7});
    }
    SUBCASE("N=16 rings never decompose") {
        for (int k = 0; k <= 2; ++k) {
            RingSpec spec = ring_structure(16, k, true);
            CHECK(!spec.decomposes);
            CHECK(spec.periods == std::vector<long long>{16 * (k + 1)});
        }
    }
    SUBCASE("ring winding increases toward 1/2") {
        double prev = 0;
        for (int k = 0; k <= 6; ++k) {
            RingSpec spec = ring_structure(7, k);
            double w = spec.winding.value();
            CHECK(w > prev);
            CHECK(w < 0.5);
            prev = w;
        }
        CHECK(prev > 0.49);
    }
}

TEST_CASE("decomposition check") {
    auto c93 = decomposition_check(9, 3, /*simulate=*/true);
    CHECK(c93.decomposes);
    CHECK(c93.factor_count == 3);
    CHECK(*c93.simulated_period == 3);

    for (int k = 1; k <= 3; ++k) {
        auto c = decomposition_check(7, k);
        CHECK(!c.decomposes);
        CHECK(c.factor_count == 1);
    }

    auto c164 = decomposition_check(16, 4, /*simulate=*/true);
    CHECK(c164.decomposes);
    CHECK(c164.factor_count == 4);
    CHECK(*c164.simulated_period == 4);
}

TEST_CASE("N=9 DS[3] factors into three period-12 groups") {
    auto fam = first_family(9);
    const TileSpec* ds3 = nullptr;
    for (const auto& t : fam)
        if (t.kind == TileKind::DS && t.index == 3) ds3 = &t;
    REQUIRE(ds3);
    CHECK(ds3->mutation);
    TangentMap map(make_regular_ngon(9));
    auto p = orbit_period(map, ds3->center, 10'000);
    REQUIRE(p);
    CHECK(*p == 12);           // prime period
    CHECK(3 * *p == 36);       // three groups make up the canonical 9(9-5)
}

TEST_CASE("generation table for N=7") {
    GenerationTable t = generation_table(7, 3, 100'000);
    REQUIRE(t.m_rows.size() == 3);
    CHECK(*t.m_rows[0].period == 28);
    CHECK(*t.m_rows[1].period == 98);
    CHECK(*t.m_rows[2].period == 2212);
    CHECK(*t.d_rows[0].period == 21);
    CHECK(*t.d_rows[1].period == 336);
    CHECK(*t.m_rows[1].ratio == doctest::Approx(3.5));
    // period-doubling alternation along the D chain: odd centers double,
    // even ones do not
    TangentMap map(make_regular_ngon(7));
    auto chain = virtual_chain(7, 2);
    for (const TileSpec& tile : chain) {
        if (tile.kind != TileKind::D_j || tile.index < 1) continue;
        auto center = orbit_period(map, tile.center, 100'000);
        auto off = off_center_period(map, tile, 100'000);
        REQUIRE(center);
        REQUIRE(off);
        if (*center % 2 == 1) CHECK(*off == 2 * *center);
        else CHECK(*off == *center);
    }
}

TEST_CASE("dimension estimator") {
    Real g5 = gen_scale_closed_form_odd(5);
    CHECK(abs(dimension_estimate(Real(6), g5) - Real("1.24114")) < Real("1e-5"));
    Real t8 = tan(precision::pi() / 8);
    CHECK(abs(dimension_estimate(Real(9), t8 * t8) - Real("1.24648")) < Real("1e-5"));
    CHECK_THROWS_AS(dimension_estimate(Real(1), g5), Error);
    CHECK_THROWS_AS(dimension_estimate(Real(6), Real(2)), Error);
}

TEST_CASE("propensity of even periods on canonical tiles") {
    struct Probe { int n; TileKind kind; int index; };
    Probe probes[] = {{7, TileKind::S, 1}, {7, TileKind::S, 2}, {7, TileKind::D, 0},
                      {9, TileKind::S, 3}, {11, TileKind::S, 2}};
    for (const Probe& pr : probes) {
        auto fam = first_family(pr.n);
        const TileSpec* tile = nullptr;
        for (const auto& t : fam)
            if (t.kind == pr.kind && t.index == pr.index) tile = &t;
        REQUIRE(tile);
        TangentMap map(make_regular_ngon(pr.n));
        auto center = orbit_period(map, tile->center, 100'000);
        auto off = off_center_period(map, *tile, 100'000);
        REQUIRE(center);
        REQUIRE(off);
        if (*center % 2 == 1) CHECK(*off == 2 * *center);
        else CHECK(*off == *center);
    }
}
