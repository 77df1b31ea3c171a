#include "obl/symbolic.hpp"

#include "obl/first_family.hpp"

#include <doctest.h>

using namespace obl;

TEST_CASE("substitution basics") {
    auto sigma = SubstitutionRule::pentagon();
    CHECK(substitution_apply(sigma, {1}) == Word{1, 2, 1, 2, 1, 1, 1});
    CHECK(substitution_apply(sigma, {2}) == Word{1, 1, 1});
    CHECK(substitution_power(sigma, 1, 2).size() == 41);
    CHECK_THROWS_AS(substitution_apply(sigma, {3}), AlphabetError);

    CHECK(is_primitive(sigma));
    // sigma^2 of either symbol contains both symbols
    for (int s : {1, 2}) {
        Word w = substitution_power(sigma, s, 2);
        CHECK(std::count(w.begin(), w.end(), 1) > 0);
        CHECK(std::count(w.begin(), w.end(), 2) > 0);
    }
}

TEST_CASE("morse substitution") {
    auto morse = SubstitutionRule::morse();
    CHECK(fixed_point_prefix(morse, 0, 8) == Word{0, 1, 1, 0, 1, 0, 0, 1});
    CHECK(is_primitive(morse));
}

TEST_CASE("fixed point prefix property") {
    auto sigma = SubstitutionRule::pentagon();
    for (int k = 1; k <= 6; ++k) {
        Word wk = substitution_power(sigma, 1, k);
        Word wk1 = substitution_power(sigma, 1, k + 1);
        REQUIRE(wk1.size() >= wk.size());
        CHECK(std::equal(wk.begin(), wk.end(), wk1.begin()));
    }
}

TEST_CASE("orbit words match the substitution chain") {
    OrbitWordReport r1 = verify_orbit_word(1);
    CHECK(r1.period == 5);
    CHECK(r1.match);
    CHECK(r1.simulated == Word{1});

    OrbitWordReport r2 = verify_orbit_word(2);
    CHECK(r2.period == 35);
    CHECK(r2.match);
    CHECK(cyclically_equal(r2.simulated, Word{1, 2, 1, 2, 1, 1, 1}));

    OrbitWordReport r3 = verify_orbit_word(3);
    CHECK(r3.period == 205);
    CHECK(r3.match);
    CHECK(r3.simulated.size() == 41);
}

TEST_CASE("word statistics") {
    // constant word {3} over N=7 has winding 3/7 exactly
    Word w(1000, 3);
    WordStats s = word_statistics(w, 7, w.size());
    CHECK(precision::near(s.omega, Real(3) / 7));
    CHECK(s.tally.at(3) == 1000);

    auto sigma = SubstitutionRule::pentagon();
    Word u = fixed_point_prefix(sigma, 1, 100'000);
    WordStats us = word_statistics(u, 5, u.size());
    CHECK(abs(us.omega - Real("0.25")) < Real("0.01"));
}

TEST_CASE("no periodic pentagon orbit found at winding 1/4") {
    // supports the forbidden-winding claim on the tested set: every canonical
    // chain orbit through depth 3 has winding != 1/4
    TangentMap map(make_regular_ngon(5));
    auto chain = virtual_chain(5, 3);
    for (const TileSpec& t : chain) {
        if (t.kind == TileKind::M_j && t.index == 0) continue; // the generator itself
        OrbitRecord rec = map.iterate_orbit(t.center, 100'000);
        if (rec.termination != Termination::period_found) continue;
        Fraction w = winding_number(rec.step_sequence, 5);
        CHECK(!(w == Fraction(1, 4)));
    }
}

TEST_CASE("empirical complexity") {
    SUBCASE("length-1 words are exactly the N atoms") {
        for (int n : {5, 7}) {
            TangentMap map(make_regular_ngon(n));
            ComplexityReport rep = empirical_complexity(map, 1, 800, 1.5, 6.0, 99);
            REQUIRE(!rep.counts.empty());
            CHECK(rep.counts[0] == n);
        }
    }
    SUBCASE("diamond grows quadratically") {
        TangentMap map(make_regular_ngon(4));
        ComplexityReport rep = empirical_complexity(map, 12, 4000, 1.3, 9.0, 7);
        CHECK(rep.fitted_degree > 1.5);
        CHECK(rep.fitted_degree < 2.5);
    }
    SUBCASE("counts never decrease with word length") {
        TangentMap map(make_regular_ngon(5));
        ComplexityReport rep = empirical_complexity(map, 10, 1500, 1.5, 8.0, 21);
        for (size_t i = 1; i < rep.counts.size(); ++i) CHECK(rep.counts[i] >= rep.counts[i - 1]);
    }
}

TEST_CASE("addresses") {
    SUBCASE("depth 0 is the first cell center") {
        auto chain = virtual_chain(5, 1);
        const TileSpec* d1 = nullptr;
        for (const auto& t : chain)
            if (t.kind == TileKind::D_j && t.index == 1) d1 = &t;
        CHECK(near(address_to_point(5, {2, 5}, 0), d1->center, Real(5)));
    }
    SUBCASE("the pentagon limit address lands on the extended forward edge") {
        Point limit = address_to_point(5, {2, 5}, 40);
        Real edge_y = -cos(precision::pi() / 5);
        CHECK(abs(limit.y - edge_y) < Real("1e-20"));
        CHECK(limit.x < -regular_side(5) / 2); // on the open extension
    }
    SUBCASE("the N=14 limit address lands on the extended forward edge") {
        Point limit = address_to_point(14, {6, 3}, 40);
        CHECK(abs(limit.y + cos(precision::pi() / 14)) < Real("1e-20"));
        CHECK(limit.x < -regular_side(14) / 2);
    }
    SUBCASE("bad digits raise") {
        CHECK_THROWS_AS(address_to_point(5, {11}, 2), AddressError);
        CHECK_THROWS_AS(address_to_point(5, {0}, 1), AddressError);
    }
}
