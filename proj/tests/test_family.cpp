#include "obl/first_family.hpp"
#include "obl/periodicity.hpp"

#include <doctest.h>

using namespace obl;

namespace {

const TileSpec& tile(const std::vector<TileSpec>& f, TileKind k, int idx) {
    for (const TileSpec& t : f)
        if (t.kind == k && t.index == idx) return t;
    REQUIRE(false);
    throw Error("unreachable");
}

} // namespace

TEST_CASE("star points") {
    CHECK(star_points(11).size() == 5);
    CHECK(star_points(16).size() == 7);
    CHECK(star_points(7).size() == 3);

    SUBCASE("strictly decreasing x, star[1] is a vertex") {
        for (int n : {7, 9, 14, 16, 22}) {
            auto pts = star_points(n);
            ConvexPolygon P = make_regular_ngon(n);
            bool is_vertex = false;
            for (const Point& v : P.vertices())
                if (near(v, pts[0].location)) is_vertex = true;
            CHECK(is_vertex);
            for (size_t i = 0; i + 1 < pts.size(); ++i)
                CHECK(pts[i].location.x > pts[i + 1].location.x);
        }
    }
    SUBCASE("N=7 GenStar against the closed form") {
        auto pts = star_points(7);
        // -cot(pi/7)(1 + cos(pi/7)), evaluated independently
        Real t = precision::pi() / 7;
        Real expected = -(cos(t) / sin(t)) * (1 + cos(t));
        CHECK(abs(expected + Real("3.9474")) < Real("5e-5"));
        CHECK(precision::near(pts.back().location.x, expected));
        // tan form of the same point
        CHECK(precision::near(pts.back().location.x, star_point_x_closed_form(7, 3)));
    }
    SUBCASE("geometric vs closed form across odd N") {
        for (int n = 5; n <= 31; n += 2) {
            auto pts = star_points(n);
            for (const auto& sp : pts)
                CHECK(precision::near(sp.location.x, star_point_x_closed_form(n, sp.k)));
        }
    }
}

TEST_CASE("scale tables") {
    SUBCASE("N=7 published values") {
        ScaleTable t = scale_table(7);
        CHECK(abs(t.scale(2) - Real("0.3840429")) < Real("5e-8"));
        // the published table truncates 0.10991626... to 0.1099162
        CHECK(abs(t.gen_scale - Real("0.1099162")) < Real("1e-7"));
        CHECK(precision::near(t.scale(1), Real(1)));
    }
    SUBCASE("N=5 gen scale from the odd closed form") {
        ScaleTable t = scale_table(5);
        Real expect = (1 - cos(precision::pi() / 5)) / cos(precision::pi() / 5);
        CHECK(precision::near(t.gen_scale, expect));
        CHECK(abs(t.gen_scale - Real("0.2360680")) < Real("5e-8"));
    }
    SUBCASE("scales decrease") {
        for (int n : {9, 11, 14, 16, 26}) {
            ScaleTable t = scale_table(n);
            for (int k = 1; k < t.count(); ++k) CHECK(t.scale(k) > t.scale(k + 1));
        }
    }
    SUBCASE("twice-odd tables carry the effective generation scale") {
        ScaleTable t = scale_table(14);
        REQUIRE(t.effective_gen_scale.has_value());
        CHECK(precision::near(*t.effective_gen_scale, gen_scale_closed_form_odd(7)));
        CHECK(precision::near(t.scale(5), gen_scale_closed_form_odd(7)));
    }
}

TEST_CASE("first family membership") {
    SUBCASE("counts") {
        CHECK(first_family(11).size() == 13); // drawn members, right-side D omitted
        CHECK(first_family(22).size() == 19);
        CHECK(first_family(7).size() == 7);
        CHECK(first_family(16).size() == 13);
    }
    SUBCASE("N=22 family is symmetric about S[9]") {
        auto fam = first_family(22);
        const TileSpec& central = tile(fam, TileKind::S, 9);
        Point cd = d_center(22);
        // mirror symmetry about the vertical through the family midpoint
        CHECK(precision::near(central.center.x * 2, cd.x, Real(10)));
        for (const TileSpec& t : fam) {
            if (t.kind != TileKind::LS) continue;
            const TileSpec& twin = tile(fam, TileKind::S, t.index);
            CHECK(precision::near(t.center.x + twin.center.x, cd.x, Real(10)));
            CHECK(precision::near(t.center.y, twin.center.y));
            CHECK(precision::near(t.radius, twin.radius));
        }
    }
    SUBCASE("N=9 mutation flags and the woven hexagon ratio") {
        auto fam = first_family(9);
        const TileSpec& s3 = tile(fam, TileKind::S, 3);
        CHECK(s3.mutation);
        REQUIRE(s3.woven_radii.has_value());
        Real ratio = s3.woven_radii->second / s3.woven_radii->first;
        CHECK(abs(ratio - Real("0.95418889")) < Real("5e-9"));
        CHECK(!tile(fam, TileKind::S, 1).mutation);
        CHECK(!tile(fam, TileKind::S, 2).mutation);
    }
    SUBCASE("no pairwise overlap (apothem circles)") {
        for (int n : {7, 9, 11, 14, 16, 22}) {
            auto fam = first_family(n);
            for (size_t i = 0; i < fam.size(); ++i)
                for (size_t j = i + 1; j < fam.size(); ++j) {
                    Real d = dist(fam[i].center, fam[j].center);
                    Real sum = fam[i].apothem() + fam[j].apothem();
                    CHECK(d >= sum - precision::eps() * 100);
                }
        }
    }
    SUBCASE("twice-odd congruence: N=14 contains a scaled N=7 family") {
        auto f7 = first_family(7);
        auto f14 = first_family(14);
        Real scale = Real(1) / (2 * cos(precision::pi() / 14)); // radius of the central 7-gon copy
        for (const TileSpec& t : f7) {
            bool matched = false;
            for (const TileSpec& u : f14)
                if (precision::near(u.radius, t.radius * scale)) matched = true;
            CHECK(matched);
        }
    }
    SUBCASE("prime families carry period formulas") {
        auto fam = first_family(11);
        for (const TileSpec& t : fam) {
            if (t.kind == TileKind::S) CHECK(*t.expected_period == 11);
            if (t.kind == TileKind::DS)
                CHECK(*t.expected_period == prime_family_period(11, TileKind::DS, t.index));
        }
        // composite families defer to simulation
        for (const TileSpec& t : first_family(9)) CHECK(!t.expected_period.has_value());
    }
}

TEST_CASE("virtual chain") {
    SUBCASE("M[0] sits at the origin") {
        auto chain = virtual_chain(7, 2);
        const TileSpec& m0 = tile(chain, TileKind::M_j, 0);
        CHECK(near(m0.center, Point(Real(0), Real(0))));
        CHECK(precision::near(m0.radius, Real(1)));
    }
    SUBCASE("D[0] lands on the mirrored real D") {
        for (int n : {5, 7, 13}) {
            auto chain = virtual_chain(n, 1);
            const TileSpec& d0 = tile(chain, TileKind::D_j, 0);
            Point expected = reflect_y(d_center(n));
            CHECK(near(d0.center, expected, Real(10)));
            CHECK(precision::near(d0.radius, d_radius(n)));
        }
        // N=7 numeric anchor: (4.38129, 1.0000) with the generator at height 1
        auto chain7 = virtual_chain(7, 0);
        const TileSpec& d0 = tile(chain7, TileKind::D_j, 0);
        CHECK(abs(d0.center.x - Real("4.38129")) < Real("1e-5"));
        CHECK(abs(d0.center.y - Real(1)) < Real("1e-12"));
    }
    SUBCASE("M[1] radius equals GenScale and coincides with DS[1]") {
        for (int n : {7, 13}) {
            auto chain = virtual_chain(n, 1);
            auto fam = first_family(n);
            const TileSpec& m1 = tile(chain, TileKind::M_j, 1);
            const TileSpec& ds1 = tile(fam, TileKind::DS, 1);
            CHECK(precision::near(m1.radius, scale_table(n).gen_scale));
            CHECK(near(m1.center, ds1.center, Real(10)));
            const TileSpec& d1 = tile(chain, TileKind::D_j, 1);
            const TileSpec& ds2 = tile(fam, TileKind::DS, 2);
            CHECK(near(d1.center, ds2.center, Real(10)));
            CHECK(precision::near(d1.radius, ds2.radius));
        }
    }
    SUBCASE("deep entries are flagged virtual") {
        auto chain = virtual_chain(7, 3);
        CHECK(!tile(chain, TileKind::D_j, 1).is_virtual);
        CHECK(tile(chain, TileKind::D_j, 2).is_virtual);
        CHECK(tile(chain, TileKind::M_j, 3).is_virtual);
    }
}

TEST_CASE("scale equivalences") {
    SUBCASE("N=14 maps onto N=7") {
        auto rep = scale_equivalences(14);
        CHECK(rep.max_residual < precision::eps());
    }
    SUBCASE("N=16 twice-even square identity") {
        auto rep = scale_equivalences(16);
        CHECK(rep.max_residual < precision::eps());
        ScaleTable t = scale_table(16);
        CHECK(abs(t.gen_scale - t.scale(4) * t.scale(4)) < Real("1e-40"));
    }
    SUBCASE("N=26 ratio identity") {
        ScaleTable t = scale_table(26);
        CHECK(abs(t.gen_scale / t.scale(4) - t.scale(9)) < Real("1e-40"));
        CHECK(scale_equivalences(26).max_residual < precision::eps());
    }
}

TEST_CASE("algebraic complexity") {
    CHECK(algebraic_complexity(3) == 1);
    CHECK(algebraic_complexity(11) == 5);
    CHECK(algebraic_complexity(16) == 4);
    CHECK(algebraic_complexity(7) == 3);
    CHECK(algebraic_complexity(13) == 6);
    CHECK(algebraic_complexity(15) == 4);
}

TEST_CASE("geometric and closed-form gen scales agree for odd N up to 31") {
    for (int n = 5; n <= 31; n += 2) {
        ScaleTable t = scale_table(n); // ConsistencyError on disagreement
        CHECK(precision::near(t.gen_scale, gen_scale_closed_form_odd(n)));
    }
}
