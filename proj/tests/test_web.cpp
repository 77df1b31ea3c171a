#include "obl/first_family.hpp"
#include "obl/web.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace obl;

namespace {

bool point_inside_tile(double x, double y, const TileSpec& t, double shrink) {
    double cx = static_cast<double>(t.center.x), cy = static_cast<double>(t.center.y);
    double apo = static_cast<double>(t.apothem());
    double dx = x - cx, dy = y - cy;
    return std::sqrt(dx * dx + dy * dy) < apo * shrink;
}

} // namespace

TEST_CASE("level-0 sets") {
    ConvexPolygon diamond = make_regular_ngon(4);
    CHECK(level0_set(diamond, WebMode::forward).size() == 8); // 4 edges + 4 trailing rays
    CHECK(level0_set(diamond, WebMode::inverse).size() == 8);
    CHECK(level0_set(diamond, WebMode::combined).size() == 12);

    // trailing rays of N=7 meet the horizontal forward edge at the star points
    ConvexPolygon hept = make_regular_ngon(7);
    auto segs = level0_set(hept, WebMode::forward, Real(30));
    auto stars = star_points(7);
    Line forward = hept.forward_ray((7 - 1) / 2);
    int hits = 0;
    for (size_t i = 7; i < segs.size(); ++i) { // ray segments follow the edges
        Line ray = Line::ray(segs[i].a, segs[i].b - segs[i].a, true);
        try {
            if (auto p = line_intersection(ray, forward)) {
                for (const auto& sp : stars)
                    if (near(*p, sp.location, Real(10))) ++hits;
            }
        } catch (const DegenerateIntersection&) {
        }
    }
    CHECK(hits == 2); // star[2] and star[3]; star[1] is the shared vertex
}

TEST_CASE("web generation basics") {
    TangentMap map(make_regular_ngon(5));
    WebConfig config;
    config.levels = 0;
    config.samples_per_unit_length = 50;
    Web w0 = generate_web(map, config, WebMode::forward);
    CHECK(w0.survival_rate(0) == 1.0);
    // level 0 is exactly the sampled level-0 set
    for (const WebPoint& p : w0.points) CHECK(p.level == 0);

    config.levels = 8;
    Web w = generate_web(map, config, WebMode::forward);
    CHECK(w.seed_count == w0.seed_count);
    // monotone survival
    double prev = 1.0;
    for (int l = 0; l <= w.levels; ++l) {
        double s = w.survival_rate(l);
        CHECK(s <= prev + 1e-12);
        prev = s;
    }
    // nesting: points exist at every level up to the cap
    std::vector<int> counts(w.levels + 1, 0);
    for (const WebPoint& p : w.points) ++counts[p.level];
    CHECK(counts[0] > 0);
    CHECK(counts[w.levels] > 0);
}

TEST_CASE("mirror property: forward web = reflect_y(inverse web)") {
    TangentMap map(make_regular_ngon(5));
    WebConfig config;
    config.levels = 6;
    config.samples_per_unit_length = 120;
    config.extent = Real(8);
    Web fwd = generate_web(map, config, WebMode::forward);
    Web inv = generate_web(map, config, WebMode::inverse);

    // one-sided grid distance between fwd and mirrored inv
    double cell = 2.0 / config.samples_per_unit_length;
    auto key = [&](double x, double y) {
        return std::make_pair(static_cast<long long>(std::floor(x / cell)),
                              static_cast<long long>(std::floor(y / cell)));
    };
    std::set<std::pair<long long, long long>> grid;
    for (const WebPoint& p : inv.points) grid.insert(key(-p.x, p.y));
    int misses = 0;
    for (const WebPoint& p : fwd.points) {
        auto [ix, iy] = key(p.x, p.y);
        bool found = false;
        for (long long dx = -1; dx <= 1 && !found; ++dx)
            for (long long dy = -1; dy <= 1 && !found; ++dy)
                if (grid.count({ix + dx, iy + dy})) found = true;
        if (!found) ++misses;
    }
    CHECK(misses == 0);
}

TEST_CASE("first family emergence for N=7") {
    // after N-3 = 4 levels no web sample enters the inner-star tiles
    TangentMap map(make_regular_ngon(7));
    WebConfig config;
    config.levels = 8;
    config.samples_per_unit_length = 400;
    config.window = {{-5.0, -2.5, 1.0, 2.5}};
    Web w = generate_web(map, config, WebMode::combined);

    auto fam = first_family(7);
    for (const TileSpec& t : fam) {
        if (t.kind != TileKind::S && t.kind != TileKind::D) continue;
        for (const WebPoint& p : w.points) {
            if (p.level < 4) continue;
            CHECK(!point_inside_tile(p.x, p.y, t, 0.999));
        }
    }
}

TEST_CASE("N=11 S[1] and S[2] are stable 22-gons by level 11") {
    TangentMap map(make_regular_ngon(11));
    auto fam = first_family(11);
    const TileSpec* s1 = nullptr;
    const TileSpec* s2 = nullptr;
    for (const auto& t : fam) {
        if (t.kind == TileKind::S && t.index == 1) s1 = &t;
        if (t.kind == TileKind::S && t.index == 2) s2 = &t;
    }
    REQUIRE(s1);
    REQUIRE(s2);
    CHECK(s1->sides == 22);
    CHECK(s2->sides == 22);

    WebConfig config;
    config.levels = 11;
    config.samples_per_unit_length = 500;
    double x0 = static_cast<double>(s2->center.x) - 1.0;
    double x1 = static_cast<double>(s1->center.x) + 1.0;
    config.window = {{x0, -2.0, x1, 1.0}};
    Web w = generate_web(map, config, WebMode::combined);
    for (const WebPoint& p : w.points) {
        if (p.level < 11) continue;
        CHECK(!point_inside_tile(p.x, p.y, *s1, 0.999));
        CHECK(!point_inside_tile(p.x, p.y, *s2, 0.999));
    }
}

TEST_CASE("N=5 level-20 web leaves the ring of five D's intact") {
    TangentMap map(make_regular_ngon(5));
    WebConfig config;
    config.levels = 20;
    config.samples_per_unit_length = 150;
    config.window = {{-6.0, -6.0, 6.0, 6.0}};
    Web w = generate_web(map, config, WebMode::combined);

    Point cd = d_center(5);
    Real rd = d_radius(5);
    Real apo = rd * cos(precision::pi() / 10);
    for (int k = 0; k < 5; ++k) {
        Point c = rotate(cd, -2 * precision::pi() * k / 5);
        double cx = static_cast<double>(c.x), cy = static_cast<double>(c.y);
        double a = static_cast<double>(apo) * 0.999;
        for (const WebPoint& p : w.points) {
            double dx = p.x - cx, dy = p.y - cy;
            CHECK(dx * dx + dy * dy > a * a);
        }
    }
}

TEST_CASE("N=7 level-2N web respects every family tile interior") {
    TangentMap map(make_regular_ngon(7));
    WebConfig config;
    config.levels = 14;
    config.samples_per_unit_length = 250;
    config.window = {{-5.2, -3.0, 5.2, 3.0}};
    Web w = generate_web(map, config, WebMode::combined);
    auto fam = first_family(7);
    for (const TileSpec& t : fam) {
        if (t.kind == TileKind::M) continue; // the generator is not a web tile
        for (const WebPoint& p : w.points) CHECK(!point_inside_tile(p.x, p.y, t, 0.999));
    }
}

TEST_CASE("survival near D[1]: N=11 outlives N=5") {
    auto scan = [](int n) {
        TangentMap map(make_regular_ngon(n));
        auto chain = virtual_chain(n, 1);
        const TileSpec* d1 = nullptr;
        for (const auto& t : chain)
            if (t.kind == TileKind::D_j && t.index == 1) d1 = &t;
        double cx = static_cast<double>(d1->center.x), cy = static_cast<double>(d1->center.y);
        double r = static_cast<double>(d1->radius) * 2.5;
        WebConfig config;
        config.levels = 12;
        config.samples_per_unit_length = 40; // ~1e3 seeds at this density
        config.window = {{cx - r, cy - r, cx + r, cy + r}};
        Web w = generate_web(map, config, WebMode::inverse);
        return w.survival_rate(w.levels);
    };
    double s5 = scan(5), s11 = scan(11);
    CHECK(s11 > s5);
}
