#include "obl/web.hpp"

#include <cmath>

namespace obl {

namespace {

Real effective_extent(const ConvexPolygon& P, const Real& extent) {
    if (extent > 0) {
        if (extent <= P.circumradius()) throw Error("web extent must exceed the polygon radius");
        return extent;
    }
    return P.circumradius() * 12;
}

void append_extensions(const ConvexPolygon& P, bool trailing, const Real& extent,
                       std::vector<WebSegment>& out) {
    for (int i = 0; i < P.size(); ++i) {
        Line ray = trailing ? P.trailing_ray(i) : P.forward_ray(i);
        Real len = norm(ray.dir);
        // Truncate where the ray leaves the extent disc.
        Real t_max = (extent + norm(ray.origin)) / len;
        out.push_back({ray.origin, ray.origin + ray.dir * t_max, /*open_a=*/true});
    }
}

} // namespace

std::vector<WebSegment> level0_set(const ConvexPolygon& P, WebMode mode, const Real& extent) {
    Real ext = effective_extent(P, extent);
    std::vector<WebSegment> segs;
    for (int i = 0; i < P.size(); ++i) segs.push_back({P.vertex(i), P.vertex(i + 1), false});
    if (mode == WebMode::forward || mode == WebMode::combined)
        append_extensions(P, /*trailing=*/true, ext, segs);
    if (mode == WebMode::inverse || mode == WebMode::combined)
        append_extensions(P, /*trailing=*/false, ext, segs);
    return segs;
}

double Web::survival_rate(int level) const {
    if (level > levels) throw Error("survival level exceeds web depth");
    if (death_level.empty()) return 1.0;
    long long alive = 0;
    for (int d : death_level)
        if (d > level) ++alive;
    return static_cast<double>(alive) / static_cast<double>(death_level.size());
}

namespace {

void scan_layer(const TangentMap& map, const WebConfig& config, bool inverse_layer,
                const Real& extent, Web& web) {
    const ConvexPolygon& P = map.polygon();
    auto segs = level0_set(P, inverse_layer ? WebMode::inverse : WebMode::forward, extent);

    double wx0 = -1e300, wy0 = -1e300, wx1 = 1e300, wy1 = 1e300;
    if (config.window) {
        wx0 = (*config.window)[0];
        wy0 = (*config.window)[1];
        wx1 = (*config.window)[2];
        wy1 = (*config.window)[3];
    }

    std::vector<WebPoint> buffer;
    for (const WebSegment& seg : segs) {
        Real len = dist(seg.a, seg.b);
        long long count = std::max<long long>(
            1, static_cast<long long>(std::ceil(static_cast<double>(len) *
                                                config.samples_per_unit_length)));
        for (long long i = 0; i < count; ++i) {
            // Midpoint samples keep open endpoints honest.
            Real t = (2 * Real(i) + 1) / (2 * Real(count));
            Point p = seg.a + (seg.b - seg.a) * t;
            buffer.clear();
            int death = config.levels + 1; // first level the seed failed to reach
            bool retired = false;
            for (int level = 0; level <= config.levels; ++level) {
                double px = static_cast<double>(p.x), py = static_cast<double>(p.y);
                if (px >= wx0 && px <= wx1 && py >= wy0 && py <= wy1)
                    buffer.push_back({px, py, level, true, inverse_layer});
                if (level == config.levels) break;
                int corner = -1;
                StepStatus st = inverse_layer ? map.step(p, corner) : map.step_inverse(p, corner);
                if (st != StepStatus::ok) {
                    death = level + 1;
                    retired = true;
                    break;
                }
            }
            if (retired && !buffer.empty() && buffer.back().level == death - 1)
                buffer.back().alive = false; // the sample that landed on the singular set
            web.points.insert(web.points.end(), buffer.begin(), buffer.end());
            web.death_level.push_back(death);
            ++web.seed_count;
        }
    }
}

} // namespace

Web generate_web(const TangentMap& map, const WebConfig& config, WebMode mode) {
    if (config.levels < 0) throw Error("web levels must be >= 0");
    if (config.samples_per_unit_length < 1) throw Error("sampling density must be positive");
    Real ext = effective_extent(map.polygon(), config.extent);

    Web web;
    web.mode = mode;
    web.levels = config.levels;
    if (mode == WebMode::forward || mode == WebMode::combined)
        scan_layer(map, config, /*inverse_layer=*/false, ext, web);
    if (mode == WebMode::inverse || mode == WebMode::combined)
        scan_layer(map, config, /*inverse_layer=*/true, ext, web);
    return web;
}

} // namespace obl
