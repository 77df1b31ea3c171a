#pragma once

#include "obl/tangent_map.hpp"

#include <array>
#include <optional>
#include <vector>

namespace obl {

enum class WebMode { forward, inverse, combined };

struct WebConfig {
    int levels = 10;
    int samples_per_unit_length = 1000;
    Real extent = 0; // ray truncation radius; 0 means 12 x polygon radius
    std::optional<std::array<double, 4>> window; // x0, y0, x1, y1 storage filter
};

struct WebSegment {
    Point a, b;
    bool open_a = false; // extension rays exclude the polygon vertex
};

// Level-0 set: edges plus open extension rays truncated at `extent`.
// forward: E u E^t, inverse: E u E^f, combined: both extension sets.
std::vector<WebSegment> level0_set(const ConvexPolygon& P, WebMode mode,
                                   const Real& extent = Real(0));

struct WebPoint {
    double x, y;
    int level;     // iteration that produced this point
    bool alive;    // seed survived past this level
    bool inverse_layer; // true when produced by the tau-iterated (inverse) scan
};

struct Web {
    WebMode mode = WebMode::forward;
    int levels = 0;
    int seed_count = 0;
    std::vector<WebPoint> points;
    std::vector<int> death_level; // per seed; levels+1 when never retired

    double survival_rate(int level) const;
};

// Iterates sampled level-0 points: the forward web drives E u E^t under
// tau^-1, the inverse web drives E u E^f under tau. Samples retire when they
// land on the singular set; only window contents are stored.
Web generate_web(const TangentMap& map, const WebConfig& config, WebMode mode);

} // namespace obl
