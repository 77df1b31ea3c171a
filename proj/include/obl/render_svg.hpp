#pragma once

#include <string>
#include <utility>
#include <vector>

namespace obl {

// Plot layers in paper convention: inverse web blue, forward web magenta,
// family outlines magenta.
struct RenderLayer {
    std::vector<std::pair<double, double>> points;
    std::vector<std::vector<std::pair<double, double>>> polygons;
    std::string color = "#000000";
    double point_size = 1.0;
};

struct RenderSpec {
    double x0 = -10, y0 = -10, x1 = 10, y1 = 10; // world window, positive area
    int width_px = 1000;
    double point_size = 1.0;
};

// Deterministic SVG: fixed 8-digit decimal formatting, no timestamps, points
// outside the window dropped. Identical inputs give identical bytes.
std::string render_svg_string(const std::vector<RenderLayer>& layers, const RenderSpec& spec);
void render_svg(const std::vector<RenderLayer>& layers, const RenderSpec& spec,
                const std::string& path); // IoError on unwritable path

} // namespace obl
