#include "obl/render_svg.hpp"

#include "obl/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace obl {

namespace {

std::string fixed8(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.8f", v);
    return buf;
}

} // namespace

std::string render_svg_string(const std::vector<RenderLayer>& layers, const RenderSpec& spec) {
    double w = spec.x1 - spec.x0, h = spec.y1 - spec.y0;
    if (w <= 0 || h <= 0) throw Error("render window must have positive area");
    int width = spec.width_px;
    int height = static_cast<int>(width * h / w);
    double sx = width / w;

    auto X = [&](double x) { return (x - spec.x0) * sx; };
    auto Y = [&](double y) { return (spec.y1 - y) * sx; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const RenderLayer& layer : layers) {
        double r = (layer.point_size > 0 ? layer.point_size : spec.point_size) / 2.0;
        for (const auto& poly : layer.polygons) {
            os << "<polygon fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"1\" points=\"";
            bool first = true;
            for (const auto& [x, y] : poly) {
                if (!first) os << ' ';
                first = false;
                os << fixed8(X(x)) << ',' << fixed8(Y(y));
            }
            os << "\"/>\n";
        }
        if (!layer.points.empty()) {
            // Dense web clouds repeat sub-pixel positions; collapse to a
            // 0.05 px grid so files stay bounded by the drawing area.
            std::unordered_set<long long> seen;
            os << "<g fill=\"" << layer.color << "\">\n";
            for (const auto& [x, y] : layer.points) {
                if (x < spec.x0 || x > spec.x1 || y < spec.y0 || y > spec.y1) continue;
                double px = X(x), py = Y(y);
                long long key = static_cast<long long>(px * 20) * 40'000'019 +
                                static_cast<long long>(py * 20);
                if (!seen.insert(key).second) continue;
                os << "<circle cx=\"" << fixed8(px) << "\" cy=\"" << fixed8(py)
                   << "\" r=\"" << fixed8(r) << "\"/>\n";
            }
            os << "</g>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void render_svg(const std::vector<RenderLayer>& layers, const RenderSpec& spec,
                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << render_svg_string(layers, spec);
    if (!out) throw IoError("failed writing " + path);
}

} // namespace obl
