#include "obl/geometry.hpp"

#include <algorithm>

namespace obl {

Point reflect_y(const Point& p) { return {-p.x, p.y}; }

Point rotate(const Point& p, const Real& angle) {
    Real c = cos(angle), s = sin(angle);
    return {p.x * c - p.y * s, p.x * s + p.y * c};
}

std::optional<Point> line_intersection(const Line& a, const Line& b) {
    const Real& e = precision::eps();
    Real den = cross(a.dir, b.dir);
    Real scale = norm(a.dir) * norm(b.dir);
    if (abs(den) < e * scale) {
        // Parallel. Coincident iff b.origin sits on a's line.
        Real off = cross(a.dir, b.origin - a.origin);
        if (abs(off) < e * (norm(a.dir) * (1 + norm(b.origin - a.origin))))
            throw DegenerateIntersection("coincident lines");
        return std::nullopt;
    }
    Point w = b.origin - a.origin;
    Real t = cross(w, b.dir) / den;
    Real u = cross(w, a.dir) / den;

    auto admits = [&](Line::Kind k, const Real& param) {
        switch (k) {
            case Line::Kind::line: return true;
            case Line::Kind::ray: return param >= -e;
            case Line::Kind::open_ray: return param > e;
        }
        return false;
    };
    if (!admits(a.kind, t) || !admits(b.kind, u)) return std::nullopt;
    return a.origin + a.dir * t;
}

namespace {

bool clockwise(const std::vector<Point>& v) {
    // Signed area: negative for clockwise.
    Real area(0);
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) area += cross(v[i], v[(i + 1) % n]);
    return area < 0;
}

} // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : verts_(std::move(vertices)), radius_(0) {
    int n = static_cast<int>(verts_.size());
    if (n < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
    if (!clockwise(verts_)) std::reverse(verts_.begin(), verts_.end());

    Real scale(0);
    for (const Point& p : verts_) scale = std::max(scale, norm(p));
    Real tol = precision::eps() * (1 + scale) * (1 + scale);
    for (int i = 0; i < n; ++i) {
        Point e0 = verts_[(i + 1) % n] - verts_[i];
        Point e1 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (cross(e0, e1) >= -tol) throw InvalidPolygon("vertices not strictly convex");
    }
    Point c = centroid();
    for (const Point& p : verts_) radius_ = std::max(radius_, dist(p, c));
}

Line ConvexPolygon::forward_ray(int i) const {
    return Line::ray(vertex(i + 1), edge_vector(i), /*open=*/true);
}

Line ConvexPolygon::trailing_ray(int i) const {
    return Line::ray(vertex(i), -edge_vector(i), /*open=*/true);
}

PointLocation ConvexPolygon::locate(const Point& p) const {
    int n = size();
    Real tol = precision::eps() * (1 + radius_);
    bool on_boundary = false;
    for (int i = 0; i < n; ++i) {
        Point e = edge_vector(i);
        Real c = cross(e, p - verts_[i]);
        Real edge_scale = norm(e) * (1 + dist(p, verts_[i]));
        if (c > tol * edge_scale) return PointLocation::exterior; // left of a clockwise edge
        if (abs(c) <= tol * edge_scale) {
            Real t = dot(p - verts_[i], e);
            if (t >= -tol && t <= norm2(e) + tol) on_boundary = true;
        }
    }
    return on_boundary ? PointLocation::boundary : PointLocation::interior;
}

Point ConvexPolygon::centroid() const {
    Real sx(0), sy(0);
    for (const Point& p : verts_) { sx += p.x; sy += p.y; }
    int n = size();
    return {sx / n, sy / n};
}

ConvexPolygon reflect_y(const ConvexPolygon& P) {
    std::vector<Point> v;
    v.reserve(P.size());
    for (const Point& p : P.vertices()) v.push_back(reflect_y(p));
    return ConvexPolygon(std::move(v)); // constructor restores clockwise order
}

ParityClass parity_class(int n) {
    if (n % 2 == 1) return ParityClass::odd;
    return (n / 2) % 2 == 1 ? ParityClass::twice_odd : ParityClass::twice_even;
}

ConvexPolygon make_regular_ngon(const RegularNGonSpec& spec) {
    int n = spec.n;
    if (n < 3) throw InvalidPolygon("regular n-gon needs n >= 3");
    if (spec.radius <= 0) throw InvalidPolygon("regular n-gon needs radius > 0");
    const Real& pi = precision::pi();
    std::vector<Point> v;
    v.reserve(n);
    bool vertex_up = (n % 2 == 1) || n == 4;
    for (int k = 0; k < n; ++k) {
        // Clockwise angle from the +y axis.
        Real a = vertex_up ? Real(2 * k) * pi / n : Real(2 * k + 1) * pi / n;
        v.emplace_back(spec.center.x + spec.radius * sin(a), spec.center.y + spec.radius * cos(a));
    }
    return ConvexPolygon(std::move(v));
}

ConvexPolygon make_regular_ngon(int n, const Real& radius) {
    RegularNGonSpec s;
    s.n = n;
    s.radius = radius;
    return make_regular_ngon(s);
}

Real regular_side(int n, const Real& radius) {
    return 2 * radius * sin(precision::pi() / n);
}

} // namespace obl
