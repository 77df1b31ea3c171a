#pragma once

#include "obl/errors.hpp"
#include "obl/real.hpp"

#include <optional>
#include <vector>

namespace obl {

struct Point {
    Real x, y;

    Point() : x(0), y(0) {}
    Point(Real px, Real py) : x(std::move(px)), y(std::move(py)) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Real& s) const { return {x * s, y * s}; }
    Point operator-() const { return {-x, -y}; }
};

inline Real dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Real cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Real norm2(const Point& p) { return p.x * p.x + p.y * p.y; }
inline Real norm(const Point& p) { return sqrt(norm2(p)); }
inline Real dist(const Point& a, const Point& b) { return norm(a - b); }
inline bool near(const Point& a, const Point& b) {
    return precision::near(a.x, b.x) && precision::near(a.y, b.y);
}
inline bool near(const Point& a, const Point& b, const Real& scale) {
    return precision::near(a.x, b.x, scale) && precision::near(a.y, b.y, scale);
}

Point reflect_y(const Point& p);
Point rotate(const Point& p, const Real& angle);

// A straight path: full line, or a ray from `origin` along `dir`.
// Open rays exclude the origin itself (the web's edge extensions are open).
struct Line {
    enum class Kind { line, ray, open_ray };
    Point origin;
    Point dir;
    Kind kind = Kind::line;

    static Line through(const Point& a, const Point& b) { return {a, b - a, Kind::line}; }
    static Line ray(const Point& from, const Point& d, bool open = false) {
        return {from, d, open ? Kind::open_ray : Kind::ray};
    }
};

// Intersection honoring ray bounds; std::nullopt when parallel or outside a
// ray's reach. Coincident lines raise DegenerateIntersection.
std::optional<Point> line_intersection(const Line& a, const Line& b);

enum class PointLocation { interior, boundary, exterior };

class ConvexPolygon {
  public:
    // Vertices in clockwise order (counterclockwise input is reversed).
    // Throws InvalidPolygon unless strictly convex with n >= 3.
    explicit ConvexPolygon(std::vector<Point> vertices);

    int size() const { return static_cast<int>(verts_.size()); }
    const Point& vertex(int i) const { return verts_[wrap(i)]; }
    const std::vector<Point>& vertices() const { return verts_; }

    // Edge i runs from vertex i to vertex i+1 (clockwise).
    Point edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
    // Forward extension: open ray past the head of edge i.
    Line forward_ray(int i) const;
    // Trailing extension: open ray past the tail of edge i.
    Line trailing_ray(int i) const;

    PointLocation locate(const Point& p) const;

    Point centroid() const;
    const Real& circumradius() const { return radius_; } // max |v - centroid|

    int wrap(int i) const {
        int n = size();
        i %= n;
        return i < 0 ? i + n : i;
    }

  private:
    std::vector<Point> verts_;
    Real radius_;
};

ConvexPolygon reflect_y(const ConvexPolygon& P);

enum class ParityClass { odd, twice_odd, twice_even };
ParityClass parity_class(int n);

struct RegularNGonSpec {
    int n = 5;
    Real radius = Real(1);
    Point center = Point(Real(0), Real(0));
};

// Canonical placement: n odd has a vertex at (0, radius) and a horizontal
// bottom edge at y = -radius*cos(pi/n); n even has the bottom edge horizontal
// and the polygon symmetric about the y-axis. n = 4 is placed vertex-up (the
// diamond), the lattice square convention everything downstream expects.
ConvexPolygon make_regular_ngon(const RegularNGonSpec& spec);
ConvexPolygon make_regular_ngon(int n, const Real& radius = Real(1));

// Side length of the canonical n-gon: 2*radius*sin(pi/n).
Real regular_side(int n, const Real& radius = Real(1));

} // namespace obl
