#include "obl/quasi_regular.hpp"

#include "obl/first_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace obl {

namespace {

Point ring_corner(int n) {
    if (n == 4) return {Real(-2), Real(0)}; // lattice clone center of the diamond
    return d_center(n);
}

} // namespace

QuasiPolygon ring2_polygon(int n) {
    if (n < 4) throw Error("ring2 polygon needs n >= 4");
    if (n % 2 == 1) n *= 2;

    Point corner0 = ring_corner(n) * Real(3);
    std::vector<Point> corners;
    for (int i = 0; i < n; ++i)
        corners.push_back(rotate(corner0, -2 * precision::pi() * i / n));

    // Necklace of 3n positions: each spoke corner plus two chord thirds,
    // keeping alternate positions.
    std::vector<Point> verts;
    std::vector<std::vector<int>> factors(3);
    for (int m = 0; m < 3 * n; m += 2) {
        int spoke = m / 3, slot = m % 3;
        Point p = corners[spoke] +
                  (corners[(spoke + 1) % n] - corners[spoke]) * (Real(slot) / 3);
        factors[slot].push_back(static_cast<int>(verts.size()));
        verts.push_back(p);
    }

    Real ra = norm(verts[factors[0].front()]);
    for (Point& p : verts) p = p * (1 / ra); // corner factor A scaled to radius 1

    QuasiPolygon q{QuasiKind::ring2, ConvexPolygon(verts), {}, {}, Real(0), {Real(0), Real(0)}};
    // The constructor may have reversed the vertex order; remap indices.
    auto find_index = [&](const Point& p) {
        for (int i = 0; i < q.poly.size(); ++i)
            if (near(q.poly.vertex(i), p)) return i;
        throw Error("ring2 vertex lost during normalization");
    };
    for (int slot = 0; slot < 3; ++slot) {
        std::vector<int> idx;
        for (int vi : factors[slot]) idx.push_back(find_index(verts[vi]));
        q.factor_indices.push_back(idx);
        q.factor_radii.push_back(norm(verts[factors[slot].front()]));
    }
    return q;
}

QuasiPolygon riffle_polygon(int n, const Real& rho) {
    if (n % 2 == 1) n *= 2;
    if (n < 4) throw Error("riffle polygon needs n >= 4");
    if (rho < 0 || rho > 1) throw Error("riffle rho must lie in [0, 1]");

    ConvexPolygon P = make_regular_ngon(n);
    std::vector<Point> A, B;
    for (int i = 0; i < n; ++i) (i % 2 == 0 ? A : B).push_back(P.vertex(i));

    if (abs(rho - 1) < precision::eps()) {
        QuasiPolygon q{QuasiKind::riffle, ConvexPolygon(A), {}, {}, rho, {Real(0), Real(0)}};
        std::vector<int> all(q.poly.size());
        for (int i = 0; i < q.poly.size(); ++i) all[i] = i;
        q.factor_indices.push_back(all);
        q.factor_radii.push_back(norm(q.poly.vertex(0)));
        return q;
    }

    Real angle = -rho * 2 * precision::pi() / n; // clockwise toward the A slots
    std::vector<Point> verts;
    std::vector<int> ia, ic;
    for (size_t i = 0; i < A.size(); ++i) {
        ia.push_back(static_cast<int>(verts.size()));
        verts.push_back(A[i]);
        ic.push_back(static_cast<int>(verts.size()));
        verts.push_back(rotate(B[i], angle));
    }
    QuasiPolygon q{QuasiKind::riffle, ConvexPolygon(verts), {ia, ic}, {}, rho,
                   {Real(0), Real(0)}};
    q.factor_radii.push_back(norm(verts[ia[0]]));
    q.factor_radii.push_back(norm(verts[ic[0]]));
    return q;
}

QuasiPolygon woven_polygon(int k, const Real& r1, const Real& r2) {
    if (k < 3) throw Error("woven polygon needs k >= 3");
    if (r2 <= 0 || r1 < r2) throw Error("woven polygon needs r1 >= r2 > 0");
    std::vector<Point> verts;
    std::vector<int> big, small;
    for (int j = 0; j < k; ++j) {
        Real a1 = -2 * precision::pi() * j / k;
        Real a2 = a1 - precision::pi() / k;
        big.push_back(static_cast<int>(verts.size()));
        verts.emplace_back(r1 * cos(a1), r1 * sin(a1));
        small.push_back(static_cast<int>(verts.size()));
        verts.emplace_back(r2 * cos(a2), r2 * sin(a2));
    }
    try {
        QuasiPolygon q{QuasiKind::woven, ConvexPolygon(verts), {big, small}, {r1, r2}, Real(0),
                       {r1, r2}};
        return q;
    } catch (const InvalidPolygon&) {
        throw ConvexityError("radius ratio outside the woven convexity window");
    }
}

namespace {

bool subset_regular(const ConvexPolygon& P, const std::vector<int>& idx) {
    if (idx.size() < 3) return false;
    Point c(Real(0), Real(0));
    for (int i : idx) c = c + P.vertex(i);
    c = c * (Real(1) / static_cast<long>(idx.size()));
    Real r0 = dist(P.vertex(idx[0]), c);
    Real side0 = dist(P.vertex(idx[0]), P.vertex(idx[1]));
    Real tol = precision::eps() * (1 + P.circumradius());
    for (size_t i = 0; i < idx.size(); ++i) {
        if (abs(dist(P.vertex(idx[i]), c) - r0) > tol) return false;
        Real side = dist(P.vertex(idx[i]), P.vertex(idx[(i + 1) % idx.size()]));
        if (abs(side - side0) > tol) return false;
    }
    return true;
}

} // namespace

FactorGraph factor_graph(const ConvexPolygon& P) {
    FactorGraph g;
    int n = P.size();
    g.n = n;
    for (int d = 3; d < n; ++d) {
        if (n % d != 0) continue;
        FactorGraph::Entry entry;
        entry.d = d;
        int step = n / d;
        for (int start = 0; start < step; ++start) {
            std::vector<int> idx;
            for (int j = 0; j < d; ++j) idx.push_back(start + j * step);
            if (subset_regular(P, idx)) {
                entry.vertex_sets.push_back(idx);
                ++entry.count;
            }
        }
        if (entry.count > 0) g.entries.push_back(entry);
    }
    return g;
}

ProbeResult boundedness_probe(const ConvexPolygon& P, const std::vector<Point>& seeds,
                              long long iterations, double ceiling_factor) {
    TangentMap map(P);
    Point c = P.centroid();
    Real ceiling = P.circumradius() * Real(ceiling_factor);

    ProbeResult result;
    double running_max = 0;
    for (size_t si = 0; si < seeds.size(); ++si) {
        Point p = seeds[si];
        for (long long k = 0; k < iterations; ++k) {
            int corner = -1;
            StepStatus st = map.step(p, corner);
            if (st != StepStatus::ok) {
                ++result.singular_seeds;
                break;
            }
            Real r = dist(p, c);
            double rd = static_cast<double>(r);
            if (rd > running_max) running_max = rd;
            if (r > ceiling) {
                result.escaped = true;
                result.escaped_seed = static_cast<int>(si);
                result.max_radius_trace.push_back(running_max);
                return result;
            }
        }
        result.max_radius_trace.push_back(running_max);
    }
    return result;
}

std::vector<Point> annulus_seeds(const ConvexPolygon& P, int count, double r_lo_factor,
                                 double r_hi_factor, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2 * 3.14159265358979323846);
    std::uniform_real_distribution<double> rad(r_lo_factor, r_hi_factor);
    double R = static_cast<double>(P.circumradius());
    Point c = P.centroid();
    std::vector<Point> seeds;
    seeds.reserve(count);
    for (int i = 0; i < count; ++i) {
        double a = ang(rng), r = rad(rng) * R;
        seeds.emplace_back(c.x + Real(r * std::cos(a)), c.y + Real(r * std::sin(a)));
    }
    return seeds;
}

std::vector<Point> reduce_collinear(const std::vector<Point>& pts) {
    size_t n = pts.size();
    if (n < 3) return pts;
    Real scale(0);
    for (const Point& p : pts) scale = std::max(scale, norm(p));
    Real tol = precision::eps() * (1 + scale) * (1 + scale);
    std::vector<Point> out;
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = pts[(i + n - 1) % n];
        const Point& cur = pts[i];
        const Point& next = pts[(i + 1) % n];
        if (abs(cross(cur - prev, next - cur)) > tol) out.push_back(cur);
    }
    return out;
}

} // namespace obl
