#pragma once

#include "obl/tangent_map.hpp"

#include <vector>

namespace obl {

enum class QuasiKind { ring2, riffle, woven };

struct QuasiPolygon {
    QuasiKind kind = QuasiKind::ring2;
    ConvexPolygon poly;
    // Vertex index subsets of the embedded regular factors, in construction
    // order (ring2: A = corner factor first).
    std::vector<std::vector<int>> factor_indices;
    std::vector<Real> factor_radii;
    Real rho = Real(0);                     // riffle rotation parameter
    std::pair<Real, Real> woven_radii{Real(0), Real(0)};
};

// The quasi-regular polygon traced by one decomposed ring-2 orbit of D
// centers: n/2 corner tiles on the ring spokes plus the collinear chord
// positions between them, 3n/2 vertices in all, scaled so the corner factor
// A has radius 1 (B and C share a smaller radius). Odd n delegates to 2n.
QuasiPolygon ring2_polygon(int n);

// Riffle family: odd vertices of the regular n-gon interleaved with the even
// vertices rotated clockwise by rho * 2pi/n. rho = 0 is the regular n-gon,
// rho = 1 collapses onto the n/2-gon factor. Odd n delegates to 2n.
QuasiPolygon riffle_polygon(int n, const Real& rho);

// Two regular k-gons at radii r1 >= r2 interleaved half a step apart.
// ConvexityError outside the convexity window.
QuasiPolygon woven_polygon(int k, const Real& r1, const Real& r2);

struct FactorGraph {
    int n = 0;
    struct Entry {
        int d = 0;     // embedded regular d-gon
        int count = 0; // rotated copies
        std::vector<std::vector<int>> vertex_sets;
    };
    std::vector<Entry> entries;
};

// Embedded regular polygons sharing all vertices with the parent. Regular
// prime n-gons have none.
FactorGraph factor_graph(const ConvexPolygon& P);

struct ProbeResult {
    std::vector<double> max_radius_trace; // running max distance from centroid
    bool escaped = false;
    int escaped_seed = -1;
    long long singular_seeds = 0;
};

// Falsification probe, not a proof: iterates seeds under tau and flags any
// orbit whose radius passes ceiling_factor x polygon radius.
ProbeResult boundedness_probe(const ConvexPolygon& P, const std::vector<Point>& seeds,
                              long long iterations, double ceiling_factor = 100.0);

// Deterministic annulus seeds for the probes.
std::vector<Point> annulus_seeds(const ConvexPolygon& P, int count, double r_lo_factor,
                                 double r_hi_factor, std::uint64_t seed);

// Collapses runs of collinear vertices (used to reduce ring necklaces).
std::vector<Point> reduce_collinear(const std::vector<Point>& pts);

} // namespace obl
