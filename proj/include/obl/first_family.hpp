#pragma once

#include "obl/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace obl {

struct StarPoint {
    int k = 1; // 1-based; star[1] is a vertex of the generator
    Point location;
};

struct ScaleTable {
    int n = 0;
    std::vector<Real> scales; // scales[0] is scale[1] = 1
    Real gen_scale;           // last geometric scale
    Point gen_star;
    // For twice-odd N the effective generation scale is the odd polygon's
    // GenScale[N/2]; both labels are kept.
    std::optional<Real> effective_gen_scale;

    const Real& scale(int k) const { return scales.at(k - 1); } // 1-based
    int count() const { return static_cast<int>(scales.size()); }
};

enum class TileKind { M, D, S, DS, LS, M_j, D_j };

std::string tile_kind_name(TileKind k);

struct TileSpec {
    TileKind kind = TileKind::S;
    int index = 0; // k of S[k]/DS[k]/LS[k], j of M[j]/D[j]; 0 for M and D
    Point center;
    Real radius;
    int sides = 0;
    bool mutation = false;
    bool is_virtual = false;
    std::optional<long long> expected_period;
    // Mutated woven tiles carry the two constituent radii (larger first).
    std::optional<std::pair<Real, Real>> woven_radii;

    std::string name() const;
    // Vertex polygon in the canonical orientation (n-gons vertex-up,
    // 2n-gons edge-down), translated to `center`.
    ConvexPolygon polygon() const;
    Real apothem() const;
};

// Star points of the canonical radius-1 N-gon: intersections of extended
// trailing edges with the extended horizontal forward (bottom) edge,
// numbered from the vertex star[1] outward. floor(N/2) points for N odd,
// N/2 - 1 for N even.
std::vector<StarPoint> star_points(int n);

// Closed forms used for cross-validation: star[k] = (-cos(t)tan(kt), -cos(t))
// with t = pi/N, and for N odd the GenScale/GenStar forms
// (1 - cos(t))/cos(t) and (-cot(t)(1+cos(t)), -cos(t)).
Real star_point_x_closed_form(int n, int k);
Real gen_scale_closed_form_odd(int n);
Point gen_star_closed_form_odd(int n);

// Scales from the star points, cross-validated against the closed forms for
// N odd (ConsistencyError beyond tolerance).
ScaleTable scale_table(int n);

// The full First Family of the canonical radius-1 N-gon.
// N odd: S[1..floor(N/2)] (last = D) plus the DS chain of D, with the
// duplicate right-side D omitted and the tile shared with S[floor(N/2)-1]
// emitted once; floor(N/2) + N - 3 members.
// N even: S[1..N/2-1] (last = D_right) plus mirrored LS members around the
// central S[N/2-2]; N - 3 members including the generator.
std::vector<TileSpec> first_family(int n);

// Center of the canonical D tile (N odd: 2N-gon left of the generator at
// height +1; N even: generator clone at height 0).
Point d_center(int n);
Real d_radius(int n);

// GenStar chain tiles M[j], D[j] for N odd:
//   M[j]: radius GenScale^j, center (1 - GenScale^j) * GenStar
//   D[j]: radius rD * GenScale^j, center (1 - GenScale^j (2 + GenScale)) * GenStar
// j = 0, 1 coincide with real family tiles; deeper entries are flagged virtual.
std::vector<TileSpec> virtual_chain(int n, int depth);

struct ScaleIdentity {
    std::string name;
    Real lhs, rhs;
    Real residual;
};

struct ScaleEquivalenceReport {
    int n = 0;
    std::vector<ScaleIdentity> identities;
    Real max_residual;
};

// Verifies the N-even scale identities (twice-odd lemma and the twice-even
// square map) against the geometric tables. ConsistencyError when any
// residual exceeds tolerance.
ScaleEquivalenceReport scale_equivalences(int n);

long long euler_totient(long long n);
// Degree of the minimal polynomial of the vertex field: phi(N)/2.
long long algebraic_complexity(int n);

} // namespace obl
