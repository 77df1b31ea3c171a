#pragma once

#include "obl/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace obl {

// Twist parameter of the overflow map: theta = 2*pi*rho, a = 2 cos(theta).
// Rational rho = p/q must lie in (0, 1/4]; irrational twists are set through
// `a` directly.
struct DfParams {
    Real rho;
    Real theta;
    Real a;
    std::optional<std::pair<long, long>> rational; // reduced p/q when rational

    static DfParams from_rho(long p, long q); // OutOfRange outside (0, 1/4]
    static DfParams from_a(const Real& a2cos);
};

struct DfState {
    Real x, y;
};

// Df[{x,y}] = {y, f(-x + a y)} with the sawtooth f(z) = Mod[z+1,2]-1.
DfState df_map(const DfState& s, const DfParams& params);

// Overflow atom: 1 if -x+ay >= 1, 0 if -1 <= -x+ay < 1, -1 otherwise.
// Boundaries follow the printed inequalities exactly.
int atom_classify(const DfState& s, const DfParams& params);

// Conjugates the elliptical linear branch to a clockwise rotation by theta:
// (x, y) -> (x, (y - x cos)/sin), then a quarter turn to match tangent-map
// space. Throws Degenerate at theta = 0.
Point rectify(const DfState& s, const DfParams& params);
DfState unrectify(const Point& p, const DfParams& params);

// Polygon modeled by a rational twist p/q: (q, p) for q even, (2q, 2p) for
// q odd.
std::pair<int, int> rho_to_polygon(long p, long q);

struct DfWebPoint {
    double x, y;
    int level;
    int atom;
};

struct DfWeb {
    int levels = 0;
    int seed_count = 0;
    std::vector<DfWebPoint> df_points;
    std::vector<std::pair<double, double>> rectified; // same order as df_points
};

// Iterates sampled separatrices S1: y=(x+1)/a on [-1, a-1] and
// S2: y=(x-1)/a on [1-a, 1] under Df, with the rectified twin cloud.
DfWeb df_web(const DfParams& params, int levels, int samples_per_unit = 1000);

// Df <-> tangent-space bridge for a rational twist. The rectified central
// tile is the canonical polygon with apothem 1, so the similarity onto the
// canonical radius-1 polygon is a pure scaling by cos(pi/N).
Point tangent_from_df(const DfState& s, const DfParams& params);
DfState df_from_tangent(const Point& p, const DfParams& params);

// Least-squares similarity w = alpha z + beta through point pairs; used to
// validate the analytic bridge against fitted tile centers.
struct Similarity {
    Real scale, rotation; // |alpha|, arg(alpha)
    Point translation;
};
Similarity fit_similarity(const std::vector<std::pair<Point, Point>>& pairs);

std::optional<long long> df_orbit_period(const DfState& s, const DfParams& params,
                                         long long max_iter);

struct DfCensusRow {
    int k = 0;              // S[k] of the 2N-gon family
    long long df_period = 0;
    long long star_tiles = 0; // 2kN census (2N when the Df period is 2)
};

// Df periods of the First Family S[k] centers of the regular 2N-gon under
// theta = 2pi/(2N), with the 2kN tile census.
std::vector<DfCensusRow> df_period_census(int n_half);

// Goetz piecewise rotations on two (pi/5) and three (pi/7) triangles.
struct Cx {
    Real re, im;
    Cx() : re(0), im(0) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

enum class GoetzVariant { pi5, pi7 };

int goetz_atom(GoetzVariant v, const Cx& z);       // OutOfDomain outside the atoms
Cx goetz_map(GoetzVariant v, const Cx& z);
std::vector<std::vector<Cx>> goetz_atoms(GoetzVariant v); // triangle vertices

Cx goetz_pi5_fixed_point();   // center of H_0: (a^2+a^4+a^6)/(1-a^4)
Real goetz_pi5_scale();       // 1/golden ratio
Real goetz_pi5_dimension();   // -log 2 / log(scale)
Real goetz_pi7_nu();          // 4 sin^2(pi/14)
long long goetz_pi7_temporal_high(int n); // (2^(2n+1)+1)/3
long long goetz_pi7_temporal_low(int n);  // (4^(n+1)-1)/3

} // namespace obl
