#include "obl/digital_filter.hpp"

#include "obl/first_family.hpp"

#include <cmath>
#include <numeric>

namespace obl {

DfParams DfParams::from_rho(long p, long q) {
    if (p <= 0 || q <= 0) throw OutOfRange("twist must be positive");
    long g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (4 * p > q) throw OutOfRange("twist must lie in (0, 1/4]");
    DfParams params;
    params.rho = Real(p) / q;
    params.theta = 2 * precision::pi() * p / q;
    params.a = 2 * cos(params.theta);
    params.rational = {p, q};
    return params;
}

DfParams DfParams::from_a(const Real& a2cos) {
    if (a2cos <= 0 || a2cos >= 2) throw OutOfRange("a = 2cos(theta) must lie in (0, 2)");
    DfParams params;
    params.a = a2cos;
    params.theta = acos(a2cos / 2);
    params.rho = params.theta / (2 * precision::pi());
    return params;
}

namespace {

// f(z) = Mod[z+1, 2] - 1, half-open into [-1, 1).
Real sawtooth(const Real& z) {
    Real t = z + 1;
    Real m = t - 2 * floor(t / 2);
    return m - 1;
}

} // namespace

DfState df_map(const DfState& s, const DfParams& params) {
    return {s.y, sawtooth(-s.x + params.a * s.y)};
}

int atom_classify(const DfState& s, const DfParams& params) {
    Real t = -s.x + params.a * s.y;
    if (t >= 1) return 1;
    if (t >= -1) return 0;
    return -1;
}

Point rectify(const DfState& s, const DfParams& params) {
    Real sn = sin(params.theta);
    if (abs(sn) < precision::eps()) throw Degenerate("rectification undefined at theta = 0");
    Real u = s.x;
    Real v = (s.y - s.x * cos(params.theta)) / sn;
    return {-v, u}; // quarter turn into tangent-map orientation
}

DfState unrectify(const Point& p, const DfParams& params) {
    Real sn = sin(params.theta);
    if (abs(sn) < precision::eps()) throw Degenerate("rectification undefined at theta = 0");
    Real u = p.y, v = -p.x;
    return {u, v * sn + u * cos(params.theta)};
}

std::pair<int, int> rho_to_polygon(long p, long q) {
    long g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p <= 0 || 4 * p > q) throw OutOfRange("twist must lie in (0, 1/4]");
    if (q % 2 == 0) return {static_cast<int>(q), static_cast<int>(p)};
    return {static_cast<int>(2 * q), static_cast<int>(2 * p)};
}

DfWeb df_web(const DfParams& params, int levels, int samples_per_unit) {
    if (levels < 0) throw Error("df web needs levels >= 0");
    DfWeb web;
    web.levels = levels;

    auto scan = [&](const Real& x0, const Real& x1, int offset) {
        Real slope = 1 / params.a;
        Real seg_len = (x1 - x0) * sqrt(1 + slope * slope);
        long long count = std::max<long long>(
            2, static_cast<long long>(std::ceil(static_cast<double>(seg_len) * samples_per_unit)));
        for (long long i = 0; i < count; ++i) {
            Real t = (2 * Real(i) + 1) / (2 * Real(count));
            Real x = x0 + (x1 - x0) * t;
            DfState s{x, (x + offset) / params.a};
            ++web.seed_count;
            for (int level = 0; level <= levels; ++level) {
                Point r = rectify(s, params);
                web.df_points.push_back({static_cast<double>(s.x), static_cast<double>(s.y),
                                         level, atom_classify(s, params)});
                web.rectified.emplace_back(static_cast<double>(r.x), static_cast<double>(r.y));
                if (level < levels) s = df_map(s, params);
            }
        }
    };
    scan(Real(-1), params.a - 1, +1); // S1
    scan(1 - params.a, Real(1), -1);  // S2
    return web;
}

namespace {

int bridge_polygon_sides(const DfParams& params) {
    if (!params.rational) throw Error("the tangent bridge needs a rational twist");
    return rho_to_polygon(params.rational->first, params.rational->second).first;
}

} // namespace

Point tangent_from_df(const DfState& s, const DfParams& params) {
    int n = bridge_polygon_sides(params);
    Real scale = cos(precision::pi() / n); // apothem-1 central tile onto radius-1 canonical
    return rectify(s, params) * scale;
}

DfState df_from_tangent(const Point& p, const DfParams& params) {
    int n = bridge_polygon_sides(params);
    Real scale = cos(precision::pi() / n);
    return unrectify({p.x / scale, p.y / scale}, params);
}

Similarity fit_similarity(const std::vector<std::pair<Point, Point>>& pairs) {
    if (pairs.size() < 2) throw Error("similarity fit needs at least two pairs");
    // Complex least squares w = alpha z + beta.
    Real n(static_cast<long>(pairs.size()));
    Point zm(Real(0), Real(0)), wm(Real(0), Real(0));
    for (const auto& [z, w] : pairs) { zm = zm + z; wm = wm + w; }
    zm = zm * (1 / n);
    wm = wm * (1 / n);
    Real num_re(0), num_im(0), den(0);
    for (const auto& [z, w] : pairs) {
        Point dz = z - zm, dw = w - wm;
        num_re += dz.x * dw.x + dz.y * dw.y;  // Re(conj(dz) * dw)
        num_im += dz.x * dw.y - dz.y * dw.x;  // Im(conj(dz) * dw)
        den += norm2(dz);
    }
    if (den < precision::eps()) throw Error("degenerate similarity fit");
    Real are = num_re / den, aim = num_im / den;
    Similarity s;
    s.scale = sqrt(are * are + aim * aim);
    s.rotation = atan2(aim, are);
    s.translation = {wm.x - (are * zm.x - aim * zm.y), wm.y - (are * zm.y + aim * zm.x)};
    return s;
}

std::optional<long long> df_orbit_period(const DfState& start, const DfParams& params,
                                         long long max_iter) {
    Real tol = precision::eps() * 4;
    DfState s = start;
    for (long long k = 1; k <= max_iter; ++k) {
        s = df_map(s, params);
        if (abs(s.x - start.x) < tol && abs(s.y - start.y) < tol) return k;
    }
    return std::nullopt;
}

std::vector<DfCensusRow> df_period_census(int n_half) {
    if (n_half < 3) throw Error("census needs N >= 3");
    int n = 2 * n_half;
    DfParams params = DfParams::from_rho(1, n);
    auto family = first_family(n);

    std::vector<DfCensusRow> rows;
    for (const TileSpec& t : family) {
        if (t.kind != TileKind::S) continue;
        DfCensusRow row;
        row.k = t.index;
        DfState s = df_from_tangent(t.center, params);
        auto period = df_orbit_period(s, params, 4 * n);
        if (!period) throw ConsistencyError("S[k] center not Df-periodic");
        row.df_period = *period;
        row.star_tiles = *period == 2 ? 2LL * n_half : 2LL * *period * n_half;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const DfCensusRow& a, const DfCensusRow& b) {
        return a.k < b.k;
    });
    return rows;
}

namespace {

Cx unit_root(int num, int den) {
    Real a = precision::pi() * num / den;
    return {cos(a), sin(a)};
}

Cx cx_pow(const Cx& a, int k) {
    Cx r(Real(1), Real(0));
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

bool in_triangle(const Cx& z, const Cx& a, const Cx& b, const Cx& c) {
    auto side = [&](const Cx& p, const Cx& q) {
        return (q.re - p.re) * (z.im - p.im) - (q.im - p.im) * (z.re - p.re);
    };
    Real tol = precision::eps() * 8;
    Real s1 = side(a, b), s2 = side(b, c), s3 = side(c, a);
    bool nonneg = s1 >= -tol && s2 >= -tol && s3 >= -tol;
    bool nonpos = s1 <= tol && s2 <= tol && s3 <= tol;
    return nonneg || nonpos;
}

} // namespace

std::vector<std::vector<Cx>> goetz_atoms(GoetzVariant v) {
    if (v == GoetzVariant::pi5) {
        Cx a = unit_root(1, 5);
        Cx a2 = cx_pow(a, 2), a4 = cx_pow(a, 4), a6 = cx_pow(a, 6);
        Cx apex = a2 + a4 + a6;
        Cx zero, m1(Real(-1), Real(0));
        return {{zero, apex, m1}, {zero, m1, a6}};
    }
    Cx a = unit_root(1, 7);
    Cx a2 = cx_pow(a, 2), a3 = cx_pow(a, 3), a5 = cx_pow(a, 5);
    Cx zero, m1(Real(-1), Real(0));
    Cx v1 = a5 - Cx(Real(1), Real(0));
    Cx v2 = Cx(Real(0), Real(0)) - a3;
    return {{zero, v1, m1}, {zero, m1, v2}, {zero, v2, v2 + a2}};
}

int goetz_atom(GoetzVariant v, const Cx& z) {
    auto atoms = goetz_atoms(v);
    if (v == GoetzVariant::pi5) {
        // Dispatch by Im[z] inside the two-triangle domain.
        bool inside = in_triangle(z, atoms[0][0], atoms[0][1], atoms[0][2]) ||
                      in_triangle(z, atoms[1][0], atoms[1][1], atoms[1][2]);
        if (!inside) throw OutOfDomain("point outside the pi/5 triangles");
        return z.im > 0 ? 0 : 1;
    }
    for (int i = 0; i < 3; ++i)
        if (in_triangle(z, atoms[i][0], atoms[i][1], atoms[i][2])) return i;
    throw OutOfDomain("point outside the pi/7 triangles");
}

Cx goetz_map(GoetzVariant v, const Cx& z) {
    int atom = goetz_atom(v, z);
    if (v == GoetzVariant::pi5) {
        Cx a = unit_root(1, 5);
        Cx a2 = cx_pow(a, 2), a4 = cx_pow(a, 4), a6 = cx_pow(a, 6);
        if (atom == 0) return a4 * z + a2 + a4 + a6;
        return a6 * z + a6;
    }
    Cx a = unit_root(1, 7);
    Cx a3 = cx_pow(a, 3), a4 = cx_pow(a, 4), a5 = cx_pow(a, 5), a6 = cx_pow(a, 6);
    Cx one(Real(1), Real(0));
    switch (atom) {
        case 0: return z * a6 + a5 - one;
        case 1: return Cx(Real(0), Real(0)) - (a * z) - a4 + a5 - a6 - one;
        default: return z * a6 - a3;
    }
}

Cx goetz_pi5_fixed_point() {
    Cx a = unit_root(1, 5);
    Cx a2 = cx_pow(a, 2), a4 = cx_pow(a, 4), a6 = cx_pow(a, 6);
    Cx num = a2 + a4 + a6;
    Cx den = Cx(Real(1), Real(0)) - a4;
    Real d2 = den.re * den.re + den.im * den.im;
    return {(num.re * den.re + num.im * den.im) / d2, (num.im * den.re - num.re * den.im) / d2};
}

Real goetz_pi5_scale() {
    Real golden = (1 + sqrt(Real(5))) / 2;
    return 1 / golden;
}

Real goetz_pi5_dimension() { return -log(Real(2)) / log(goetz_pi5_scale()); }

Real goetz_pi7_nu() {
    Real s = sin(precision::pi() / 14);
    return 4 * s * s;
}

long long goetz_pi7_temporal_high(int n) {
    if (n < 0 || n > 30) throw Error("index out of the exact integer range");
    return ((1LL << (2 * n + 1)) + 1) / 3;
}

long long goetz_pi7_temporal_low(int n) {
    if (n < 0 || n > 30) throw Error("index out of the exact integer range");
    long long p = 1;
    for (int i = 0; i <= n; ++i) p *= 4;
    return (p - 1) / 3;
}

} // namespace obl
