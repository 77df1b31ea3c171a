#include "obl/first_family.hpp"

#include <algorithm>
#include <numeric>

namespace obl {

std::string tile_kind_name(TileKind k) {
    switch (k) {
        case TileKind::M: return "M";
        case TileKind::D: return "D";
        case TileKind::S: return "S";
        case TileKind::DS: return "DS";
        case TileKind::LS: return "LS";
        case TileKind::M_j: return "M[j]";
        case TileKind::D_j: return "D[j]";
    }
    return "?";
}

std::string TileSpec::name() const {
    switch (kind) {
        case TileKind::M: return "M";
        case TileKind::D: return "D";
        case TileKind::S: return "S[" + std::to_string(index) + "]";
        case TileKind::DS: return "DS[" + std::to_string(index) + "]";
        case TileKind::LS: return "LS[" + std::to_string(index) + "]";
        case TileKind::M_j: return "M[" + std::to_string(index) + "]";
        case TileKind::D_j: return "D[" + std::to_string(index) + "]";
    }
    return "?";
}

ConvexPolygon TileSpec::polygon() const {
    RegularNGonSpec spec;
    spec.n = sides;
    spec.radius = radius;
    spec.center = center;
    return make_regular_ngon(spec);
}

Real TileSpec::apothem() const { return radius * cos(precision::pi() / sides); }

namespace {

int star_count(int n) { return n % 2 == 1 ? n / 2 : n / 2 - 1; }

// Index of the horizontal bottom edge of the canonical n-gon.
int bottom_edge_index(int n) { return n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1; }

} // namespace

std::vector<StarPoint> star_points(int n) {
    if (n < 5) throw Error("star points need n >= 5");
    ConvexPolygon P = make_regular_ngon(n);
    int m = bottom_edge_index(n);
    Line forward = P.forward_ray(m);

    std::vector<StarPoint> pts;
    pts.push_back({1, P.vertex(m + 1)});
    for (int i = 0; i < n; ++i) {
        if (i == m) continue; // collinear with the forward edge
        std::optional<Point> hit;
        try {
            hit = line_intersection(P.trailing_ray(i), forward);
        } catch (const DegenerateIntersection&) {
            continue;
        }
        if (hit) pts.push_back({0, *hit});
    }
    std::sort(pts.begin(), pts.end(),
              [](const StarPoint& a, const StarPoint& b) { return a.location.x > b.location.x; });
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) pts[k].k = k + 1;

    if (static_cast<int>(pts.size()) != star_count(n))
        throw ConsistencyError("star point count does not match the Star Point Theorem for n = " +
                               std::to_string(n));
    return pts;
}

Real star_point_x_closed_form(int n, int k) {
    Real t = precision::pi() / n;
    return -cos(t) * tan(k * t);
}

Real gen_scale_closed_form_odd(int n) {
    Real c = cos(precision::pi() / n);
    return (1 - c) / c;
}

Point gen_star_closed_form_odd(int n) {
    Real t = precision::pi() / n;
    Real c = cos(t);
    return {-(c / sin(t)) * (1 + c), -c};
}

ScaleTable scale_table(int n) {
    ScaleTable table;
    table.n = n;
    Real s = regular_side(n);
    auto stars = star_points(n);
    for (const StarPoint& sp : stars) table.scales.push_back(s / (-2 * sp.location.x));
    table.gen_scale = table.scales.back();
    table.gen_star = stars.back().location;

    if (n % 2 == 1) {
        Real g = gen_scale_closed_form_odd(n);
        Point gs = gen_star_closed_form_odd(n);
        if (!precision::near(table.gen_scale, g) || !near(table.gen_star, gs))
            throw ConsistencyError("geometric and closed-form GenScale/GenStar disagree");
    } else if (parity_class(n) == ParityClass::twice_odd) {
        table.effective_gen_scale = gen_scale_closed_form_odd(n / 2);
    }
    return table;
}

Point d_center(int n) {
    auto stars = star_points(n);
    Real half_side = regular_side(n) / 2;
    Real x = stars.back().location.x - half_side;
    return {x, n % 2 == 1 ? Real(1) : Real(0)};
}

Real d_radius(int n) {
    if (n % 2 == 1) return regular_side(n) / (2 * sin(precision::pi() / (2 * n)));
    return Real(1); // the D tile is a clone of the generator
}

namespace {

// Family-line height over the bottom-edge extension: the S[k] centers sit on
// the line through star[1] with slope -tan(pi/n).
Real family_height(int n, const Real& star_x) {
    Real t = precision::pi() / n;
    return -cos(t) - tan(t) * star_x;
}

long long prime_ds_period(int n, int j) {
    // Canonical D step-j period N(N-(j+2)); valid for prime N.
    return static_cast<long long>(n) * (n - (j + 2));
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// The woven constituents of a mutated S[k]: the template radius (shared
// vertex with its right-hand neighbour) and the radius picked out by the
// facing vertex of the neighbouring DS tile on the left. Only the N = 9
// style hexagon pair is synthesized here.
std::optional<std::pair<Real, Real>> woven_radii_for(int n, int k, const Point& center,
                                                     const Real& radius,
                                                     const std::vector<TileSpec>& ds_members) {
    if (n % 2 == 0 || std::gcd(k, n) == 1) return std::nullopt;
    // Left neighbour on the D family line: DS[2k - 1].
    const TileSpec* left = nullptr;
    for (const TileSpec& t : ds_members)
        if (t.kind == TileKind::DS && t.index == 2 * k - 1) left = &t;
    if (!left) return std::nullopt;
    ConvexPolygon lp = left->polygon();
    Real best = -1;
    Real blue(0);
    for (const Point& v : lp.vertices()) {
        Real d = dist(v, center);
        if (best < 0 || d < best) { best = d; blue = d; }
    }
    if (best < 0) return std::nullopt;
    Real big = std::max(blue, radius), small = std::min(blue, radius);
    return std::make_pair(big, small);
}

} // namespace

std::vector<TileSpec> first_family(int n) {
    if (n < 5) throw Error("first family needs n >= 5");
    ScaleTable table = scale_table(n);
    auto stars = star_points(n);
    Real s = regular_side(n);
    Real half = s / 2;
    const Real& pi = precision::pi();
    bool odd = (n % 2 == 1);
    bool prime = is_prime(n);
    int K = table.count();

    std::vector<TileSpec> family;

    auto s_tile = [&](int k) {
        TileSpec t;
        t.kind = (k == K) ? TileKind::D : TileKind::S;
        t.index = (k == K) ? 0 : k;
        t.center = {stars[k - 1].location.x - half, family_height(n, stars[k - 1].location.x)};
        t.mutation = std::gcd(k, n) > 1;
        if (odd) {
            t.sides = 2 * n;
            t.radius = d_radius(n) * table.gen_scale / table.scale(k);
            if (prime) t.expected_period = n;
        } else {
            bool half_gon = (parity_class(n) == ParityClass::twice_odd) && (k % 2 == 1);
            if (half_gon) {
                t.sides = n / 2;
                Real r_central = Real(1) / (2 * cos(pi / n));
                t.radius = r_central * table.scale(n / 2 - 2) / table.scale(k);
            } else {
                t.sides = n;
                t.radius = table.gen_scale / table.scale(k);
            }
        }
        return t;
    };

    if (odd) {
        for (int k = 1; k <= K; ++k) family.push_back(s_tile(k));

        // D's own family along its star line from GenStar toward the origin.
        Point gen_star = table.gen_star;
        Real rd = d_radius(n);
        Real th = pi / (2 * n); // half the generator's angle step
        Point u(cos(th), sin(th));
        int shared = 2 * (K - 1); // DS[2(K-1)] is S[K-1]
        std::vector<TileSpec> ds;
        for (int j = 1; j <= n - 2; ++j) {
            if (j == shared) continue;
            TileSpec t;
            Real reach = rd * tan(j * th);
            t.center = gen_star + u * reach;
            if (j == n - 2) {
                t.kind = TileKind::M;
                t.index = 0;
                t.sides = n;
                t.radius = 1;
            } else if (j % 2 == 0) {
                t.kind = TileKind::DS;
                t.index = j;
                t.sides = 2 * n;
                t.radius = rd * tan(th) * tan(j * th);
                if (prime) t.expected_period = prime_ds_period(n, j);
            } else {
                t.kind = TileKind::DS;
                t.index = j;
                t.sides = n;
                t.radius = tan(pi / n) * tan(j * th);
                if (prime) t.expected_period = prime_ds_period(n, j);
            }
            t.mutation = std::gcd(j, n) > 1;
            ds.push_back(t);
        }
        for (TileSpec& t : family)
            if (t.kind == TileKind::S && t.mutation)
                t.woven_radii = woven_radii_for(n, t.index, t.center, t.radius, ds);
        family.insert(family.end(), ds.begin(), ds.end());
    } else {
        for (int k = 1; k <= K; ++k) family.push_back(s_tile(k));
        Point cd = d_center(n);
        int central = n / 2 - 2;
        for (int k = 1; k <= K; ++k) {
            if (k == central) continue; // its own mirror image
            TileSpec t = s_tile(k);
            // D's right-hand chain mirrors the generator's about the vertical
            // through the family midpoint; heights are preserved.
            t.center = {cd.x - t.center.x, t.center.y};
            if (k == K) {
                t.kind = TileKind::M; // the generator closes the mirrored chain
                t.index = 0;
            } else {
                t.kind = TileKind::LS;
                t.index = k;
            }
            family.push_back(t);
        }
    }
    return family;
}

std::vector<TileSpec> virtual_chain(int n, int depth) {
    if (n < 5 || n % 2 == 0) throw Error("virtual chain is defined for odd n >= 5");
    if (depth < 0) throw Error("virtual chain depth must be >= 0");
    ScaleTable table = scale_table(n);
    const Real& g = table.gen_scale;
    const Point& gs = table.gen_star;
    Real rd = d_radius(n);

    std::vector<TileSpec> chain;
    Real gj(1);
    for (int j = 0; j <= depth; ++j) {
        TileSpec m;
        m.kind = TileKind::M_j;
        m.index = j;
        m.sides = n;
        m.radius = gj;
        m.center = gs * (1 - gj);
        m.is_virtual = j >= 2;

        TileSpec d;
        d.kind = TileKind::D_j;
        d.index = j;
        d.sides = 2 * n;
        d.radius = rd * gj;
        d.center = gs * (1 - gj * (2 + g));
        d.is_virtual = j >= 2;

        chain.push_back(m);
        chain.push_back(d);
        gj *= g;
    }
    return chain;
}

ScaleEquivalenceReport scale_equivalences(int n) {
    if (n < 6 || n % 2 == 1) throw Error("scale equivalences apply to even n >= 6");
    ScaleTable t = scale_table(n);
    ScaleEquivalenceReport rep;
    rep.n = n;
    rep.max_residual = 0;

    auto add = [&](std::string name, const Real& lhs, const Real& rhs) {
        Real res = abs(lhs - rhs);
        rep.max_residual = std::max(rep.max_residual, res);
        rep.identities.push_back({std::move(name), lhs, rhs, res});
    };

    // Mirror symmetry of the scales: scale[k] * scale[N/2 - k] = GenScale[N].
    for (int k = 1; k <= n / 2 - 1; ++k) {
        int k2 = n / 2 - k;
        if (k2 < 1 || k2 > t.count()) continue;
        add("scale[" + std::to_string(k) + "]*scale[" + std::to_string(k2) + "]=GenScale",
            t.scale(k) * t.scale(k2), t.gen_scale);
    }

    if (parity_class(n) == ParityClass::twice_odd) {
        int half = n / 2;
        ScaleTable th = scale_table(half);
        Real gh = gen_scale_closed_form_odd(half);
        add("scale[k-2]=GenScale[k]", t.scale(half - 2), gh);
        // Odd scales map onto the half polygon's table:
        // GenScale[N/2] / scale[2m-1] = scale_half[floor(N/4) + 1 - m].
        for (int m = 1; m <= half / 2; ++m) {
            int lhs_idx = 2 * m - 1;
            int rhs_idx = half / 2 + 1 - m;
            if (lhs_idx > t.count() || rhs_idx < 1 || rhs_idx > th.count()) continue;
            add("GenScale[" + std::to_string(half) + "]/scale[" + std::to_string(lhs_idx) + "]",
                gh / t.scale(lhs_idx), th.scale(rhs_idx));
        }
    } else {
        add("GenScale=scale[N/4]^2", t.gen_scale, t.scale(n / 4) * t.scale(n / 4));
    }

    if (rep.max_residual > precision::eps())
        throw ConsistencyError("scale identity residual exceeds tolerance for n = " + std::to_string(n));
    return rep;
}

long long euler_totient(long long n) {
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long long algebraic_complexity(int n) {
    if (n < 3) throw Error("algebraic complexity needs n >= 3");
    long long phi = euler_totient(n);
    return phi == 1 ? 1 : phi / 2;
}

} // namespace obl
