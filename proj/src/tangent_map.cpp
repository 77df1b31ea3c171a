#include "obl/tangent_map.hpp"

#include <cmath>

namespace obl {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error("fraction with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

TangentMap::TangentMap(ConvexPolygon P) : P_(std::move(P)), domain_scale_(1) {
    twice_verts_.reserve(P_.size());
    verts_d_.reserve(P_.size());
    for (const Point& v : P_.vertices()) {
        twice_verts_.push_back({v.x * 2, v.y * 2});
        verts_d_.push_back({static_cast<double>(v.x), static_cast<double>(v.y)});
        domain_scale_ = std::max(domain_scale_, norm(v));
    }
}

// Double-precision support scan. Returns false when the margin between the
// winner and any rival direction is too thin to trust at double precision.
bool TangentMap::support_fast(double px, double py, int& index) const {
    constexpr double kMargin = 1e-9;
    const int n = static_cast<int>(verts_d_.size());

    // Clearly exterior?
    bool exterior = false;
    for (int i = 0; i < n; ++i) {
        const auto& a = verts_d_[i];
        const auto& b = verts_d_[(i + 1) % n];
        double ex = b.first - a.first, ey = b.second - a.second;
        double cx = px - a.first, cy = py - a.second;
        double c = ex * cy - ey * cx;
        double scale = std::sqrt((ex * ex + ey * ey) * (cx * cx + cy * cy));
        if (c > kMargin * scale) { exterior = true; break; }
    }
    if (!exterior) return false;

    int best = 0;
    double bx = verts_d_[0].first - px, by = verts_d_[0].second - py;
    for (int i = 1; i < n; ++i) {
        double vx = verts_d_[i].first - px, vy = verts_d_[i].second - py;
        if (bx * vy - by * vx > 0) { best = i; bx = vx; by = vy; }
    }
    double bn = std::sqrt(bx * bx + by * by);
    for (int i = 0; i < n; ++i) {
        if (i == best) continue;
        double vx = verts_d_[i].first - px, vy = verts_d_[i].second - py;
        double c = bx * vy - by * vx;
        double scale = bn * std::sqrt(vx * vx + vy * vy);
        if (!(c < -kMargin * scale)) return false; // rival too close to the support ray
    }
    index = best;
    return true;
}

namespace {

Real ray_distance(const Point& p, const Line& ray) {
    Real len2 = norm2(ray.dir);
    Real t = dot(p - ray.origin, ray.dir);
    if (t <= 0) return dist(p, ray.origin);
    return abs(cross(ray.dir, p - ray.origin)) / sqrt(len2);
}

} // namespace

StepStatus TangentMap::support_exact(const Point& p, int& index) const {
    switch (P_.locate(p)) {
        case PointLocation::interior: return StepStatus::interior;
        case PointLocation::boundary: return StepStatus::singular;
        case PointLocation::exterior: break;
    }
    const int n = P_.size();
    const Real tol = precision::eps();

    int best = 0;
    Point b = P_.vertex(0) - p;
    for (int i = 1; i < n; ++i) {
        Point v = P_.vertex(i) - p;
        if (cross(b, v) > tol * norm(b) * norm(v)) { best = i; b = v; }
    }
    // Tangency through a trailing extension is singular; no tie-break.
    Real dist_tol = tol * (1 + norm(p - P_.centroid()) + domain_scale_);
    if (ray_distance(p, P_.trailing_ray(best)) < dist_tol ||
        ray_distance(p, P_.trailing_ray(P_.wrap(best - 1))) < dist_tol)
        return StepStatus::singular;
    index = best;
    return StepStatus::ok;
}

StepStatus TangentMap::try_support_vertex(const Point& p, int& index) const {
    if (support_fast(static_cast<double>(p.x), static_cast<double>(p.y), index))
        return StepStatus::ok;
    return support_exact(p, index);
}

int TangentMap::support_vertex(const Point& p) const {
    int idx = -1;
    switch (try_support_vertex(p, idx)) {
        case StepStatus::ok: return idx;
        case StepStatus::interior: throw InteriorPoint("point inside the polygon");
        case StepStatus::singular: throw SingularPoint("point on the level-0 singular set");
    }
    throw Error("unreachable");
}

StepStatus TangentMap::step(Point& p, int& corner) const {
    int idx = -1;
    StepStatus st = try_support_vertex(p, idx);
    if (st != StepStatus::ok) return st;
    corner = idx;
    p.x = twice_verts_[idx].x - p.x;
    p.y = twice_verts_[idx].y - p.y;
    return StepStatus::ok;
}

StepStatus TangentMap::step_inverse(Point& p, int& corner) const {
    Point q = obl::reflect_y(p);
    StepStatus st = reflected().step(q, corner);
    if (st != StepStatus::ok) return st;
    p = obl::reflect_y(q);
    return StepStatus::ok;
}

Point TangentMap::tau(const Point& p) const {
    int idx = support_vertex(p);
    return {twice_verts_[idx].x - p.x, twice_verts_[idx].y - p.y};
}

Point TangentMap::tau_inverse(const Point& p) const {
    return obl::reflect_y(reflected().tau(obl::reflect_y(p)));
}

const TangentMap& TangentMap::reflected() const {
    if (!reflected_) reflected_ = std::make_shared<TangentMap>(obl::reflect_y(P_));
    return *reflected_;
}

OrbitRecord TangentMap::iterate_orbit(const Point& start, long long max_iter,
                                      bool record_points) const {
    OrbitRecord rec;
    rec.start = start;
    const int n = P_.size();
    Real tol = precision::eps() * (1 + norm(start) + domain_scale_);

    Point p = start;
    if (record_points)
        rec.points.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
    for (long long k = 0; k < max_iter; ++k) {
        int corner = -1;
        StepStatus st = step(p, corner);
        if (st == StepStatus::interior)
            throw InteriorPoint("orbit start inside the polygon");
        if (st == StepStatus::singular) {
            rec.termination = Termination::singular_hit;
            return rec;
        }
        rec.corner_indices.push_back(corner);
        if (record_points)
            rec.points.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
        if (rec.corner_indices.size() > 1) {
            int d = rec.corner_indices.end()[-1] - rec.corner_indices.end()[-2];
            rec.step_sequence.push_back(((d % n) + n) % n);
        }
        if (abs(p.x - start.x) < tol && abs(p.y - start.y) < tol) {
            rec.period = k + 1;
            rec.termination = Termination::period_found;
            // Close the cyclic step word.
            int d = rec.corner_indices.front() - rec.corner_indices.back();
            rec.step_sequence.push_back(((d % n) + n) % n);
            return rec;
        }
    }
    rec.termination = Termination::max_iter;
    return rec;
}

PinwheelDisplacement TangentMap::decompose_displacement(const Point& d) const {
    const int n = P_.size();
    const int h = n / 2;
    Real tol = precision::eps() * (1 + domain_scale_);
    if (abs(d.x) < tol && abs(d.y) < tol) return {1, 1, 0};

    for (int i = 0; i < n; ++i) {
        Point v = (P_.vertex(i) - P_.vertex((i + h) % n)) * Real(2);
        if (abs(cross(d, v)) > tol * norm(v) * (1 + norm(d))) continue;
        Real m = dot(d, v) / norm2(v);
        Real m_round = floor(m + Real(0.5));
        if (abs(m - m_round) > Real("1e-20")) continue;
        long long mult = static_cast<long long>(m_round);
        if (mult == 0) continue;
        int sign = mult > 0 ? 1 : -1;
        return {i + 1, sign, sign > 0 ? mult : -mult};
    }
    throw NoPinwheelForm("displacement is not an integer multiple of any +-V_i");
}

PinwheelDisplacement TangentMap::return_displacement(const Point& p) const {
    Point q = tau(tau(p));
    return decompose_displacement(q - p);
}

PinwheelDisplacement TangentMap::accelerated_displacement(const Point& p, long long max_returns) const {
    Point cur = p;
    PinwheelDisplacement total;
    for (long long k = 0; k < max_returns; ++k) {
        Point next = tau(tau(cur));
        PinwheelDisplacement one = decompose_displacement(next - cur);
        if (k == 0) {
            total = one;
        } else if (one.vector_index == total.vector_index && one.sign == total.sign) {
            total.multiplicity += one.multiplicity;
        } else {
            break;
        }
        cur = next;
    }
    return total;
}

Fraction winding_number(const std::vector<int>& step_sequence, int n) {
    if (step_sequence.empty()) throw Error("winding number of an empty sequence");
    long long sum = 0;
    for (int s : step_sequence) sum += s;
    return Fraction(sum, static_cast<long long>(step_sequence.size()) * n);
}

Real winding_number_real(const std::vector<int>& step_sequence, int n) {
    Fraction f = winding_number(step_sequence, n);
    return Real(f.num) / Real(f.den);
}

} // namespace obl
