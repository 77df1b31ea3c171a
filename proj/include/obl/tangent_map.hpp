#pragma once

#include "obl/geometry.hpp"

#include <memory>
#include <numeric>
#include <optional>
#include <vector>

namespace obl {

struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class Termination { period_found, max_iter, singular_hit };

struct OrbitRecord {
    Point start;
    std::vector<std::pair<double, double>> points; // snapshots, when requested
    std::vector<int> corner_indices;               // support vertex per application
    std::vector<int> step_sequence;                // first differences mod N (cyclic word when periodic)
    std::optional<long long> period;
    Termination termination = Termination::max_iter;
};

struct PinwheelDisplacement {
    int vector_index = 1; // 1-based, V_i = 2*(v_i - v_(i+floor(N/2)))
    int sign = 1;
    long long multiplicity = 0;
};

enum class StepStatus { ok, interior, singular };

// The outer billiards (tangent) map for a clockwise convex polygon.
// Support lookup runs in doubles and falls back to full precision whenever
// the winning margin is small, so points near the singular set are resolved
// exactly while bulk orbit iteration stays fast.
class TangentMap {
  public:
    explicit TangentMap(ConvexPolygon P);

    const ConvexPolygon& polygon() const { return P_; }
    int sides() const { return P_.size(); }

    int support_vertex(const Point& p) const; // throws SingularPoint / InteriorPoint
    StepStatus try_support_vertex(const Point& p, int& index) const;

    Point tau(const Point& p) const;          // throws on domain errors
    Point tau_inverse(const Point& p) const;  // Tr . tau_{Tr(P)} . Tr

    // One forward step in place; `corner` receives the support index.
    StepStatus step(Point& p, int& corner) const;
    StepStatus step_inverse(Point& p, int& corner) const;

    OrbitRecord iterate_orbit(const Point& start, long long max_iter,
                              bool record_points = false) const;

    PinwheelDisplacement return_displacement(const Point& p) const;
    // Runs tau^2 while the displacement stays on one +-V_i, accumulating the
    // multiplicity (the pinwheel-accelerated step).
    PinwheelDisplacement accelerated_displacement(const Point& p, long long max_returns = 64) const;
    PinwheelDisplacement decompose_displacement(const Point& d) const;

    const TangentMap& reflected() const;

  private:
    StepStatus support_exact(const Point& p, int& index) const;
    bool support_fast(double px, double py, int& index) const;

    ConvexPolygon P_;
    std::vector<Point> twice_verts_;
    std::vector<std::pair<double, double>> verts_d_;
    Real domain_scale_;
    mutable std::shared_ptr<const TangentMap> reflected_;
};

// (1/N) * mean step; exact as a fraction when the sequence is one period.
Fraction winding_number(const std::vector<int>& step_sequence, int n);
Real winding_number_real(const std::vector<int>& step_sequence, int n);

} // namespace obl
