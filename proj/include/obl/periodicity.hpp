#pragma once

#include "obl/first_family.hpp"
#include "obl/tangent_map.hpp"

#include <optional>
#include <vector>

namespace obl {

struct RingSpec {
    int n = 0;
    int ring = 0;
    long long tile_count = 0;
    std::vector<int> step_sequence;    // cyclic word of the ring's D centers
    std::vector<long long> periods;    // one per decomposed orbit
    bool decomposes = false;
    Fraction winding;
    Point seed;                 // corner D center of the ring
    std::vector<Point> centers; // full-precision orbit centers when simulated
};

// Predicted ring-k structure (counts N(2k+1) for N odd, N(k+1) for N even,
// step words {h}+k*{h,h+1} resp. {N/2-1}+k*{N/2}); with simulate=true the
// corner D center orbit is run and counts/steps/periods are verified.
// ConsistencyError on mismatch. Needs n >= 5.
RingSpec ring_structure(int n, int ring, bool simulate = false, long long max_iter = 10'000'000);

// Appendix D closed forms, valid for prime N: S[k] centers have period N and
// the D step-k tiles have period N(N-(k+2)) (M[1] = step-1, D[1] = step-2).
long long prime_family_period(int n, TileKind kind, int index);

// Pentagon period formulas: d[n] = (5/7)(8*6^(n-1) + (-1)^n) for the decagon
// chain and p[n] = (3 d[n] + 5 (-1)^(n-1))/2 for the pentagon chain.
std::pair<long long, long long> pentagon_periods(int n);

struct DecompositionCheck {
    bool decomposes = false;
    int factor_count = 1;
    std::optional<long long> simulated_period;
};

// S[k] orbits factor iff gcd(k, N) > 1, into gcd(k, N) groups. With
// simulate=true the S[k] center period is checked against N/gcd(k,N).
DecompositionCheck decomposition_check(int n, int k, bool simulate = false);

struct GenerationRow {
    int generation = 0;
    TileKind kind = TileKind::M_j;
    std::optional<long long> period; // empty when the orbit hit the budget
    std::optional<double> ratio;     // period[j] / period[j-1]
};

struct GenerationTable {
    int n = 0;
    std::vector<GenerationRow> m_rows;
    std::vector<GenerationRow> d_rows;
};

// Simulated periods of the GenStar chain centers M[j], D[j] (N odd). Rows
// whose orbits exceed `budget` iterations stay unresolved. Precision is
// escalated with depth so GenScale^j-sized tiles stay resolvable.
GenerationTable generation_table(int n, int depth, long long budget = 10'000'000);

// ln(growth_ratio) / ln(1/geometric_scale).
Real dimension_estimate(const Real& growth_ratio, const Real& geometric_scale);

// Period of a single point orbit; nullopt when max_iter or a singular line
// is reached first.
std::optional<long long> orbit_period(const TangentMap& map, const Point& p, long long max_iter);

// Off-center probe used by the period-doubling checks: center + r/10 toward
// 3:00, rotated in 1/16-turn increments until the orbit resolves.
std::optional<long long> off_center_period(const TangentMap& map, const TileSpec& tile,
                                           long long max_iter);

} // namespace obl
