#include "obl/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace obl {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> ring_step_word(int n, int k) {
    std::vector<int> word;
    if (n % 2 == 1) {
        int h = n / 2;
        word.push_back(h);
        for (int i = 0; i < k; ++i) { word.push_back(h); word.push_back(h + 1); }
    } else {
        word.push_back(n / 2 - 1);
        for (int i = 0; i < k; ++i) word.push_back(n / 2);
    }
    return word;
}

bool cyclic_rotation_of(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<int> bb(b);
    bb.insert(bb.end(), b.begin(), b.end());
    return std::search(bb.begin(), bb.end(), a.begin(), a.end()) != bb.end();
}

} // namespace

RingSpec ring_structure(int n, int ring, bool simulate, long long max_iter) {
    if (n < 5) throw Error("ring structure needs n >= 5");
    if (ring < 0) throw Error("ring index must be >= 0");
    RingSpec spec;
    spec.n = n;
    spec.ring = ring;
    spec.step_sequence = ring_step_word(n, ring);
    bool odd = n % 2 == 1;
    spec.tile_count = odd ? static_cast<long long>(n) * (2 * ring + 1)
                          : static_cast<long long>(n) * (ring + 1);

    long long step_sum = 0;
    for (int s : spec.step_sequence) step_sum += s;
    long long g = std::gcd(step_sum % n, static_cast<long long>(n));
    spec.decomposes = g > 1;
    long long orbits = spec.decomposes ? g : 1;
    for (long long i = 0; i < orbits; ++i) spec.periods.push_back(spec.tile_count / orbits);
    spec.winding = winding_number(spec.step_sequence, n);

    Point cd = d_center(n);
    spec.seed = odd ? Point(cd.x * (2 * ring + 1), cd.y) : cd * Real(ring + 1);

    if (simulate) {
        (void)max_iter;
        TangentMap map(make_regular_ngon(n));
        std::set<std::pair<double, double>> seen;
        Point seed = spec.seed;
        Real scale = norm(seed) + 1;
        for (long long orbit = 0; orbit < orbits; ++orbit) {
            long long expected = spec.periods[orbit];
            Point p = seed;
            std::vector<int> corners;
            for (long long i = 0; i < expected; ++i) {
                if (i > 0 && near(p, seed, scale))
                    throw ConsistencyError("ring orbit closed early");
                spec.centers.push_back(p);
                seen.insert({std::round(static_cast<double>(p.x) * 1e9) / 1e9,
                             std::round(static_cast<double>(p.y) * 1e9) / 1e9});
                int c = -1;
                if (map.step(p, c) != StepStatus::ok)
                    throw ConsistencyError("ring orbit hit the singular set");
                corners.push_back(c);
            }
            if (!near(p, seed, scale))
                throw ConsistencyError("ring period mismatch for N=" + std::to_string(n) +
                                       " k=" + std::to_string(ring));
            std::vector<int> word;
            for (size_t i = 0; i + 1 < corners.size(); ++i)
                word.push_back(((corners[i + 1] - corners[i]) % n + n) % n);
            word.push_back(((corners.front() - corners.back()) % n + n) % n);
            std::vector<int> head(word.begin(),
                                  word.begin() + std::min(word.size(), spec.step_sequence.size()));
            if (!cyclic_rotation_of(head, spec.step_sequence))
                throw ConsistencyError("ring step sequence mismatch");
            // The twin orbit of a decomposed ring starts one vertex step over.
            seed = rotate(seed, -2 * precision::pi() / n);
        }
        if (static_cast<long long>(seen.size()) != spec.tile_count)
            throw ConsistencyError("ring tile count mismatch");
    }
    return spec;
}

long long prime_family_period(int n, TileKind kind, int index) {
    if (!is_prime(n)) throw UnsupportedComposite("period formulas hold for prime N only");
    switch (kind) {
        case TileKind::S:
        case TileKind::D:
            return n;
        case TileKind::DS:
            return static_cast<long long>(n) * (n - (index + 2));
        case TileKind::M_j:
            if (index == 1) return static_cast<long long>(n) * (n - 3);
            break;
        case TileKind::D_j:
            if (index == 1) return static_cast<long long>(n) * (n - 4);
            break;
        default:
            break;
    }
    throw Error("no closed-form period for this tile");
}

std::pair<long long, long long> pentagon_periods(int n) {
    if (n < 1 || n > 24) throw Error("pentagon period index out of the exact integer range");
    long long pow6 = 1;
    for (int i = 1; i < n; ++i) pow6 *= 6;
    long long sign = (n % 2 == 0) ? 1 : -1;
    long long numer = 8 * pow6 + sign;
    if (numer % 7 != 0) throw Error("pentagon period formula lost integrality");
    long long d = 5 * (numer / 7);
    long long p = (3 * d + 5 * (-sign)) / 2;
    return {d, p};
}

std::optional<long long> orbit_period(const TangentMap& map, const Point& p, long long max_iter) {
    OrbitRecord rec = map.iterate_orbit(p, max_iter);
    if (rec.termination != Termination::period_found) return std::nullopt;
    return rec.period;
}

std::optional<long long> off_center_period(const TangentMap& map, const TileSpec& tile,
                                           long long max_iter) {
    for (int turn = 0; turn < 16; ++turn) {
        Point offset = rotate(Point(tile.radius / 10, Real(0)),
                              turn * precision::pi() / 8);
        try {
            if (auto p = orbit_period(map, tile.center + offset, max_iter)) return p;
        } catch (const Error&) {
            // fell on a singular line; rotate the probe
        }
    }
    return std::nullopt;
}

DecompositionCheck decomposition_check(int n, int k, bool simulate) {
    if (k < 1 || k > n / 2) throw Error("step index out of range");
    DecompositionCheck chk;
    int g = std::gcd(k, n);
    chk.decomposes = g > 1;
    chk.factor_count = g;
    if (simulate) {
        auto family = first_family(n);
        const TileSpec* tile = nullptr;
        for (const TileSpec& t : family) {
            bool is_last = (n % 2 == 1) ? k == n / 2 : k == n / 2 - 1;
            if ((t.kind == TileKind::S && t.index == k) || (t.kind == TileKind::D && is_last))
                tile = &t;
        }
        if (!tile) throw Error("no S[k] tile for this step");
        TangentMap map(make_regular_ngon(n));
        auto p = orbit_period(map, tile->center, 1'000'000);
        if (!p) throw ConsistencyError("S[k] center orbit did not close");
        chk.simulated_period = *p;
        if (*p != n / g)
            throw ConsistencyError("decomposed period mismatch: got " + std::to_string(*p));
    }
    return chk;
}

GenerationTable generation_table(int n, int depth, long long budget) {
    if (n % 2 == 0) throw Error("generation table is defined for odd n");
    GenerationTable table;
    table.n = n;

    // GenScale^j shrinks roughly one digit per |log10 g| generations; keep a
    // safety floor well past the deepest tile.
    Real g = gen_scale_closed_form_odd(n);
    double digits_per_gen = -static_cast<double>(log10(g));
    unsigned needed = static_cast<unsigned>(10 + (depth + 2) * digits_per_gen) + 20;
    precision::Scoped guard(std::max(precision::digits(), needed));

    TangentMap map(make_regular_ngon(n));
    auto chain = virtual_chain(n, depth);

    auto run = [&](TileKind kind, std::vector<GenerationRow>& rows) {
        std::optional<long long> prev;
        for (int j = 1; j <= depth; ++j) {
            const TileSpec* tile = nullptr;
            for (const TileSpec& t : chain)
                if (t.kind == kind && t.index == j) tile = &t;
            GenerationRow row;
            row.generation = j;
            row.kind = kind;
            row.period = orbit_period(map, tile->center, budget);
            if (row.period && prev)
                row.ratio = static_cast<double>(*row.period) / static_cast<double>(*prev);
            prev = row.period;
            rows.push_back(row);
        }
    };
    run(TileKind::M_j, table.m_rows);
    run(TileKind::D_j, table.d_rows);
    return table;
}

Real dimension_estimate(const Real& growth_ratio, const Real& geometric_scale) {
    if (growth_ratio <= 1) throw Error("growth ratio must exceed 1");
    if (geometric_scale <= 0 || geometric_scale >= 1) throw Error("scale must lie in (0,1)");
    return log(growth_ratio) / log(1 / geometric_scale);
}

} // namespace obl
