#pragma once

#include "obl/tangent_map.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace obl {

using Word = std::vector<int>;

struct SubstitutionRule {
    std::map<int, Word> images;

    // sigma: 1 -> {1,2,1,2,1,1,1}, 2 -> {1,1,1} (the pentagon generation rule)
    static SubstitutionRule pentagon();
    // Morse: 0 -> {0,1}, 1 -> {1,0}
    static SubstitutionRule morse();
};

Word substitution_apply(const SubstitutionRule& rule, const Word& word); // AlphabetError
Word substitution_power(const SubstitutionRule& rule, int symbol, int k); // sigma^k(symbol)

// Some power sigma^k (k <= max_power) of every symbol contains every symbol.
bool is_primitive(const SubstitutionRule& rule, int max_power = 10);

// Prefix of the fixed point lim sigma^n(symbol); requires sigma(symbol) to
// start with symbol.
Word fixed_point_prefix(const SubstitutionRule& rule, int symbol, size_t length);

bool cyclically_equal(const Word& a, const Word& b);

struct OrbitWordReport {
    int generation = 0;
    long long period = 0;
    Word expected;  // sigma^(j-1)(1)
    Word simulated; // one step-word period of the orbit
    bool match = false;
    long long first_divergence = -1;
};

// Pentagon check: the D[j] center orbit's step word is a cyclic rotation of
// sigma^(j-1)(1), repeated five times over the full period.
OrbitWordReport verify_orbit_word(int generation, long long max_iter = 1'000'000);

struct WordStats {
    std::map<int, long long> tally;
    Real omega; // mean step / N
};

WordStats word_statistics(const Word& word, int n, size_t prefix_length);

struct ComplexityReport {
    std::vector<long long> counts; // distinct corner words per length 1..n
    double fitted_degree = 0;      // log-log slope, diagnostic only
    int samples_used = 0;
};

// Distinct corner words of lengths 1..word_length over orbits sampled from
// an annulus (deterministic RNG). A lower bound on the true complexity.
ComplexityReport empirical_complexity(const TangentMap& map, int word_length, int samples,
                                      double radius_lo, double radius_hi, std::uint64_t seed);

// Address resolution: nested generation cells. digits[i] is the bud index at
// level i (bud-1 at 3:00, numbered clockwise); a short digit list repeats
// cyclically. N odd starts from D[1]; N twice-odd starts from the generator.
// Returns the depth-level cell center.
Point address_to_point(int n, const Word& digits, int depth);

// Word wire format: comma-separated integers.
std::string word_to_csv(const Word& word);
Word word_from_csv(const std::string& text);

} // namespace obl
