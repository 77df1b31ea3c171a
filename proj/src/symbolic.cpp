#include "obl/symbolic.hpp"

#include "obl/first_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace obl {

SubstitutionRule SubstitutionRule::pentagon() {
    SubstitutionRule r;
    r.images[1] = {1, 2, 1, 2, 1, 1, 1};
    r.images[2] = {1, 1, 1};
    return r;
}

SubstitutionRule SubstitutionRule::morse() {
    SubstitutionRule r;
    r.images[0] = {0, 1};
    r.images[1] = {1, 0};
    return r;
}

Word substitution_apply(const SubstitutionRule& rule, const Word& word) {
    Word out;
    for (int s : word) {
        auto it = rule.images.find(s);
        if (it == rule.images.end())
            throw AlphabetError("symbol " + std::to_string(s) + " not in the alphabet");
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

Word substitution_power(const SubstitutionRule& rule, int symbol, int k) {
    if (rule.images.find(symbol) == rule.images.end())
        throw AlphabetError("symbol not in the alphabet");
    Word w{symbol};
    for (int i = 0; i < k; ++i) w = substitution_apply(rule, w);
    return w;
}

bool is_primitive(const SubstitutionRule& rule, int max_power) {
    for (const auto& [symbol, _] : rule.images) {
        bool covers = false;
        for (int k = 1; k <= max_power && !covers; ++k) {
            Word w = substitution_power(rule, symbol, k);
            std::set<int> present(w.begin(), w.end());
            covers = true;
            for (const auto& [other, __] : rule.images)
                if (!present.count(other)) covers = false;
        }
        if (!covers) return false;
    }
    return true;
}

Word fixed_point_prefix(const SubstitutionRule& rule, int symbol, size_t length) {
    Word w{symbol};
    if (substitution_apply(rule, w).front() != symbol)
        throw Error("sigma(symbol) does not start with symbol; no fixed point from here");
    while (w.size() < length) {
        Word next = substitution_apply(rule, w);
        if (next.size() == w.size()) throw Error("substitution does not grow");
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

bool cyclically_equal(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    Word bb(b);
    bb.insert(bb.end(), b.begin(), b.end());
    return std::search(bb.begin(), bb.end(), a.begin(), a.end()) != bb.end();
}

OrbitWordReport verify_orbit_word(int generation, long long max_iter) {
    if (generation < 1) throw Error("generation must be >= 1");
    OrbitWordReport rep;
    rep.generation = generation;
    rep.expected = substitution_power(SubstitutionRule::pentagon(), 1, generation - 1);

    auto chain = virtual_chain(5, generation);
    const TileSpec* dj = nullptr;
    for (const TileSpec& t : chain)
        if (t.kind == TileKind::D_j && t.index == generation) dj = &t;

    TangentMap map(make_regular_ngon(5));
    OrbitRecord rec = map.iterate_orbit(dj->center, max_iter);
    if (rec.termination != Termination::period_found)
        throw ConsistencyError("D[j] center orbit did not close");
    rep.period = *rec.period;

    size_t L = rep.expected.size();
    if (rec.step_sequence.size() != 5 * L) {
        rep.match = false;
        rep.first_divergence = 0;
        return rep;
    }
    rep.simulated.assign(rec.step_sequence.begin(), rec.step_sequence.begin() + L);
    rep.match = cyclically_equal(rep.simulated, rep.expected);
    if (rep.match) {
        // The full orbit word must be that window repeated five times.
        for (size_t i = 0; i < rec.step_sequence.size(); ++i) {
            if (rec.step_sequence[i] != rep.simulated[i % L]) {
                rep.match = false;
                rep.first_divergence = static_cast<long long>(i);
                break;
            }
        }
    } else {
        for (size_t i = 0; i < L; ++i)
            if (rep.simulated[i] != rep.expected[i]) { rep.first_divergence = i; break; }
    }
    if (!rep.match && rep.first_divergence >= 0)
        throw ConsistencyError("orbit word diverges from sigma^(j-1)(1) at index " +
                               std::to_string(rep.first_divergence));
    return rep;
}

WordStats word_statistics(const Word& word, int n, size_t prefix_length) {
    if (prefix_length > word.size()) throw Error("prefix exceeds available word length");
    WordStats stats;
    long long sum = 0;
    for (size_t i = 0; i < prefix_length; ++i) {
        ++stats.tally[word[i]];
        sum += word[i];
    }
    stats.omega = prefix_length ? Real(sum) / (Real(prefix_length) * n) : Real(0);
    return stats;
}

ComplexityReport empirical_complexity(const TangentMap& map, int word_length, int samples,
                                      double radius_lo, double radius_hi, std::uint64_t seed) {
    if (word_length < 1) throw Error("word length must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2 * 3.14159265358979323846);
    std::uniform_real_distribution<double> rad(radius_lo, radius_hi);

    std::vector<std::set<Word>> distinct(word_length);
    int used = 0;
    for (int i = 0; i < samples; ++i) {
        double a = ang(rng), r = rad(rng);
        Point p(Real(r * std::cos(a)), Real(r * std::sin(a)));
        Word word;
        bool ok = true;
        for (int k = 0; k < word_length; ++k) {
            int corner = -1;
            if (map.step(p, corner) != StepStatus::ok) { ok = false; break; }
            word.push_back(corner);
        }
        if (!ok) continue;
        ++used;
        Word prefix;
        for (int k = 0; k < word_length; ++k) {
            prefix.push_back(word[k]);
            distinct[k].insert(prefix);
        }
    }

    ComplexityReport rep;
    rep.samples_used = used;
    for (int k = 0; k < word_length; ++k) rep.counts.push_back(distinct[k].size());
    // log-log slope over lengths >= 2
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int k = 1; k < word_length; ++k) {
        if (rep.counts[k] < 1) continue;
        double x = std::log(static_cast<double>(k + 1));
        double y = std::log(static_cast<double>(rep.counts[k]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m >= 2) rep.fitted_degree = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return rep;
}

std::string word_to_csv(const Word& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

Word word_from_csv(const std::string& text) {
    Word out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        size_t idx = 0;
        int value = 0;
        try {
            value = std::stoi(item, &idx);
        } catch (const std::exception&) {
            throw AlphabetError("bad word entry: '" + item + "'");
        }
        while (idx < item.size() && std::isspace(static_cast<unsigned char>(item[idx]))) ++idx;
        if (idx != item.size()) throw AlphabetError("bad word entry: '" + item + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

Point address_to_point(int n, const Word& digits, int depth) {
    if (digits.empty()) throw AddressError("empty address");
    if (depth < 0) throw AddressError("depth must be >= 0");

    int sides;
    Real g, r;
    Point c;
    if (n % 2 == 1) {
        auto chain = virtual_chain(n, 1);
        for (const TileSpec& t : chain)
            if (t.kind == TileKind::D_j && t.index == 1) { c = t.center; r = t.radius; }
        sides = 2 * n;
        g = gen_scale_closed_form_odd(n);
    } else if (parity_class(n) == ParityClass::twice_odd) {
        c = Point(Real(0), Real(0));
        r = 1;
        sides = n;
        g = gen_scale_closed_form_odd(n / 2);
    } else {
        throw AddressError("addresses are defined for n odd or twice-odd");
    }

    for (int level = 0; level < depth; ++level) {
        int b = digits[level % digits.size()];
        if (b < 1 || b > sides)
            throw AddressError("bud index " + std::to_string(b) + " out of range");
        Real angle = -Real(b - 1) * 2 * precision::pi() / sides; // bud-1 at 3:00, clockwise
        c = c + Point(cos(angle), sin(angle)) * (r * (1 + g));
        r = r * g;
    }
    return c;
}

} // namespace obl
