#ifndef NATREE_SAMPLER_HPP
#define NATREE_SAMPLER_HPP

#include "natree/hplane.hpp"
#include "natree/series.hpp"
#include "natree/tree.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace natree {

// splitmix64-style mix for deriving independent sub-seeds from a run seed
// and a pair of indices.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = seed + 0x9E3779B97F4A7C15ull * (a + 1) + 0xBF58476D1CE4E5B9ull * (b + 1);
    h ^= h >> 30;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 27;
    h *= 0x94D049BB133111EBull;
    h ^= h >> 31;
    return h;
}

// Deterministic value generator for property tests and verification runs.
// Draws raw mt19937_64 output only (no std distributions), so identical
// seeds give identical values on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t bits() { return rng_(); }

    std::uint64_t below(std::uint64_t n) { return bits() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rat rational(long max_abs_num, const std::vector<long>& denominators) {
        long num = range(-max_abs_num, max_abs_num);
        long den = denominators[below(denominators.size())];
        return rat(num, den);
    }

    Rat exponent() { return rational(12, {1, 2, 3, 4, 8, 16}); }

    Rat nonneg_rational(long max_abs_num = 8) {
        Rat q = rational(max_abs_num, {1, 2, 4, 8, 16});
        return abs_value(q);
    }

    Rat positive_rational(long max_abs_num = 8) {
        Rat q = nonneg_rational(max_abs_num);
        return q == 0 ? Rat(1) : q;
    }

    Series series(unsigned max_terms) {
        return series_with(max_terms, 12, {1, 2, 3, 4, 8, 16});
    }

    // Exponent denominators control how dense the window lattice gets in
    // invert/sqrt expansions; pass a coarse set where those run in bulk.
    Series series_with(unsigned max_terms, long max_abs_exp, const std::vector<long>& exp_dens) {
        std::vector<std::pair<Rat, Rat>> pairs;
        unsigned count = static_cast<unsigned>(below(max_terms + 1));
        pairs.reserve(count);
        for (unsigned i = 0; i < count; ++i)
            pairs.emplace_back(rational(max_abs_exp, exp_dens), rational(9, {1, 2, 3, 4}));
        return make_series(pairs);
    }

    Series nonzero_series(unsigned max_terms) {
        Series s = series(max_terms);
        if (!s.has_terms()) s = Series::monomial(exponent(), Rat(1));
        return s;
    }

    Series positive_series(unsigned max_terms) {
        Series s = nonzero_series(max_terms);
        if (s.leading_coefficient() < 0) s = neg(s);
        return s;
    }

    HPoint hpoint(unsigned max_terms = 4) {
        return HPoint(series(max_terms), positive_series(max_terms));
    }

    TreePoint tree_point(unsigned max_terms = 4) { return project(hpoint(max_terms)); }

private:
    std::mt19937_64 rng_;
};

}  // namespace natree

#endif
