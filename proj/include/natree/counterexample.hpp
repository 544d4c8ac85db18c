#ifndef NATREE_COUNTEREXAMPLE_HPP
#define NATREE_COUNTEREXAMPLE_HPP

#include "natree/hplane.hpp"
#include "natree/report.hpp"
#include "natree/series.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace natree {

struct SameSeries : std::invalid_argument {
    SameSeries() : std::invalid_argument("the two series coincide") {}
};

// The branching Cauchy sequence: heights t_n = -1 + 1/2^n descending to -1,
// feet a_n = sum_{k=1..n} X^{t_k} of the vertical lines, and the probe
// points p_n = a_n + i X^{t_n} sitting at the branch heights.
struct SequenceItem {
    unsigned index;
    Rat height;    // t_n
    Series foot;   // a_n
    Series level;  // b_n = X^{t_n}
    HPoint point;  // p_n
};

Rat sequence_height(unsigned n);
Series sequence_foot(unsigned n);
SequenceItem sequence_item(unsigned n);

// d(p_n, p_m) = t_n - t_m for all 0 <= n < m <= max_n.
Report verify_cauchy(unsigned max_n);

// Two vertical rays are identified from height log|x - x'| upward: distance
// zero there and at every listed height above; strictly positive below.
Report verify_vertical_identification(const Series& x, const Series& x2,
                                      const std::vector<Rat>& extra_heights);

// Adjacent lines branch exactly at height t_{n+1}: identified at and above
// it, at positive distance from everything on the next line below it, with
// the branch point recovered as a median.
Report verify_branching(unsigned max_n, unsigned probes_below, std::uint64_t seed);

// Whether log|a - a_n| <= t_n, i.e. whether a + i X^{t_n} still represents
// the same tree point as p_n. Computed via the valuation and cross-checked
// against the distance formula. Requires exact a.
bool limit_constraint(const Series& a, unsigned n);

// Search for the least n with the limit constraint violated, together with
// the divisibility bound that predicts it: writing m for the lcm of the
// exponent denominators of a, the constraint at n forces 2^(n-1) | m, so a
// violation must occur at some n <= v2(m) + 2.
struct ObstructionResult {
    Int denominator_lcm;               // m
    unsigned long two_adic;            // v2(m)
    unsigned predicted_bound;          // v2(m) + 2
    std::optional<unsigned> witness;   // least violating n, if found by max_n
};

ObstructionResult find_obstruction(const Series& a, unsigned max_n);
Report obstruction_witness(const Series& a, unsigned max_n);

// The fixed corpus for the obstruction search: every subset of
// {X^{t_1},...,X^{t_4}} plus seeded random series with small exponent
// denominators. Every element must violate the constraint by the bound.
Report verify_obstruction_corpus(unsigned max_n, std::uint64_t seed);

}  // namespace natree

#endif
