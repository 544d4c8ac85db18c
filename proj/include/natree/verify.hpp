#ifndef NATREE_VERIFY_HPP
#define NATREE_VERIFY_HPP

#include "natree/counterexample.hpp"
#include "natree/report.hpp"

#include <cstdint>
#include <vector>

namespace natree {

struct VerifyParams {
    unsigned max_n = 32;
    unsigned samples = 0;  // 0 = per-suite default
    unsigned probes_below = 10;
    std::uint64_t seed = 0;
    Rat window = Rat(32);

    unsigned samples_or(unsigned fallback) const { return samples == 0 ? fallback : samples; }
};

// Sampled verification of the algebraic and metric structure: valuation
// axioms, field laws, inverse/sqrt windows, pseudo-metric and quotient
// soundness, and the tree axioms (four-point condition, segment cover,
// parametrization isometry).
Report verify_axioms(const VerifyParams& params);

// Agreement of the cross-ratio distance with the max formula on a seeded
// corpus; instances whose circle data leaves the rational world are skipped
// and counted.
Report verify_cross_ratio_oracle(const VerifyParams& params);

// Identification of vertical lines on a fixed instance set plus seeded
// random pairs.
Report verify_vertical_default(const VerifyParams& params);

// Every verifier with shared parameters, in deterministic order:
// cauchy, vertical, branching, obstruction corpus, axioms, cross-ratio.
std::vector<Report> verify_all(const VerifyParams& params);

// Flattens section reports into a single report with prefixed check names.
Report merge_reports(const std::vector<Report>& sections, const VerifyParams& params);

}  // namespace natree

#endif
