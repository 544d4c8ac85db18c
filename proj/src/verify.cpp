#include "natree/verify.hpp"

#include "natree/sampler.hpp"
#include "natree/textio.hpp"
#include "natree/tree.hpp"

#include <string>

namespace natree {

namespace {

// Aggregates one property over many samples; keeps the first failure.
struct Tally {
    unsigned total = 0;
    unsigned bad = 0;
    std::string witness;

    void ok() { ++total; }

    void fail(std::string w) {
        ++total;
        if (bad++ == 0) witness = std::move(w);
    }

    void record(bool good, const std::string& w) {
        if (good)
            ok();
        else
            fail(w);
    }

    void into(Report& r, const std::string& name) const {
        r.expect(name, bad == 0, bad == 0 ? std::to_string(total) + " samples" : witness);
    }
};

bool val_leq(const Valuation& a, const Valuation& b) {
    if (!a.is_finite()) return true;
    return b.is_finite() && a.value() <= b.value();
}

Valuation val_max(const Valuation& a, const Valuation& b) { return val_leq(a, b) ? b : a; }

Valuation val_sum(const Valuation& a, const Valuation& b) {
    if (!a.is_finite() || !b.is_finite()) return Valuation::neg_infinity();
    return Valuation(a.value() + b.value());
}

std::string pair_witness(const Series& a, const Series& b) {
    return "a = " + format_series(a) + ", b = " + format_series(b);
}

std::string point_witness(const HPoint& z, const HPoint& z2) {
    return "z = " + format_point(z) + "; z' = " + format_point(z2);
}

void append_prefixed(Report& into, const Report& from, const std::string& prefix) {
    for (const auto& c : from.checks) into.add(prefix + "/" + c.name, c.status, c.witness);
}

std::string section_prefix(const std::string& command) {
    std::size_t space = command.rfind(' ');
    return space == std::string::npos ? command : command.substr(space + 1);
}

}  // namespace

Report verify_axioms(const VerifyParams& p) {
    Report r;
    r.command = "verify axioms";
    const unsigned n_full = p.samples_or(1000);
    const unsigned n_half = std::max(1u, n_full / 2);
    const Rat& w = p.window;
    r.param("samples", std::to_string(n_full));
    r.param("seed", std::to_string(p.seed));
    r.param("window", to_string(w));

    {
        Sampler smp(mix_seed(p.seed, 1));
        Tally t_mul, t_ultra, t_eqcase;
        for (unsigned i = 0; i < n_full; ++i) {
            Series a = smp.series(4);
            Series b = smp.series(4);
            Valuation va = log_abs(a);
            Valuation vb = log_abs(b);
            t_mul.record(log_abs(mul(a, b)) == val_sum(va, vb), pair_witness(a, b));
            Valuation vsum = log_abs(add(a, b));
            Valuation bound = val_max(va, vb);
            t_ultra.record(val_leq(vsum, bound), pair_witness(a, b));
            if (!(va == vb)) t_eqcase.record(vsum == bound, pair_witness(a, b));
        }
        t_mul.into(r, "valuation: log|ab| = log|a| + log|b|");
        t_ultra.into(r, "valuation: log|a+b| <= max(log|a|, log|b|)");
        t_eqcase.into(r, "valuation: equality when log|a| != log|b|");
    }

    {
        Sampler smp(mix_seed(p.seed, 2));
        Tally t;
        for (unsigned i = 0; i < n_full; ++i) {
            Series a = smp.positive_series(4);
            Series b = (smp.bits() % 2 == 0) ? a : add(a, smp.positive_series(3));
            t.record(log_abs(b).value() >= log_abs(a).value(), pair_witness(a, b));
        }
        t.into(r, "order compatibility: 0 < a <= b implies log|a| <= log|b|");
    }

    {
        Sampler smp(mix_seed(p.seed, 3));
        Tally t_assoc, t_comm, t_dist;
        for (unsigned i = 0; i < n_full; ++i) {
            Series a = smp.series(3);
            Series b = smp.series(3);
            Series c = smp.series(3);
            t_assoc.record(add(add(a, b), c) == add(a, add(b, c)) &&
                               mul(mul(a, b), c) == mul(a, mul(b, c)),
                           pair_witness(a, b));
            t_comm.record(add(a, b) == add(b, a) && mul(a, b) == mul(b, a), pair_witness(a, b));
            t_dist.record(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), pair_witness(a, b));
        }
        t_assoc.into(r, "field: associativity");
        t_comm.into(r, "field: commutativity");
        t_dist.into(r, "field: distributivity");
    }

    {
        Sampler smp(mix_seed(p.seed, 4));
        Tally t_inv, t_sqrt, t_canon;
        const unsigned n_exp = std::min(n_half, 150u);
        const std::vector<long> coarse{1, 2, 4};  // keeps the window lattice small
        for (unsigned i = 0; i < n_exp; ++i) {
            Series a = smp.series_with(4, 8, coarse);
            if (!a.has_terms()) a = Series::variable();
            Series residue = sub(mul(a, invert(a, w)), Series::constant(Rat(1)));
            t_inv.record(!residue.has_terms(), "a = " + format_series(a));

            Series root_base = smp.series_with(3, 8, coarse);
            if (!root_base.has_terms()) root_base = Series::variable();
            Series square = mul(root_base, root_base);
            Series back = sqrt(square, w);
            Series diff = sub(mul(back, back), square);
            t_sqrt.record(!diff.has_terms(), "a = " + format_series(square));
        }
        for (unsigned i = 0; i < n_half; ++i) {
            Series s = smp.series(5);
            std::vector<std::pair<Rat, Rat>> pairs;
            for (const auto& term : s.terms()) pairs.emplace_back(term.exponent, term.coefficient);
            t_canon.record(make_series(pairs) == s, "s = " + format_series(s));
        }
        t_inv.into(r, "invert: a * invert(a) = 1 within the window");
        t_sqrt.into(r, "sqrt: sqrt(a)^2 = a within the window");
        t_canon.into(r, "canonical form is idempotent");
    }

    {
        Sampler smp(mix_seed(p.seed, 5));
        Tally t_sym, t_nonneg, t_tri, t_twoform, t_quot, t_posdef;
        for (unsigned i = 0; i < n_full; ++i) {
            HPoint z1 = smp.hpoint();
            HPoint z2 = smp.hpoint();
            HPoint z3 = smp.hpoint();
            Rat d12 = hp_distance(z1, z2);
            Rat d13 = hp_distance(z1, z3);
            Rat d23 = hp_distance(z2, z3);
            t_sym.record(d12 == hp_distance(z2, z1), point_witness(z1, z2));
            t_nonneg.record(d12 >= 0 && d13 >= 0 && d23 >= 0, point_witness(z1, z2));
            t_tri.record(d13 <= d12 + d23, point_witness(z1, z3));

            // independent route: log of ((x-x')^2 + y^2 + y'^2) / (y y')
            Series dx = sub(z1.x(), z2.x());
            Series num = add(mul(dx, dx), add(mul(z1.y(), z1.y()), mul(z2.y(), z2.y())));
            Rat via_quotient =
                log_abs(num).value() - log_abs(z1.y()).value() - log_abs(z2.y()).value();
            t_twoform.record(via_quotient == d12, point_witness(z1, z2));

            TreePoint p1 = project(z1);
            TreePoint p2 = project(z2);
            t_quot.record(tree_distance(p1, p2) == d12, point_witness(z1, z2));
            t_posdef.record((tree_distance(p1, p2) == 0) == (p1 == p2), point_witness(z1, z2));
        }
        t_sym.into(r, "pseudo-metric: symmetry");
        t_nonneg.into(r, "pseudo-metric: nonnegativity");
        t_tri.into(r, "pseudo-metric: triangle inequality");
        t_twoform.into(r, "pseudo-metric: log-quotient form equals max form");
        t_quot.into(r, "quotient: tree distance of projections equals plane distance");
        t_posdef.into(r, "quotient: positive definite on canonical forms");
    }

    {
        Sampler smp(mix_seed(p.seed, 6));
        Tally t_zero, t_scale;
        for (unsigned i = 0; i < n_half; ++i) {
            HPoint z = smp.hpoint();
            Rat t = log_abs(z.y()).value();
            Series shift = smp.series(3);
            Series low = sub(shift, truncate_above(shift, t));  // everything at or below t
            HPoint z2(add(z.x(), low), z.y());
            bool zero_dist = hp_distance(z, z2) == 0;
            t_zero.record(zero_dist && project(z) == project(z2), point_witness(z, z2));

            Series x = smp.series(3);
            Series x2 = smp.series(3);
            if (x == x2) x2 = add(x2, Series::monomial(smp.exponent(), Rat(1)));
            Rat v = log_abs(sub(x, x2)).value();
            Series y = Series::monomial(v + smp.nonneg_rational(), Rat(1));
            t_scale.record(hp_distance(HPoint(x, y), HPoint(x2, y)) == 0,
                           pair_witness(x, x2));
        }
        t_zero.into(r, "quotient: zero-distance points project equally");
        t_scale.into(r, "translation at scale: d(x+iy, x'+iy) = 0 when log|x-x'| <= log y");
    }

    {
        Sampler smp(mix_seed(p.seed, 8));
        Tally t_four;
        for (unsigned i = 0; i < n_full; ++i) {
            TreePoint q1 = smp.tree_point();
            TreePoint q2 = smp.tree_point();
            TreePoint q3 = smp.tree_point();
            TreePoint q4 = smp.tree_point();
            t_four.record(four_point_ok(q1, q2, q3, q4),
                          format_tree_point(q1) + " | " + format_tree_point(q2) + " | " +
                              format_tree_point(q3) + " | " + format_tree_point(q4));
        }
        t_four.into(r, "tree: four-point condition");
    }

    {
        Sampler smp(mix_seed(p.seed, 9));
        Tally t_cover, t_iso, t_merge;
        for (unsigned i = 0; i < n_half; ++i) {
            TreePoint x = smp.tree_point();
            TreePoint y = smp.tree_point();
            TreePoint z = smp.tree_point();
            Rat d = tree_distance(y, z);
            Rat s = d * rat(static_cast<long>(smp.below(17)), 16);
            TreePoint on = param_point(y, z, s);
            t_cover.record(is_on_segment(on, x, y) || is_on_segment(on, x, z),
                           format_tree_point(on) + " s=" + to_string(s));

            Rat s2 = d * rat(static_cast<long>(smp.below(17)), 16);
            Rat gap = tree_distance(param_point(y, z, s), param_point(y, z, s2));
            t_iso.record(gap == abs_value(s - s2), "s=" + to_string(s) + " s'=" + to_string(s2));

            SegmentSpec seg = segment_spec(y, z);
            t_merge.record(seg.length() == d,
                           format_tree_point(y) + " | " + format_tree_point(z));
        }
        t_cover.into(r, "tree: segment cover [y,z] within [x,y] u [x,z]");
        t_iso.into(r, "tree: parametrization is an isometry");
        t_merge.into(r, "tree: merge height splits the distance");
    }

    return r;
}

Report verify_cross_ratio_oracle(const VerifyParams& p) {
    Report r;
    r.command = "verify crossratio";
    const unsigned target = p.samples_or(100);
    r.param("samples", std::to_string(target));
    r.param("seed", std::to_string(p.seed));
    r.param("window", to_string(p.window));

    Sampler smp(mix_seed(p.seed, 11));
    unsigned attempts = 0;
    unsigned successes = 0;
    unsigned skipped_sqrt = 0;
    unsigned skipped_indet = 0;
    Tally agree;

    // coarse exponent lattice so the window expansions stay small
    const std::vector<long> dens{1, 2};
    auto sample_point = [&] {
        Series y = smp.series_with(3, 5, dens);
        if (!y.has_terms()) y = Series::constant(Rat(1));
        if (y.leading_coefficient() < 0) y = neg(y);
        return HPoint(smp.series_with(3, 5, dens), y);
    };

    const unsigned attempt_cap = 8 * target;
    while (successes < target && attempts < attempt_cap) {
        HPoint z1 = sample_point();
        HPoint z2 = (attempts % 4 == 0) ? HPoint(z1.x(), sample_point().y()) : sample_point();
        if (z1 == z2) z2 = HPoint(z2.x(), mul(z2.y(), Series::variable()));
        ++attempts;

        Rat direct = hp_distance(z1, z2);
        try {
            Rat via_cr = cross_ratio_log(z1, z2, p.window);
            ++successes;
            agree.record(via_cr == direct, point_witness(z1, z2) + " | log CR = " +
                                               to_string(via_cr) + ", d = " + to_string(direct));
        } catch (const NonRationalSqrt&) {
            ++skipped_sqrt;
        } catch (const Indeterminate&) {
            ++skipped_indet;
        } catch (const NonRealCrossRatio&) {
            ++successes;
            agree.fail(point_witness(z1, z2) + " | non-real cross-ratio");
        }
    }

    const unsigned skipped = skipped_sqrt + skipped_indet;
    agree.into(r, "log CR agrees exactly with the max formula");
    r.expect("corpus size reached", successes >= target,
             std::to_string(successes) + " of " + std::to_string(target) + " in " +
                 std::to_string(attempts) + " attempts");
    r.expect("skipped instances below half of attempts", 2 * skipped < attempts,
             std::to_string(skipped_sqrt) + " non-rational sqrt + " +
                 std::to_string(skipped_indet) + " indeterminate of " + std::to_string(attempts));
    return r;
}

Report verify_vertical_default(const VerifyParams& p) {
    Report r;
    r.command = "verify vertical";
    r.param("seed", std::to_string(p.seed));

    struct Instance {
        Series x;
        Series x2;
        std::vector<Rat> heights;
    };
    std::vector<Instance> instances;

    instances.push_back({Series::zero(), sequence_foot(2), {rat(-1, 4), rat(-1, 2), Rat(-1)}});
    instances.push_back({sequence_foot(1), sequence_foot(3), {Rat(0), rat(-7, 8)}});
    instances.push_back({Series::zero(), Series::monomial(Rat(-1), Rat(1)), {rat(-1, 2), Rat(-2)}});

    Sampler smp(mix_seed(p.seed, 13));
    for (unsigned i = 0; i < 8; ++i) {
        Series x = smp.series(3);
        Series x2 = smp.series(3);
        if (x == x2) x2 = add(x2, Series::monomial(smp.exponent(), Rat(1)));
        Rat merge = log_abs(sub(x, x2)).value();
        instances.push_back(
            {x, x2, {Rat(merge + smp.nonneg_rational()), Rat(merge - smp.positive_rational())}});
    }

    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        Report section = verify_vertical_identification(inst.x, inst.x2, inst.heights);
        append_prefixed(r, section, "instance " + std::to_string(i));
    }
    return r;
}

std::vector<Report> verify_all(const VerifyParams& p) {
    std::vector<Report> sections;
    sections.push_back(verify_cauchy(p.max_n));
    sections.push_back(verify_vertical_default(p));
    sections.push_back(verify_branching(p.max_n, p.probes_below, p.seed));
    sections.push_back(verify_obstruction_corpus(p.max_n, p.seed));
    sections.push_back(verify_axioms(p));
    sections.push_back(verify_cross_ratio_oracle(p));
    return sections;
}

Report merge_reports(const std::vector<Report>& sections, const VerifyParams& p) {
    Report all;
    all.command = "verify all";
    all.param("max_n", std::to_string(p.max_n));
    all.param("samples", std::to_string(p.samples));
    all.param("probes_below", std::to_string(p.probes_below));
    all.param("seed", std::to_string(p.seed));
    all.param("window", to_string(p.window));
    for (const Report& section : sections)
        append_prefixed(all, section, section_prefix(section.command));
    return all;
}

}  // namespace natree
