#include "natree/series.hpp"

#include <algorithm>

namespace natree {

namespace {

// Precision bounds combine as "coarser wins"; absent means exact.
std::optional<Rat> coarser(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

// Leading exponent used for precision propagation in products: for a series
// that is zero up to precision, the bound itself is the best stand-in.
const Rat& propagation_lead(const Series& s) {
    return s.has_terms() ? s.leading_exponent() : *s.precision();
}

// Shifts all exponents by `shift` and multiplies coefficients by `factor`
// (exact multiplication by factor * X^shift).
Series scale_shift(const Series& a, const Rat& factor, const Rat& shift) {
    std::vector<Series::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.exponent + shift, t.coefficient * factor});
    std::optional<Rat> prec = a.precision();
    if (prec) *prec += shift;
    return canonical(std::move(out), std::move(prec));
}

// Reinterprets the stored terms as an exact finite object, dropping the
// precision label. The Newton iterates below are handled this way: their
// terms are known exactly, and the flooring is re-imposed per step through
// the input's label.
Series strip_precision(const Series& s) { return canonical(s.terms(), std::nullopt); }

// Relative exponent drop from the leading term to the first unknown or
// unstated part of a: the window at which truncating after the leading
// term is exact.
Rat leading_gap(const Series& a, const Rat& window) {
    if (a.terms().size() >= 2) return a.leading_exponent() - a.terms()[1].exponent;
    return a.precision() ? Rat(a.leading_exponent() - *a.precision()) : window;
}

}  // namespace

Series canonical(std::vector<Series::Term> raw, std::optional<Rat> precision) {
    std::sort(raw.begin(), raw.end(),
              [](const Series::Term& x, const Series::Term& y) { return x.exponent > y.exponent; });
    Series s;
    s.precision_ = std::move(precision);
    for (auto& t : raw) {
        if (s.precision_ && t.exponent <= *s.precision_) continue;
        if (!s.terms_.empty() && s.terms_.back().exponent == t.exponent) {
            s.terms_.back().coefficient += t.coefficient;
            if (s.terms_.back().coefficient == 0) s.terms_.pop_back();
        } else if (t.coefficient != 0) {
            s.terms_.push_back(std::move(t));
        }
    }
    return s;
}

Series Series::monomial(const Rat& exponent, const Rat& coefficient) {
    return canonical({{exponent, coefficient}}, std::nullopt);
}

Series Series::with_precision(const Rat& eps) const {
    std::optional<Rat> prec = coarser(precision_, eps);
    return canonical(terms_, std::move(prec));
}

Series make_series(const std::vector<std::pair<Rat, Rat>>& pairs) {
    std::vector<Series::Term> raw;
    raw.reserve(pairs.size());
    for (const auto& [e, c] : pairs) raw.push_back({e, c});
    return canonical(std::move(raw), std::nullopt);
}

Series add(const Series& a, const Series& b) {
    std::vector<Series::Term> raw;
    raw.reserve(a.terms().size() + b.terms().size());
    raw.insert(raw.end(), a.terms().begin(), a.terms().end());
    raw.insert(raw.end(), b.terms().begin(), b.terms().end());
    return canonical(std::move(raw), coarser(a.precision(), b.precision()));
}

Series neg(const Series& a) { return scale(a, Rat(-1)); }

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series scale(const Series& a, const Rat& factor) {
    if (factor == 0) return Series::zero();
    return scale_shift(a, factor, Rat(0));
}

Series mul(const Series& a, const Series& b) {
    if (a.is_zero() || b.is_zero()) return Series::zero();

    std::optional<Rat> prec;
    if (a.precision()) prec = coarser(prec, *a.precision() + propagation_lead(b));
    if (b.precision()) prec = coarser(prec, *b.precision() + propagation_lead(a));

    std::vector<Series::Term> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Rat e = ta.exponent + tb.exponent;
            if (prec && e <= *prec) break;  // descending: the rest lands below the bound too
            raw.push_back({std::move(e), ta.coefficient * tb.coefficient});
        }
    }
    return canonical(std::move(raw), std::move(prec));
}

Valuation log_abs(const Series& a) {
    if (a.has_terms()) return a.leading_exponent();
    if (!a.is_exact()) throw Indeterminate("log of a series that is zero up to precision");
    return Valuation::neg_infinity();
}

Order cmp(const Series& a, const Series& b) {
    Series d = sub(b, a);
    if (d.has_terms()) return d.leading_coefficient() > 0 ? Order::less : Order::greater;
    if (!d.is_exact()) throw Indeterminate("comparison undecided within precision");
    return Order::equal;
}

Series invert(const Series& a, const Rat& window) {
    if (!a.has_terms()) {
        if (a.is_exact()) throw DivisionByZero();
        throw Indeterminate("inverse of a series with unknown leading term");
    }
    const Rat& e = a.leading_exponent();
    const Rat c_inv = rat(a.leading_coefficient().get_den(), a.leading_coefficient().get_num());
    const Series lead_inv = Series::monomial(-e, c_inv);
    if (a.terms().size() == 1 && a.is_exact()) return lead_inv;

    // Newton iteration b <- b (2 - a b), with the working window doubling
    // from the leading gap up to the requested one. Entering a step with b
    // equal to the true inverse truncated strictly above -e - w, the new
    // error is -a (b - 1/a)^2 of valuation <= -e - 2w, and flooring the
    // input at e - w2 only perturbs at or below the new floor; the iterate
    // is treated as an exact finite object so the products keep every term
    // the new window needs.
    const Rat w_full = a.is_exact() ? window : std::min(window, Rat(e - *a.precision()));
    const Series two = Series::constant(Rat(2));
    Rat w = std::min(w_full, leading_gap(a, window));
    Series b = lead_inv;
    for (int guard = 0; guard < 256; ++guard) {
        Rat w2 = std::min(Rat(2 * w), w_full);
        Series iterate = strip_precision(b);
        Series next = mul(iterate, sub(two, mul(a.with_precision(e - w2), iterate)));
        if (next == b) return b;
        b = std::move(next);
        w = std::move(w2);
    }
    throw std::logic_error("inverse iteration failed to stabilize");
}

Series sqrt(const Series& a, const Rat& window) {
    if (!a.has_terms()) {
        if (a.is_exact()) return Series::zero();
        throw Indeterminate("square root of a series with unknown leading term");
    }
    const Rat& c = a.leading_coefficient();
    if (c < 0) throw NegativeInput();
    Rat root_c;
    if (!rational_sqrt(c, root_c)) throw NonRationalSqrt();
    const Rat half_e = a.leading_exponent() / 2;
    const Series lead_root = Series::monomial(half_e, root_c);
    if (a.terms().size() == 1 && a.is_exact()) return lead_root;

    // Division-free Newton iteration for the inverse square root,
    // y <- y (3 - a y^2) / 2, then sqrt(a) = a y. Same ramped-window
    // scheme as in invert; the error recurrence -(3/2) a t y_err^2 - ...
    // doubles the correct relative window each pass.
    const Rat& e = a.leading_exponent();
    const Rat w_full = a.is_exact() ? window : std::min(window, Rat(e - *a.precision()));
    const Series three = Series::constant(Rat(3));
    Rat w = std::min(w_full, leading_gap(a, window));
    Series y = Series::monomial(-half_e, rat(root_c.get_den(), root_c.get_num()));
    for (int guard = 0; guard < 256; ++guard) {
        Rat w2 = std::min(Rat(2 * w), w_full);
        Series floored = a.with_precision(e - w2);
        Series iterate = strip_precision(y);
        Series next = scale(mul(iterate, sub(three, mul(floored, mul(iterate, iterate)))), rat(1, 2));
        if (next == y) return mul(floored, iterate);
        y = std::move(next);
        w = std::move(w2);
    }
    throw std::logic_error("square root iteration failed to stabilize");
}

Series truncate_above(const Series& a, const Rat& e) {
    std::vector<Series::Term> out;
    for (const auto& t : a.terms()) {
        if (t.exponent > e) out.push_back(t);
    }
    return canonical(std::move(out), std::nullopt);
}

Int exponent_denominator_lcm(const Series& a) {
    Int m(1);
    for (const auto& t : a.terms()) m = lcm(m, t.exponent.get_den());
    return m;
}

}  // namespace natree
