#include "natree/hplane.hpp"

#include <algorithm>
#include <utility>

namespace natree {

Rat default_window() { return Rat(32); }

FComplex cmul(const FComplex& a, const FComplex& b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}

FComplex csub(const FComplex& a, const FComplex& b) {
    return {sub(a.re, b.re), sub(a.im, b.im)};
}

FComplex conj(const FComplex& a) { return {a.re, neg(a.im)}; }

FComplex cdiv(const FComplex& a, const FComplex& b, const Rat& window) {
    Series norm = add(mul(b.re, b.re), mul(b.im, b.im));
    Series inv = invert(norm, window);  // DivisionByZero / Indeterminate
    FComplex num = cmul(a, conj(b));
    return {mul(num.re, inv), mul(num.im, inv)};
}

HPoint::HPoint(Series x, Series y) : x_(std::move(x)), y_(std::move(y)) {
    if (!x_.is_exact() || !y_.is_exact())
        throw std::invalid_argument("point coordinates must be exact series");
    if (!is_positive(y_)) throw std::invalid_argument("imaginary part must be positive");
}

Rat hp_distance(const HPoint& z, const HPoint& z2) {
    const Rat ty = log_abs(z.y()).value();
    const Rat ty2 = log_abs(z2.y()).value();
    const Rat vertical = abs_value(ty - ty2);
    Valuation horizontal = log_abs(sub(z.x(), z2.x()));
    if (!horizontal.is_finite()) return vertical;
    return std::max(Rat(2 * horizontal.value() - ty - ty2), vertical);
}

FLine fline_through(const HPoint& z, const HPoint& z2, const Rat& window) {
    if (z == z2) throw SamePoint();
    if (z.x() == z2.x()) {
        FLine line;
        line.kind = FLine::Kind::vertical;
        line.foot = z.x();
        return line;
    }
    // center = (x^2 + y^2 - x'^2 - y'^2) / (2 (x - x'))
    Series num = sub(add(mul(z.x(), z.x()), mul(z.y(), z.y())),
                     add(mul(z2.x(), z2.x()), mul(z2.y(), z2.y())));
    Series den = scale(sub(z.x(), z2.x()), Rat(2));
    Series center = mul(num, invert(den, window));
    Series offset = sub(z.x(), center);
    Series radius_sq = add(mul(offset, offset), mul(z.y(), z.y()));
    Series radius = sqrt(radius_sq, window);

    FLine line;
    line.kind = FLine::Kind::circle;
    line.center = center;
    line.radius = radius;
    line.w = sub(center, radius);
    line.w2 = add(center, radius);
    return line;
}

namespace {

// Upper bound on the leading exponent of a component that may be zero up to
// precision; finite infimum semantics are enough for the reality check.
bool imaginary_part_small(const Series& im, const Rat& re_val, const Rat& window) {
    Rat threshold = re_val - window / 2;
    if (im.has_terms()) return im.leading_exponent() < threshold;
    if (!im.is_exact()) return *im.precision() < threshold;
    return true;  // exactly real
}

}  // namespace

Rat cross_ratio_log(const HPoint& z, const HPoint& z2, const Rat& window) {
    FLine line = fline_through(z, z2, window);

    const HPoint* first = &z;
    const HPoint* second = &z2;
    if (line.kind == FLine::Kind::vertical) {
        // ascending toward the open end at infinity
        if (less_than(second->y(), first->y())) std::swap(first, second);
    } else {
        // ascending real part toward w'
        if (less_than(second->x(), first->x())) std::swap(first, second);
    }

    FComplex cz = first->as_complex();
    FComplex cz2 = second->as_complex();
    FComplex ratio;
    if (line.kind == FLine::Kind::vertical) {
        FComplex w{line.foot, Series::zero()};
        ratio = cdiv(csub(cz2, w), csub(cz, w), window);
    } else {
        FComplex w{line.w, Series::zero()};
        FComplex w2{line.w2, Series::zero()};
        FComplex num = cmul(csub(cz2, w), csub(cz, w2));
        FComplex den = cmul(csub(cz, w), csub(cz2, w2));
        ratio = cdiv(num, den, window);
    }

    Valuation val = log_abs(ratio.re);  // Indeterminate on full cancellation
    if (!imaginary_part_small(ratio.im, val.value(), window)) throw NonRealCrossRatio();
    return val.value();
}

}  // namespace natree
