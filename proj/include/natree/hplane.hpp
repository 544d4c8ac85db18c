#ifndef NATREE_HPLANE_HPP
#define NATREE_HPLANE_HPP

#include "natree/series.hpp"

#include <stdexcept>

namespace natree {

struct SamePoint : std::invalid_argument {
    SamePoint() : std::invalid_argument("the two points coincide") {}
};

struct NonRealCrossRatio : std::runtime_error {
    NonRealCrossRatio()
        : std::runtime_error("cross-ratio has an imaginary part too large for the window") {}
};

// Default relative truncation window for inverse / square root expansions.
Rat default_window();

// Element of F[i], i^2 = -1.
struct FComplex {
    Series re;
    Series im;
    friend bool operator==(const FComplex&, const FComplex&) = default;
};

FComplex cmul(const FComplex& a, const FComplex& b);
FComplex csub(const FComplex& a, const FComplex& b);
FComplex conj(const FComplex& a);
FComplex cdiv(const FComplex& a, const FComplex& b, const Rat& window);

// Point x + iy of the upper half plane over the series field: both
// coordinates exact, y > 0.
class HPoint {
public:
    HPoint(Series x, Series y);

    const Series& x() const { return x_; }
    const Series& y() const { return y_; }
    FComplex as_complex() const { return {x_, y_}; }

    friend bool operator==(const HPoint&, const HPoint&) = default;

private:
    Series x_;
    Series y_;
};

// Pseudo-distance max{ 2 log|x - x'| - log y - log y', |log y - log y'| }.
// Exact, nonnegative; zero is attained by distinct points.
Rat hp_distance(const HPoint& z, const HPoint& z2);

// The unique line through two distinct points: a vertical ray when the real
// parts agree, otherwise the half-circle meeting {y = 0} at a right angle.
// Circle data is window-truncated via invert/sqrt.
struct FLine {
    enum class Kind { vertical, circle };

    Kind kind;
    Series foot;     // vertical: the real part shared by the ray
    Series center;   // circle
    Series radius;   // circle, > 0
    Series w;        // left endpoint center - radius
    Series w2;       // right endpoint center + radius
};

FLine fline_through(const HPoint& z, const HPoint& z2, const Rat& window = default_window());

// log of the cross-ratio CR(w, z, z', w') = ((z'-w)(z-w')) / ((z-w)(z'-w'))
// along the line through z and z', with the w'-factors dropped for vertical
// lines (endpoint at infinity). Points are ordered internally so CR >= 1.
// The independent oracle for hp_distance.
Rat cross_ratio_log(const HPoint& z, const HPoint& z2, const Rat& window = default_window());

}  // namespace natree

#endif
