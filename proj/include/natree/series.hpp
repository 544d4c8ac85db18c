#ifndef NATREE_SERIES_HPP
#define NATREE_SERIES_HPP

#include "natree/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace natree {

// Raised when a question about a truncated series cannot be answered from
// the stored terms (sign, leading exponent, ...).
struct Indeterminate : std::runtime_error {
    explicit Indeterminate(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero series") {}
};

struct NegativeInput : std::domain_error {
    NegativeInput() : std::domain_error("square root of a negative series") {}
};

struct NonRationalSqrt : std::domain_error {
    NonRationalSqrt() : std::domain_error("leading coefficient is not the square of a rational") {}
};

enum class Order { less, equal, greater };

// Leading exponent of a series, with -infinity standing for the zero series.
class Valuation {
public:
    Valuation(Rat v) : value_(std::move(v)) {}  // NOLINT: implicit by design
    static Valuation neg_infinity() { return Valuation(); }

    bool is_finite() const { return value_.has_value(); }
    const Rat& value() const { return *value_; }

    // -infinity compares below every rational.
    bool leq(const Rat& bound) const { return !value_ || *value_ <= bound; }
    bool lt(const Rat& bound) const { return !value_ || *value_ < bound; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.value_ == b.value_;
    }

private:
    Valuation() = default;
    std::optional<Rat> value_;
};

// One element of the field of real Puiseux series, restricted to rational
// coefficients: finitely many terms c * X^e with strictly descending rational
// exponents. An optional precision bound eps marks everything at exponent
// <= eps as unknown ("exact up to O(X^eps)"); without it the series is an
// exact field element.
class Series {
public:
    struct Term {
        Rat exponent;
        Rat coefficient;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Series() = default;  // exact zero

    static Series zero() { return Series(); }
    static Series constant(const Rat& c) { return monomial(Rat(0), c); }
    static Series monomial(const Rat& exponent, const Rat& coefficient);
    static Series variable() { return monomial(Rat(1), Rat(1)); }

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Rat>& precision() const { return precision_; }

    bool is_exact() const { return !precision_.has_value(); }
    bool has_terms() const { return !terms_.empty(); }
    bool is_zero() const { return terms_.empty() && is_exact(); }

    const Rat& leading_exponent() const { return terms_.front().exponent; }
    const Rat& leading_coefficient() const { return terms_.front().coefficient; }

    // Coarsens the precision bound to at least eps (never refines a coarser
    // bound); stored terms at or below the bound are discarded.
    Series with_precision(const Rat& eps) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Term> terms_;
    std::optional<Rat> precision_;

    friend Series canonical(std::vector<Series::Term> raw, std::optional<Rat> precision);
};

// Sums duplicate exponents, drops zeros, sorts descending, and removes
// anything at or below the precision bound.
Series canonical(std::vector<Series::Term> raw, std::optional<Rat> precision);

Series make_series(const std::vector<std::pair<Rat, Rat>>& pairs);

Series add(const Series& a, const Series& b);
Series neg(const Series& a);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& factor);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// Leading exponent, independent of the sign of the leading coefficient;
// -infinity for the exact zero series. Throws Indeterminate when the series
// is zero up to precision.
Valuation log_abs(const Series& a);

// Total order on exact series; for truncated inputs the comparison is decided
// only when b - a keeps a stored leading term, otherwise Indeterminate.
Order cmp(const Series& a, const Series& b);

inline bool less_than(const Series& a, const Series& b) { return cmp(a, b) == Order::less; }
inline bool is_positive(const Series& a) { return cmp(Series::zero(), a) == Order::less; }

// Multiplicative inverse, expanded around the leading term until the
// relative exponent drop exceeds the window. Exact for exact monomials.
Series invert(const Series& a, const Rat& window);

// Square root of a positive series whose leading coefficient is the square
// of a rational; binomial expansion to the same relative window.
Series sqrt(const Series& a, const Rat& window);

// Keeps exactly the terms with exponent strictly greater than e. The result
// is exact regardless of the input's precision bound.
Series truncate_above(const Series& a, const Rat& e);

// lcm of the denominators of the stored exponents (1 for no terms).
Int exponent_denominator_lcm(const Series& a);

}  // namespace natree

#endif
