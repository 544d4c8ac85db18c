#ifndef NATREE_TEXTIO_HPP
#define NATREE_TEXTIO_HPP

#include "natree/hplane.hpp"
#include "natree/report.hpp"
#include "natree/series.hpp"
#include "natree/tree.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace natree {

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct ZeroDenominator : SyntaxError {
    explicit ZeroDenominator(std::size_t offset) : SyntaxError("zero denominator", offset) {}
};

// Series grammar (whitespace insensitive):
//   series := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | coeff '*' mono | mono
//   mono   := 'X' ['^' exp]
//   exp    := int | '(' int ['/' int] ')'
//   coeff  := int ['/' int]
// The result is canonicalized (duplicates summed, zeros dropped).
Series parse_series(std::string_view text);

// Inverse of parse_series on exact series: descending exponents, printed
// exponents always parenthesized, coefficients in lowest terms. A precision
// bound is rendered as a trailing "+ O(X^(eps))" (not accepted on input).
std::string format_series(const Series& s);

Rat parse_rational(std::string_view text);

// "x ; y" coordinate pairs.
HPoint parse_point(std::string_view text);
std::string format_point(const HPoint& z);

// "u ; t" canonical pairs (series; rational height).
TreePoint parse_tree_point(std::string_view text);
std::string format_tree_point(const TreePoint& p);

// {"command","params","checks":[{"name","status","witness"}],
//  "summary":{"pass","fail","skip"}} with stable key order.
std::string report_to_json(const Report& r);

std::string report_to_text(const Report& r);

inline std::ostream& operator<<(std::ostream& os, const Series& s) {
    return os << format_series(s);
}

inline std::ostream& operator<<(std::ostream& os, const HPoint& z) {
    return os << format_point(z);
}

inline std::ostream& operator<<(std::ostream& os, const TreePoint& p) {
    return os << format_tree_point(p);
}

}  // namespace natree

#endif
