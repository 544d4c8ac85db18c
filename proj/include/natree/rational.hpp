#ifndef NATREE_RATIONAL_HPP
#define NATREE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace natree {

// Arbitrary-precision exact arithmetic. mpq_class values are kept canonical
// (lowest terms, positive denominator); every construction from raw parts
// must go through rat() or call canonicalize() itself.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline Rat abs_value(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// 2-adic valuation of a positive integer: largest e with 2^e | m.
inline unsigned long two_adic_valuation(const Int& m) {
    if (m == 0 || m == 1) return 0;
    return mpz_scan1(m.get_mpz_t(), 0);
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact square root of a nonnegative rational, if it is one.
inline bool rational_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = rat(rn, rd);
    return true;
}

}  // namespace natree

#endif
