#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace gwa {

// Exact arbitrary-precision rationals. mpq_class keeps values canonical:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational &base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::invalid_argument("rat_pow: zero base, negative exponent");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// "Height" of a reduced rational: |num| + den. Strictly grows under powers
// of any q with |q| != 1, which bounds the group-membership scans.
inline Integer rat_height(const Rational &r) {
    return abs(r.get_num()) + r.get_den();
}

// Exact n-th root, if one exists in Q. For even n and positive c the
// positive root is returned.
inline std::optional<Rational> rational_nth_root(const Rational &c, unsigned long n) {
    if (n == 0) throw std::invalid_argument("rational_nth_root: n must be positive");
    if (c == 0) throw std::invalid_argument("rational_nth_root: c must be nonzero");
    if (c < 0 && n % 2 == 0) return std::nullopt;
    Integer num = abs(c.get_num()), den = c.get_den();
    Integer rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    Rational r = make_rational(rn, rd);
    if (c < 0) r = -r;
    return r;
}

inline std::string rat_str(const Rational &r) { return r.get_str(); }

} // namespace gwa
