#ifndef LATWALK_RATIONAL_HPP
#define LATWALK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latwalk {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// Rationals print as "p" or "p/q"; that is also the accepted input format.
inline std::string to_string(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonicalized fraction; the mpq_class(num, den) constructor itself does
// not reduce, which breaks comparisons, so always build fractions here
// when numerator and denominator may share a factor.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

// Requires an integral value.
inline Integer to_integer(const Rational& v) {
    if (!is_integer(v)) throw std::domain_error("expected an integer, got " + to_string(v));
    return v.get_num();
}

}  // namespace latwalk

#endif
