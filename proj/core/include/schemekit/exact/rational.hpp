#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schemekit::exact {

using Integer = mpz_class;
// GMP keeps mpq_class results canonical (lowest terms, positive denominator)
// for every arithmetic operation; construction from a pair goes through
// make_rational, which canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

// Exact floor of a rational.
Integer floor(const Rational& q);

}  // namespace schemekit::exact
