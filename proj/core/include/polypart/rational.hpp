#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polypart {

// Exact arbitrary-precision rational, the coefficient and coordinate type of
// the whole algebraic core. Floating point never enters sign decisions.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }

Rational rational_pow(const Rational& q, unsigned long e);

// Parses "3/4", "-7", or a decimal string like "0.25" (read exactly as 1/4).
Rational parse_rational(const std::string& s);

// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

// Nearest rational to x with denominator at most max_den, via the continued
// fraction expansion. Used to turn a floating search result into an exact
// candidate; correctness never depends on the quality of the approximation.
Rational rational_from_double(double x, long max_den);

Integer floor_to_integer(const Rational& q);
Integer ceil_to_integer(const Rational& q);

Integer integer_gcd(const Integer& a, const Integer& b);
Integer integer_lcm(const Integer& a, const Integer& b);

}  // namespace polypart
