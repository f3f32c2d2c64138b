#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fmk {

// All arithmetic in the library is exact. cpp_rational keeps values
// normalized (gcd-reduced, positive denominator) automatically.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Largest integer <= r.
Int floor_int(const Rational& r);

// Fractional part r - floor(r), always in [0, 1).
Rational frac(const Rational& r);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

// Strict inverse of to_string. Accepts an optional leading '-', no leading
// zeros (except "0" itself), and requires "p/q" to be in lowest terms with
// q > 1. Anything else throws ParseError.
Rational parse_rational(const std::string& text);

} // namespace fmk
