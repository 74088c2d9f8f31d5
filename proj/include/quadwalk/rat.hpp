#pragma once

/// Exact rational arithmetic. Rat is GMP's mpq_class: arbitrary-precision
/// numerator, positive denominator, always reduced to lowest terms. All
/// polynomial and series code in this project builds on it; nothing here
/// ever rounds.

#include <gmpxx.h>

#include <complex>
#include <string>

#include "quadwalk/errors.hpp"

namespace quadwalk {

using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (q > 0 after normalisation). Throws ParseError on
/// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_pow(const Rat& base, long exp);

/// gcd of two rationals: the positive generator of the fractional ideal,
/// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d). Used for polynomial content.
Rat rat_gcd(const Rat& a, const Rat& b);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

std::complex<double> rat_to_complex(const Rat& r);

} // namespace quadwalk
