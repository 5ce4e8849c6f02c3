#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bisetcover {

using Rational = mpq_class;

// Parses "p", "p/q" or a decimal integer; the result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// n-th harmonic number, H(0) = 0.
Rational harmonic(long n);

// floor(log2(x)) for x >= 1, and 0 for x <= 1.
int floor_log2(long x);

}  // namespace bisetcover
