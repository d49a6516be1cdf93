#pragma once

#include <gmpxx.h>

#include <string>

namespace projlab {

using Rational = mpq_class;
using Integer = mpz_class;

// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& r);
// Parses "n", "n/d", "-n/d" or a finite decimal "x.y"; DomainError otherwise.
Rational parse_rational(const std::string& text);
// Round-half-up decimal with `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits = 6);
double to_double(const Rational& r);

}  // namespace projlab
