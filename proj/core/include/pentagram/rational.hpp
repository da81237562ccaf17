#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pentagram {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). Every geometric and polynomial coefficient is one of these.
using Scalar = mpq_class;

// Parses "p", "p/q" or "-p/q" (whitespace not allowed). Throws
// Error(kParseError) on malformed input or a zero denominator.
Scalar parse_rational(std::string_view text);

// Canonical text form: "p/q", or "p" when q == 1.
std::string format_rational(const Scalar& value);

// value^exponent for any integer exponent; a negative exponent on zero throws
// kDivisionByZero.
Scalar power(const Scalar& value, long exponent);

// A rational r with r^degree == value, if one exists. For even degree the
// positive root is returned.
std::optional<Scalar> rational_root(const Scalar& value, unsigned degree);

inline long positive_mod(long value, long modulus) {
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Floor division for possibly negative numerators.
inline long floor_div(long value, long divisor) {
  long q = value / divisor;
  if ((value % divisor != 0) && ((value < 0) != (divisor < 0))) --q;
  return q;
}

}  // namespace pentagram
