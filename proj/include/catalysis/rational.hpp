#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catalysis {

/// Exact rational scalar used for every coefficient, probability and bound.
using Rational = mpq_class;

/// Parses "p/q", integers and decimals ("0.25", "-1.5e-3") without rounding.
/// Throws CatalysisError(ErrorKind::Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are rendered as "p/1".
std::string to_fraction_string(const Rational& value);

/// Reduced form as GMP prints it ("3/5", "1", "0").
std::string to_display_string(const Rational& value);

/// Decimal approximation for human-readable output only.
std::string to_decimal_string(const Rational& value, int digits = 6);

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace catalysis
