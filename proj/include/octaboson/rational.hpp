#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace octaboson {

/// Exact rational with canonical (reduced, positive denominator) representation.
using Rational = mpq_class;

/// Parses "p/q" or "p".  Decimal or exponent notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// base^exponent for any integer exponent; throws GenericityError for 0^negative.
Rational pow(const Rational& base, int exponent);

/// Budget on quadrature nodes / polynomial terms.  Reads OCTABOSON_BUDGET, else 1<<24.
std::size_t resource_budget();

}  // namespace octaboson
