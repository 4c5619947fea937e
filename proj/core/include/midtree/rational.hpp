#pragma once

// Exact scalar types. Everything numeric in midtree is built on these;
// floating point never appears on a computation path.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace midtree {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (0 is 0/1).
using Rational = mpq_class;

/// Parses `INT` or `INT/INT` (optional leading '-'). Returns the value in
/// canonical form. Throws std::invalid_argument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// base^exponent for a possibly negative exponent. Uses 0^0 = 1; throws
/// std::domain_error for 0 raised to a negative power.
Rational pow(const Rational& base, long exponent);

}  // namespace midtree
