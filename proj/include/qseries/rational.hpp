#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qseries {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text: "p" for integers, "p/r" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p" or "p/r" (optional sign, no spaces). Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Converts to long, throwing DomainError if the value is not an integer
/// or does not fit.
long to_long(const Rational& r);
long to_long(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace qseries
