#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwitt {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator as long as values are produced by arithmetic; the
/// helpers below canonicalize anything built from text.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

}  // namespace gwitt
