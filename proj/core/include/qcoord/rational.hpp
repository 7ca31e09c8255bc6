#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcoord {

/// Arbitrary precision rational; always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace qcoord
