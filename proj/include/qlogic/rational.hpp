#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlogic {

// Exact fraction over arbitrary-precision integers. GMP keeps the value
// canonical (positive denominator, reduced, zero as 0/1) after every
// arithmetic operation.
using Rational = mpq_class;

// p/q in lowest terms. Throws std::domain_error when q == 0.
Rational rat(long p, long q = 1);

// Text form "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Inverse of to_string. Accepts an optional leading minus, no spaces.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace qlogic
