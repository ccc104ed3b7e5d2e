#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prelie {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer ipow(long base, unsigned exp);

}  // namespace prelie
