#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gromov {

using BigInt = mpz_class;

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the representation contract here.
using Rat = mpq_class;

// Accepts integers ("7", "-3"), fractions ("3/2"), and finite decimals
// ("1.5" parses to 3/2 exactly). Anything else, including float notation
// like "1e5", is a ParseError. No floating point is involved at any stage.
Rat parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& value);

std::string format_bigint(const BigInt& value);

}  // namespace gromov
