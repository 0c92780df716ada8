#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tracta {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws SchemaError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// 2^k for any integer k.
Rational pow2(long k);

}  // namespace tracta
