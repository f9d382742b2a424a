#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace forge {

// Exact coefficients everywhere; GMP keeps the integers unbounded.
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Accepts "n" or "n/d" with an optional leading sign. Throws forge::Error.
Rational parse_rational(std::string_view text);

}  // namespace forge
