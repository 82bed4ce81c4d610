#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace instanton {

/// Exact rational number, always in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// "3", "-1/2".
std::string to_string(const Rat& value);

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace instanton
