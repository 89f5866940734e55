#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace srg {

/// Exact rational scalar used throughout.
using Rational = mpq_class;

/// Prints as "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline int sign_of_parity(int parity) { return (parity & 1) ? -1 : 1; }

}  // namespace srg
