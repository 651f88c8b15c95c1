#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilp {

/// Exact rational. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p" or "p/q" with an optional leading '-'. Throws ParseError
/// on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" or "p" form.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace nilp
