#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qb {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized, which parse_scalar guarantees.
using Scalar = mpq_class;

/// Parses "a" or "a/b" (optional leading '-', b > 0). Returns nullopt on any
/// malformed input, including a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

/// Reduced "a" or "a/b" encoding.
std::string format_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace qb
