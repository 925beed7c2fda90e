// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace killing {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Parses "p/q" or "p". Throws InvalidArgument on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& s);

/// Number of nonzero entries, handy for support counts.
inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// n! as a Scalar.
Scalar factorial(unsigned n);

}  // namespace killing
