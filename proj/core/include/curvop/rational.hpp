#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvop {

/// Exact coefficient type. mpq_class keeps values in lowest terms with a
/// positive denominator as long as every value enters through canonicalize().
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// 1/k!.
Rational factorial_inverse(unsigned k);

unsigned long binomial(unsigned n, unsigned k);

}  // namespace curvop
