#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superloop {

/// Exact arbitrary-precision rational scalar. mpq_class keeps values in
/// canonical form (reduced fraction, positive denominator) as long as they
/// are produced by arithmetic or by the parser below.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;
using RatTensor3 = std::vector<RatMat>;

/// Parses "p" or "p/q" with p an optionally-signed integer and q a positive
/// integer. Throws error{errc::parse_error} on anything else.
Rational parse_rational(const std::string& text);

/// Formats as "p" or "p/q" (reduced, positive denominator).
std::string to_string(const Rational& value);

Rational rational_of(long num, long den = 1);

/// Generalized binomial coefficient C(m, k) for any integer m and k >= 0,
/// so C(m,3) = m(m-1)(m-2)/6 also for negative m.
Rational binomial(long m, unsigned k);

}  // namespace superloop
