// Exact and high-precision number types used throughout.
//
// All symbolic computation (polynomial coefficients, closed-form integrals)
// happens in arbitrary-precision rationals; floats never enter the pipeline
// before the reporting boundary.  Where an irrational value is unavoidable
// (square roots in the gap bound, logarithms in the divisor-sum oracles) we
// use 50-significant-digit MPFR reals, which leaves ~44 digits of headroom
// over the 6-decimal reporting precision.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace zetagap {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float_50;

inline Real to_real(const Rat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rat> rational_sqrt(const Rat& q);

// Parse "3/5", "-7", "0.1249" (decimals convert exactly: 1249/10000).
// Throws std::invalid_argument with a description on malformed input.
Rat parse_rational(const std::string& text);

// Canonical rendering: "num" or "num/den" in lowest terms.
std::string rat_str(const Rat& q);

// Fixed-precision decimal rendering of a Real, round-trip stable.
std::string real_str(const Real& x, int digits = 50);

// n! as an exact integer (memoized; n modest, used by integration kernels).
const Int& factorial(unsigned n);

}  // namespace zetagap
