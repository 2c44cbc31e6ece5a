// Multiplicative-function utilities: the generalized divisor function d_r,
// bulk d_r tables for summation at desk scale, and the arithmetic constant
//
//     a_r = prod_p (1 - 1/p)^(r^2) * sum_{j>=0} d_r(p^j)^2 / p^j,
//
// truncated over primes up to a cutoff.  d_r(n) counts ordered r-tuples of
// positive integers with product n; it is multiplicative with
// d_r(p^k) = C(k+r-1, r-1).

#pragma once

#include <cstdint>
#include <vector>

#include "zetagap/rational.hpp"

namespace zetagap {

// C(n, k), exact.
Int binomial(unsigned n, unsigned k);

// d_r(n) by trial-division factorization; r >= 1, n >= 1.
Int divisor_d(int r, std::uint64_t n);

// d_r(n) for n = 1..limit (index 0 is 0), by r-1 Dirichlet convolutions of
// the all-ones sequence; values must fit in uint64 (they do at desk scale).
std::vector<std::uint64_t> divisor_table(int r, std::size_t limit);

// Primes <= limit, by Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Truncated Euler product for a_r over primes <= prime_cutoff; each local
// factor's series is summed until the tail is below 1e-20 relative.
Real euler_a(int r, std::uint64_t prime_cutoff);

}  // namespace zetagap
