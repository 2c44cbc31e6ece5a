// Desk-scale brute-force checks of the divisor-sum asymptotics that feed the
// moment computation.  Each verifier evaluates the left-hand side by direct
// summation (d_r from a sieve) and the asymptotic main term exactly, then
// reports the ratio at the requested scale together with a three-point trend
// across two decades (y/100, y/10, y); a sound asymptotic drives every
// successive |ratio - 1| down.
//
// Only the unshifted instances are checked; the shifted versions differ by
// factors the downstream computation never needs.
//
//   [2.1]  sum_{n<=y1} d_r(n)/n f(log(y1/n)/log y1) g(log(y2/n)/log y2)
//          ~  (log y1)^r/(r-1)!  *  int_0^1 t^(r-1) f(1-t) g(1－t rho) dt,
//          rho = log y1 / log y2.
//   [2.2]  sum over n1 n2, n3 n4, n1 n3, n2 n4 <= y of
//          prod d_r(n_i)/n_i * f1(..n1n2) f2(..n3n4) f3(..n1n3) f4(..n2n4)
//          ~  (log y)^(4r)/((r-1)!)^4  *  int_T prod t_i^(r-1)
//             f1(1-t1-t2) f2(1-t3-t4) f3(1-t1-t3) f4(1-t2-t4) dt.
//   [2.3]  sum_{m<=y/n} d_{2r}(m)/m (log(y/nm))^j / j!
//          ~  (log(y/n))^(j+2r)/(j+2r)!.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zetagap/rational.hpp"

namespace zetagap {

struct TrendPoint {
    std::uint64_t y;
    Real ratio;
};

struct LemmaReport {
    std::string lemma_id;
    std::uint64_t y1 = 0, y2 = 0;  // y1 == y2 for the single-scale lemmas
    Real lhs, rhs_main, ratio;
    std::vector<TrendPoint> trend;  // >= 3 points spanning >= 2 decades
};

// Test functions are univariate polynomials, coefficients ascending.
using TestPoly = std::vector<Rat>;

// Requires 200 <= y1 <= y2 <= 1e7.
LemmaReport verify_lemma_21(int r, std::uint64_t y1, std::uint64_t y2,
                            const TestPoly& f, const TestPoly& g);

// Requires 200 <= y <= 1e4 (the constrained quadruple sum is O(y^2 polylog)).
LemmaReport verify_lemma_22(int r, std::uint64_t y,
                            const std::array<TestPoly, 4>& f);

// Requires j >= 0, 1 <= n, 200 * n <= y <= 1e7.
LemmaReport verify_lemma_23(int r, int j, std::uint64_t n, std::uint64_t y);

// Exact main-term integral of [2.2] (no log-power prefactor): the T-polytope
// integral of prod t_i^(r-1) f1(1-t1-t2) f2(1-t3-t4) f3(1-t1-t3) f4(1-t2-t4).
Rat lemma_22_main_integral(int r, const std::array<TestPoly, 4>& f);

}  // namespace zetagap
