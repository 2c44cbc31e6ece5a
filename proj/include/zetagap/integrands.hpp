// The moment-constant integrands and their exact integrals.
//
// The amplified fourth moment of zeta on the critical line has a main-term
// constant given by a 16-dimensional polynomial integral over the region R
// (at zero shifts every exponential weight collapses to 1 and the integrand
// becomes the polynomial built here).  Three such constants drive the gap
// bound for f(t) = e^{iu(log T)t} * zeta * amplifier:
//
//   c        from int |f|^4      — the bare integrand;
//   c1(u)    from int |f'|^4     — the bare integrand times F1*F2*F3*F4;
//   c2(u)    from int |f f'|^2   — the bare integrand times F1*F3;
//
// where, with Sx = x1+..+x4, Sz = z1+..+z4,
//
//   D12 = v1 - v2 + theta*(x1+x2-z1-z2 - v1*Sx + v2*Sz)
//   D34 = v1 - v2 + theta*(x3+x4-z3-z4 - v1*Sx + v2*Sz)
//   A   = 1 - theta*Sx,   B = 1 - theta*Sz
//   F1  = u - theta*(t1+t2+x1+x2+x3+z3) - v1*A + v3*D12
//   F2  = u - theta*(t3+t4+x4+z1+z2+z4) - v2*B - v3*D12
//   F3  = u - theta*(t1+t3+x1+x3+x4+z1) - v1*A + v4*D34
//   F4  = u - theta*(t2+t4+x2+z2+z3+z4) - v2*B - v4*D34
//
// and the bare integrand is
//
//   A * B * D12 * D34 * (x1..x4 z1..z4)^(r-1) * (t1..t4)^(r^2-1)
//     * P(1-t1-t2-x3-z3) * P(1-t3-t4-x4-z4) * P(1-t1-t3-x1-z1)
//     * P(1-t2-t4-x2-z2).
//
// Both u and theta stay symbolic through integration, so one integration
// pass per (r, P) yields exact polynomials c(theta), c1(u,theta),
// c2(u,theta) that parameter searches can then evaluate exactly.

#pragma once

#include <vector>

#include "zetagap/qmc.hpp"
#include "zetagap/region.hpp"

namespace zetagap {

struct AmplifierParams {
    int r = 1;                        // divisor order of the amplifier
    std::vector<Rat> P_coeffs{Rat(1)};  // P(x) = sum_j P_coeffs[j] x^j
    Rat theta = 0;                    // amplifier length exponent, in [0, 1/8)

    void validate() const;            // throws std::invalid_argument
};

// Shift vectors are part of the moment constant's general signature, but
// only the zero shift is meaningful here (nonzero shifts make the integrand
// non-polynomial); constructing any other vector throws.
struct ShiftVector {
    std::array<Rat, 4> alpha{}, beta{};
    void validate() const;
};

struct MomentConstants {
    MultiPoly c;    // polynomial in theta
    MultiPoly c1;   // polynomial in (u, theta), degree 4 in u
    MultiPoly c2;   // polynomial in (u, theta), degree 2 in u

    Rat eval_c(const Rat& theta) const;
    Rat eval_c1(const Rat& u, const Rat& theta) const;
    Rat eval_c2(const Rat& u, const Rat& theta) const;
};

// Individual factors (exposed for tests and the factored QMC evaluator).
MultiPoly poly_sum_x();
MultiPoly poly_sum_z();
MultiPoly poly_D12();
MultiPoly poly_D34();
MultiPoly poly_A();
MultiPoly poly_B();
MultiPoly poly_F(int i);                       // i in 1..4
MultiPoly poly_P_at(const std::vector<Rat>& P_coeffs, const MultiPoly& arg);
MultiPoly poly_constraint_slack(int k);        // 1 - t_i - t_j - x_k - z_k

// Fully expanded integrands (theta and u symbolic).  The c1 integrand for
// r=1, P=1 already holds ~5.7 million terms; prefer compute_moment_constants,
// which interleaves products with variable elimination, for actual integrals.
MultiPoly build_c_integrand(const AmplifierParams& params);
MultiPoly build_c1_integrand(const AmplifierParams& params);
MultiPoly build_c2_integrand(const AmplifierParams& params);

// One staged integration pass; exact.  Equals integrate_region of the
// corresponding build_*_integrand, term for term.
MomentConstants compute_moment_constants(const AmplifierParams& params);

// Double-precision evaluator of the three integrands at a region point,
// computed from the factored form above (shares no code with the exact
// expansion pipeline; this is the independence that makes the QMC gate a
// genuine cross-check).
class MomentIntegrandEvaluator {
  public:
    MomentIntegrandEvaluator(const AmplifierParams& params, double u);

    double eval_c(const RegionPoint& w) const;
    double eval_c1(const RegionPoint& w) const;
    double eval_c2(const RegionPoint& w) const;

  private:
    struct Factors {
        double base, F1, F2, F3, F4;
    };
    Factors factors(const RegionPoint& w) const;

    int r_;
    std::vector<double> p_;
    double theta_, u_;
};

}  // namespace zetagap
