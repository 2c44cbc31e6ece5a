// Exact integration over the constrained 16-variable region
//
//   R = { 0 <= x_j, z_j, t_j, v_j <= 1 } intersected with
//       { t1+t2+x3+z3 <= 1,  t3+t4+x4+z4 <= 1,
//         t1+t3+x1+z1 <= 1,  t2+t4+x2+z2 <= 1 }.
//
// The pipeline eliminates variables in a fixed order chosen so that every
// step has a closed form:
//
//   1. v1..v4 over the unit box (plain power-rule integration);
//   2. each (x_k, z_k) pair over the triangle x,z >= 0, x+z <= s_k, where
//      the budget s_k = 1 - t_i - t_j is the slack of the one constraint
//      containing that pair.  The kernel is the Dirichlet integral
//          int_{x,z>=0, x+z<=s} x^a z^b dx dz = a! b! / (a+b+2)! * s^(a+b+2);
//   3. the residual t-polytope T = { t in [0,1]^4 : t1+t2 <= 1, t3+t4 <= 1,
//      t1+t3 <= 1, t2+t4 <= 1 }, monomial by monomial, via a two-chamber
//      split that reduces every chamber to a Beta function.
//
// Only u and theta may survive; the result is an exact polynomial in them
// (a constant when neither was present).

#pragma once

#include "zetagap/poly.hpp"

namespace zetagap {

// The four linear constraints, as (t_i, t_j, x_k, z_k) index quadruples:
// t_i + t_j + x_k + z_k <= 1.  Pair k's triangle budget is 1 - t_i - t_j.
struct RegionSpec {
    struct Constraint {
        int ti, tj, xk, zk;
    };
    static const std::array<Constraint, 4>& constraints();
    // Budget polynomial 1 - t_i - t_j for the pair (x_k, z_k), k in 0..3.
    static MultiPoly budget(int k);
};

// int_{x,z>=0, x+z<=budget} p dx dz with p a polynomial in xvar, zvar whose
// coefficients are free of both; budget must not involve xvar or zvar.
MultiPoly integrate_triangle_pair(const MultiPoly& p, int xvar, int zvar,
                                  const MultiPoly& budget);

// int_T t1^a t2^b t3^c t4^d dt over the residual polytope T.
//
// T splits into the chamber {t2 <= t3}, where the four constraints reduce to
// t1 <= 1-t3, t4 <= 1-t3, and its mirror {t3 <= t2}.  Each chamber is a Beta
// integral; the two pieces are exposed separately so the closed-form total
//     Beta(b+c+2, a+d+3) * (b+c+2) / ((a+1)(b+1)(c+1)(d+1))
// can be validated against their sum.
Rat t_monomial_chamber(int a, int b, int c, int d);         // {t2 <= t3}
Rat t_monomial_chamber_mirror(int a, int b, int c, int d);  // {t3 <= t2}
Rat integrate_t_monomial(int a, int b, int c, int d);

// Beta(m, n) = (m-1)! (n-1)! / (m+n-1)! for positive integer arguments.
Rat beta_integral(unsigned m, unsigned n);

// Termwise integral over T alone (the final pipeline stage): eliminates
// t1..t4, leaves any other variables untouched.
MultiPoly integrate_t_polytope(const MultiPoly& p);

// Full pipeline.  p may involve only the 16 integration variables plus u and
// theta; the result is a polynomial in u and theta (constant if absent).
MultiPoly integrate_region(const MultiPoly& p);

// integrate_region(p * q) without materializing the expanded product; the
// moment-constant pipeline uses this for its largest factor product.
MultiPoly integrate_region_product(const MultiPoly& p, const MultiPoly& q);

// Same, with each constraint's slack 1 - ti - tj - xk - zk weighted by the
// polynomial sum_d slack_weights[d] slack^d.  The weight joins each pair's
// triangle integral in closed form instead of being expanded, so high-degree
// weights cost almost nothing extra.
MultiPoly integrate_region_product(const MultiPoly& p, const MultiPoly& q,
                                   const std::vector<Rat>& slack_weights);

// Convenience for integrands without symbolic parameters.
Rat integrate_region_scalar(const MultiPoly& p);

// Exact volume of R (integrate_region(1); cached).
const Rat& region_volume();

// Exact volume of the t-polytope T (= integrate_t_monomial(0,0,0,0)).
Rat t_polytope_volume();

}  // namespace zetagap
