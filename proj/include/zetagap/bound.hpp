// The gap lower bound computed from the moment constants.
//
// With c = c(theta), c1 = c1(u, theta), c2 = c2(u, theta) and the Wirtinger
// constant lambda0(v) = (1 + 4v + sqrt(1+8v))/8, the bound reads
//
//     Lambda^2 >= ( sqrt(144 v^2 c2^2 + 48 lambda0(v) c c1) - 12 v c2 )
//                 / (16 c1).
//
// Also housed here: the closed-form specializations — the reduced bound
// Lambda^2 >= sqrt(49 v^2 + 105 lambda0(v)) - 7 v (theta=0, r=1, P=1,
// u=1/2), the first-derivative moment-ratio bound sqrt(3), and the Wirtinger
// coefficient (1/(2k-1)) (k sin(pi/2k))^(2k) whose k=2 value 4/3 equals
// 1/(3 lambda0(0)).

#pragma once

#include <optional>
#include <string>

#include "zetagap/integrands.hpp"
#include "zetagap/rational.hpp"

namespace zetagap {

struct BoundParams {
    AmplifierParams amplifier;
    Rat u = Rat(1, 2);  // phase rate of the auxiliary function e^{iu L t}
    Rat v = 0;          // Wirtinger mixing parameter, >= 0

    void validate() const;  // throws std::invalid_argument
};

struct BoundResult {
    Real lambda_squared;
    Real lambda;
    std::optional<Rat> lambda_squared_exact;  // set when the surd closes
    BoundParams params;
    Rat c_value, c1_value, c2_value;
    std::string provenance;  // "exact" or "qmc"
};

// lambda0(v) = (1 + 4v + sqrt(1+8v))/8; increasing, lambda0(0) = 1/4.
Real lambda0(const Rat& v);
// Exact value when 1+8v is a perfect rational square (e.g. v = 22/49).
std::optional<Rat> lambda0_exact(const Rat& v);

// The Lambda^2 lower bound above.  Throws std::domain_error if c1 <= 0
// (formula undefined: invalid parameter point) or c <= 0 (an integration
// result that should be positive; indicates a pipeline bug upstream).
Real lambda_bound(const Real& c, const Real& c1, const Real& c2,
                  const Real& v);
// Exact path: requires lambda0(v) exact and the discriminant a perfect
// rational square; returns Lambda^2.
std::optional<Rat> lambda_bound_exact(const Rat& c, const Rat& c1,
                                      const Rat& c2, const Rat& v);

// Lambda (not Lambda^2) of the reduced theta=0 closed form.
Real hall_reduced_bound(const Rat& v);

// 1/(4^k (2k+1)): coefficient of T (log T)^(2k+1) in the k-th derivative
// moment of Hardy's function.
Rat zmoment_coeff(unsigned k);

// sqrt(3), as the ratio bound kappa^2 = zmoment_coeff(0)/(4 zmoment_coeff(1)).
Real classical_k1_bound();

// (1/(2k-1)) * (k sin(pi/(2k)))^(2k); k=2 gives 4/3.
Real wirtinger_coefficient(int k);

// Evaluates the constants at (params.u, params.amplifier.theta) exactly and
// applies lambda_bound with lambda0(params.v); provenance "exact".
BoundResult evaluate_bound(const BoundParams& params,
                           const MomentConstants& constants);

// Same bound from externally supplied (already evaluated) c-values; used for
// the QMC cross-check path, which never feeds the reported bound.
BoundResult bound_from_values(const BoundParams& params, const Rat& c,
                              const Rat& c1, const Rat& c2,
                              const std::string& provenance);

}  // namespace zetagap
