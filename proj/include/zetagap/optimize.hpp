// Parameter search for the gap bound.  One exact integration pass per
// amplifier candidate (r, P) yields c, c1, c2 with u and theta symbolic;
// every (theta, u, v) move after that is an exact polynomial evaluation, so
// the search costs microseconds per point.  A coarse grid (deterministic,
// ties broken toward lexicographically smallest (theta, u, v)) seeds a
// derivative-free simplex refinement (reflect / expand / contract / shrink)
// over the free coordinates.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetagap/bound.hpp"

namespace zetagap {

struct OptimizerConfig {
    // Grid ranges; *_steps is the number of grid points (1 pins at min).
    Rat theta_min = 0;
    Rat theta_max = Rat(1, 8) - Rat(1, 10000);  // strict theta < 1/8 cap
    int theta_steps = 6;
    Rat u_min = 0;
    Rat u_max = Rat(3, 2);
    int u_steps = 31;
    Rat v_min = 0;
    Rat v_max = 1;
    int v_steps = 21;
    // Amplifier polynomial box: P(x) = 1 + sum_j b_j (x^j - 1) keeps
    // P(1) = 1; each b_j ranges over p_coeff_steps points in the box.
    Rat p_coeff_min = -2;
    Rat p_coeff_max = 2;
    int p_coeff_steps = 5;
    // Refinement budget.
    int max_iterations = 400;
    double shrink_tolerance = 1e-13;
    std::uint64_t seed = 0;  // reserved for randomized restarts

    void validate() const;  // throws std::invalid_argument
};

struct TraceEntry {
    std::string phase;  // "grid" or "refine"
    Rat theta, u, v;
    std::vector<Rat> P_coeffs;
    Real lambda_squared;
};

struct OptimizeOutcome {
    BoundResult best;
    MomentConstants best_constants;  // for the winning (r, P)
    std::vector<TraceEntry> trace;   // strict best-so-far improvements
    std::size_t evaluations = 0;
    bool budget_exhausted = false;   // normal completion, reported as such
};

// P_degree >= 1 explores amplifier polynomials up to that degree over the
// coefficient box; P_degree = 0 fixes P = 1.
OptimizeOutcome optimize_bound(const OptimizerConfig& cfg, int r,
                               int P_degree);

}  // namespace zetagap
