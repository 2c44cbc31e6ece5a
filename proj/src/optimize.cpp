#include "zetagap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace zetagap {

namespace {

std::vector<Rat> linspace(const Rat& lo, const Rat& hi, int steps) {
    if (steps <= 1) return {lo};
    std::vector<Rat> out;
    out.reserve(steps);
    Rat span = hi - lo;
    for (int i = 0; i < steps; ++i)
        out.push_back(lo + span * Rat(i, steps - 1));
    return out;
}

struct Point {
    Rat theta, u, v;
};

// Lambda^2 at an exact parameter point, or nullopt where the bound is
// undefined (c1 <= 0 marks an invalid point, not an error of the search).
std::optional<Real> objective(const MomentConstants& mc, const Point& pt) {
    Rat c = mc.eval_c(pt.theta);
    Rat c1 = mc.eval_c1(pt.u, pt.theta);
    Rat c2 = mc.eval_c2(pt.u, pt.theta);
    if (c1 <= 0) return std::nullopt;
    return lambda_bound(to_real(c), to_real(c1), to_real(c2), to_real(pt.v));
}

struct Best {
    bool set = false;
    Real value;
    Point pt;

    // Maximize; on exact ties prefer lexicographically smallest
    // (theta, u, v) for determinism.
    bool offer(const Real& val, const Point& cand) {
        if (set) {
            if (val < value) return false;
            if (val == value &&
                std::tie(cand.theta, cand.u, cand.v) >=
                    std::tie(pt.theta, pt.u, pt.v))
                return false;
        }
        set = true;
        value = val;
        pt = cand;
        return true;
    }
};

Rat clamp_rat(const Rat& x, const Rat& lo, const Rat& hi) {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace

void OptimizerConfig::validate() const {
    if (theta_min < 0 || theta_max >= Rat(1, 8) || theta_min > theta_max)
        throw std::invalid_argument("theta range must lie in [0, 1/8)");
    if (v_min < 0 || v_min > v_max)
        throw std::invalid_argument("v range must lie in [0, inf)");
    if (u_min > u_max) throw std::invalid_argument("empty u range");
    if (theta_steps < 1 || u_steps < 1 || v_steps < 1 || p_coeff_steps < 1)
        throw std::invalid_argument("step counts must be >= 1");
    if (max_iterations < 0 || shrink_tolerance <= 0)
        throw std::invalid_argument("bad refinement budget");
}

OptimizeOutcome optimize_bound(const OptimizerConfig& cfg, int r,
                               int P_degree) {
    cfg.validate();
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (P_degree < 0) throw std::invalid_argument("P_degree must be >= 0");

    OptimizeOutcome out;

    // Enumerate amplifier polynomials P(x) = 1 + sum_j b_j (x^j - 1) with
    // each b_j on the coefficient grid; P_degree = 0 yields exactly P = 1.
    std::vector<std::vector<Rat>> candidates;
    {
        std::vector<Rat> axis =
            linspace(cfg.p_coeff_min, cfg.p_coeff_max, cfg.p_coeff_steps);
        std::vector<std::size_t> idx(P_degree, 0);
        while (true) {
            std::vector<Rat> coeffs(P_degree + 1, Rat(0));
            coeffs[0] = 1;
            for (int j = 1; j <= P_degree; ++j) {
                coeffs[0] -= axis[idx[j - 1]];
                coeffs[j] = axis[idx[j - 1]];
            }
            candidates.push_back(std::move(coeffs));
            int j = 0;
            for (; j < P_degree; ++j) {
                if (++idx[j] < axis.size()) break;
                idx[j] = 0;
            }
            if (j == P_degree) break;
        }
    }

    const auto thetas = linspace(cfg.theta_min, cfg.theta_max, cfg.theta_steps);
    const auto us = linspace(cfg.u_min, cfg.u_max, cfg.u_steps);
    const auto vs = linspace(cfg.v_min, cfg.v_max, cfg.v_steps);

    Best global;
    std::vector<Rat> global_P;
    MomentConstants global_mc;

    // The trace records strict global improvements only, so its best-so-far
    // column is strictly increasing; argmax tie-breaks stay out of it.
    bool trace_set = false;
    Real trace_best;
    auto trace_improved = [&](const Real& val) {
        if (trace_set && val <= trace_best) return false;
        trace_set = true;
        trace_best = val;
        return true;
    };

    for (const auto& P : candidates) {
        AmplifierParams amp;
        amp.r = r;
        amp.P_coeffs = P;
        MomentConstants mc = compute_moment_constants(amp);

        Best best;
        for (const auto& th : thetas)
            for (const auto& uu : us)
                for (const auto& vv : vs) {
                    Point pt{th, uu, vv};
                    auto val = objective(mc, pt);
                    ++out.evaluations;
                    if (!val) continue;
                    best.offer(*val, pt);
                    if (trace_improved(*val))
                        out.trace.push_back(
                            {"grid", pt.theta, pt.u, pt.v, P, *val});
                }
        if (!best.set) continue;

        // Refine over the coordinates whose grid was not degenerate.
        struct Axis {
            int which;  // 0 = theta, 1 = u, 2 = v
            Rat lo, hi;
            double h;  // initial simplex offset: half a grid cell
        };
        std::vector<Axis> axes;
        auto add_axis = [&](int which, const Rat& lo, const Rat& hi,
                            int steps) {
            if (steps > 1 && lo < hi)
                axes.push_back({which, lo, hi,
                                static_cast<double>(to_real(hi - lo)) /
                                    (2.0 * (steps - 1))});
        };
        add_axis(0, cfg.theta_min, cfg.theta_max, cfg.theta_steps);
        add_axis(1, cfg.u_min, cfg.u_max, cfg.u_steps);
        add_axis(2, cfg.v_min, cfg.v_max, cfg.v_steps);

        if (!axes.empty() && cfg.max_iterations > 0) {
            const std::size_t n = axes.size();
            auto to_point = [&](const std::vector<double>& x) {
                Point pt = best.pt;
                for (std::size_t i = 0; i < n; ++i) {
                    Rat coord = clamp_rat(Rat(x[i]), axes[i].lo, axes[i].hi);
                    (axes[i].which == 0
                         ? pt.theta
                         : axes[i].which == 1 ? pt.u : pt.v) = coord;
                }
                return pt;
            };
            // Minimize -Lambda^2; undefined points get +inf.
            auto f = [&](const std::vector<double>& x)
                -> std::pair<double, std::optional<std::pair<Point, Real>>> {
                Point pt = to_point(x);
                auto val = objective(mc, pt);
                ++out.evaluations;
                if (!val) return {std::numeric_limits<double>::infinity(), {}};
                return {-static_cast<double>(*val), {{pt, *val}}};
            };

            std::vector<double> x0(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Rat& c = axes[i].which == 0
                                   ? best.pt.theta
                                   : axes[i].which == 1 ? best.pt.u
                                                        : best.pt.v;
                x0[i] = static_cast<double>(to_real(c));
            }
            struct Vertex {
                std::vector<double> x;
                double fx;
            };
            std::vector<Vertex> simplex;
            auto eval_vertex = [&](std::vector<double> x) {
                auto [fx, payload] = f(x);
                if (payload) {
                    best.offer(payload->second, payload->first);
                    if (trace_improved(payload->second))
                        out.trace.push_back({"refine", payload->first.theta,
                                             payload->first.u,
                                             payload->first.v, P,
                                             payload->second});
                }
                return Vertex{std::move(x), fx};
            };
            simplex.push_back(eval_vertex(x0));
            for (std::size_t i = 0; i < n; ++i) {
                auto x = x0;
                x[i] += axes[i].h;
                simplex.push_back(eval_vertex(std::move(x)));
            }

            int iter = 0;
            for (; iter < cfg.max_iterations; ++iter) {
                std::sort(simplex.begin(), simplex.end(),
                          [](const Vertex& a, const Vertex& b) {
                              return a.fx < b.fx;
                          });
                double diam = 0;
                for (std::size_t i = 0; i < n; ++i)
                    diam = std::max(diam, std::abs(simplex.back().x[i] -
                                                   simplex.front().x[i]));
                if (diam < cfg.shrink_tolerance) break;

                std::vector<double> centroid(n, 0.0);
                for (std::size_t k = 0; k + 1 < simplex.size(); ++k)
                    for (std::size_t i = 0; i < n; ++i)
                        centroid[i] += simplex[k].x[i] / n;
                auto blend = [&](double t) {
                    std::vector<double> x(n);
                    for (std::size_t i = 0; i < n; ++i)
                        x[i] = centroid[i] + t * (simplex.back().x[i] -
                                                  centroid[i]);
                    return x;
                };
                Vertex refl = eval_vertex(blend(-1.0));
                if (refl.fx < simplex.front().fx) {
                    Vertex expd = eval_vertex(blend(-2.0));
                    simplex.back() = expd.fx < refl.fx ? expd : refl;
                } else if (refl.fx < simplex[simplex.size() - 2].fx) {
                    simplex.back() = refl;
                } else {
                    Vertex contr = eval_vertex(
                        blend(refl.fx < simplex.back().fx ? -0.5 : 0.5));
                    if (contr.fx <
                        std::min(refl.fx, simplex.back().fx)) {
                        simplex.back() = contr;
                    } else {  // shrink toward the best vertex
                        for (std::size_t k = 1; k < simplex.size(); ++k) {
                            std::vector<double> x(n);
                            for (std::size_t i = 0; i < n; ++i)
                                x[i] = 0.5 * (simplex[0].x[i] +
                                              simplex[k].x[i]);
                            simplex[k] = eval_vertex(std::move(x));
                        }
                    }
                }
            }
            if (iter == cfg.max_iterations) out.budget_exhausted = true;
        }

        if (global.offer(best.value, best.pt) || global_P.empty()) {
            global_P = P;
            global_mc = mc;
        }
    }

    if (!global.set)
        throw std::runtime_error(
            "optimizer found no valid parameter point (c1 <= 0 everywhere)");

    BoundParams bp;
    bp.amplifier.r = r;
    bp.amplifier.P_coeffs = global_P;
    bp.amplifier.theta = global.pt.theta;
    bp.u = global.pt.u;
    bp.v = global.pt.v;
    out.best = evaluate_bound(bp, global_mc);
    out.best_constants = global_mc;
    return out;
}

}  // namespace zetagap
