#include "zetagap/integrands.hpp"

#include <stdexcept>

namespace zetagap {

namespace {

MultiPoly var(int v) { return MultiPoly::variable(v); }
MultiPoly cst(long n) { return MultiPoly::constant(Rat(n)); }

MultiPoly sum_of(std::initializer_list<int> vars) {
    MultiPoly s;
    for (int v : vars) s += var(v);
    return s;
}

}  // namespace

void AmplifierParams::validate() const {
    if (r < 1) throw std::invalid_argument("amplifier order r must be >= 1");
    bool all_zero = true;
    for (const auto& c : P_coeffs)
        if (c != 0) all_zero = false;
    if (P_coeffs.empty() || all_zero)
        throw std::invalid_argument("P must not be identically zero");
    if (theta < 0 || theta >= Rat(1, 8))
        throw std::invalid_argument("theta must lie in [0, 1/8)");
}

void ShiftVector::validate() const {
    for (int i = 0; i < 4; ++i)
        if (alpha[i] != 0 || beta[i] != 0)
            throw std::invalid_argument(
                "only the zero shift vector is supported");
}

Rat MomentConstants::eval_c(const Rat& theta) const {
    return c.eval({{THETA, theta}});
}
Rat MomentConstants::eval_c1(const Rat& u, const Rat& theta) const {
    return c1.eval({{U, u}, {THETA, theta}});
}
Rat MomentConstants::eval_c2(const Rat& u, const Rat& theta) const {
    return c2.eval({{U, u}, {THETA, theta}});
}

MultiPoly poly_sum_x() { return sum_of({X1, X2, X3, X4}); }
MultiPoly poly_sum_z() { return sum_of({Z1, Z2, Z3, Z4}); }

MultiPoly poly_D12() {
    MultiPoly th = var(THETA);
    return var(V1) - var(V2) +
           th * (var(X1) + var(X2) - var(Z1) - var(Z2) -
                 var(V1) * poly_sum_x() + var(V2) * poly_sum_z());
}

MultiPoly poly_D34() {
    MultiPoly th = var(THETA);
    return var(V1) - var(V2) +
           th * (var(X3) + var(X4) - var(Z3) - var(Z4) -
                 var(V1) * poly_sum_x() + var(V2) * poly_sum_z());
}

MultiPoly poly_A() { return cst(1) - var(THETA) * poly_sum_x(); }
MultiPoly poly_B() { return cst(1) - var(THETA) * poly_sum_z(); }

MultiPoly poly_F(int i) {
    MultiPoly th = var(THETA);
    switch (i) {
        case 1:
            return var(U) - th * sum_of({T1, T2, X1, X2, X3, Z3}) -
                   var(V1) * poly_A() + var(V3) * poly_D12();
        case 2:
            return var(U) - th * sum_of({T3, T4, X4, Z1, Z2, Z4}) -
                   var(V2) * poly_B() - var(V3) * poly_D12();
        case 3:
            return var(U) - th * sum_of({T1, T3, X1, X3, X4, Z1}) -
                   var(V1) * poly_A() + var(V4) * poly_D34();
        case 4:
            return var(U) - th * sum_of({T2, T4, X2, Z2, Z3, Z4}) -
                   var(V2) * poly_B() - var(V4) * poly_D34();
        default:
            throw std::invalid_argument("poly_F index must be 1..4");
    }
}

MultiPoly poly_constraint_slack(int k) {
    const auto& c = RegionSpec::constraints()[k];
    return cst(1) - var(c.ti) - var(c.tj) - var(c.xk) - var(c.zk);
}

MultiPoly poly_P_at(const std::vector<Rat>& P_coeffs, const MultiPoly& arg) {
    // Horner form keeps intermediate sizes down for higher-degree P.
    MultiPoly acc;
    for (auto it = P_coeffs.rbegin(); it != P_coeffs.rend(); ++it)
        acc = acc * arg + MultiPoly::constant(*it);
    return acc;
}

namespace {

// The bare (fourth-moment) integrand without the F factors.
struct BareParts {
    MultiPoly dd;        // D12 * D34
    MultiPoly ab;        // A * B
    MultiPoly extras;    // (x z)^(r-1) (t)^(r^2-1) * four P factors
    bool extras_trivial; // true when extras == 1
};

BareParts bare_parts(const AmplifierParams& params) {
    BareParts out;
    out.dd = poly_D12() * poly_D34();
    out.ab = poly_A() * poly_B();
    MultiPoly extras = cst(1);
    bool trivial = true;
    if (params.r > 1) {
        Monomial m;
        for (int v : {X1, X2, X3, X4, Z1, Z2, Z3, Z4})
            m.e[v] = static_cast<std::uint8_t>(params.r - 1);
        for (int v : {T1, T2, T3, T4})
            m.e[v] = static_cast<std::uint8_t>(params.r * params.r - 1);
        std::vector<MultiPoly::Term> t{{m, Rat(1)}};
        extras = MultiPoly::from_term_map(std::move(t));
        trivial = false;
    }
    bool p_is_one = params.P_coeffs.size() == 1 && params.P_coeffs[0] == 1;
    if (!p_is_one) {
        for (int k = 0; k < 4; ++k)
            extras = extras *
                     poly_P_at(params.P_coeffs, poly_constraint_slack(k));
        trivial = false;
    }
    out.extras = std::move(extras);
    out.extras_trivial = trivial;
    return out;
}

}  // namespace

MultiPoly build_c_integrand(const AmplifierParams& params) {
    params.validate();
    auto parts = bare_parts(params);
    MultiPoly p = parts.ab * parts.dd;
    if (!parts.extras_trivial) p = p * parts.extras;
    return p;
}

MultiPoly build_c1_integrand(const AmplifierParams& params) {
    return build_c_integrand(params) *
           (poly_F(1) * poly_F(2)) * (poly_F(3) * poly_F(4));
}

MultiPoly build_c2_integrand(const AmplifierParams& params) {
    return build_c_integrand(params) * (poly_F(1) * poly_F(3));
}

MomentConstants compute_moment_constants(const AmplifierParams& params) {
    params.validate();
    MomentConstants out;

    // Interleave products with variable elimination so the working set stays
    // far below the fully expanded integrands.  v3 appears only in F1*F2 and
    // v4 only in F3*F4, so each can be integrated out of its own half before
    // the halves ever meet; v1 and v2 leave as soon as the working product is
    // assembled.  The remaining fan-out never expands at all: A*B joins
    // inside the fused final product, the (x z)^(r-1) t^(r^2-1) power rides
    // along as a single monomial on D12*D34, and the four P(slack) factors
    // fold into the triangle integrals as slack weights.
    MultiPoly dd = poly_D12() * poly_D34();
    if (params.r > 1) {
        Monomial m;
        for (int v : {X1, X2, X3, X4, Z1, Z2, Z3, Z4})
            m.e[v] = static_cast<std::uint8_t>(params.r - 1);
        for (int v : {T1, T2, T3, T4})
            m.e[v] = static_cast<std::uint8_t>(params.r * params.r - 1);
        std::vector<MultiPoly::Term> t{{m, Rat(1)}};
        dd = dd * MultiPoly::from_term_map(std::move(t));
    }
    const MultiPoly ab = poly_A() * poly_B();
    const std::vector<Rat>& weights = params.P_coeffs;

    // c: no F factors, and no v3/v4 at all.
    {
        MultiPoly w = dd.integrate_unit_box(V1).integrate_unit_box(V2);
        out.c = integrate_region_product(w, ab, weights);
    }

    // c1: both halves of F1*F2*F3*F4.
    {
        MultiPoly g = (poly_F(1) * poly_F(2)).integrate_unit_box(V3);
        MultiPoly h = (poly_F(3) * poly_F(4)).integrate_unit_box(V4);
        MultiPoly w = (dd * g) * h;
        w = w.integrate_unit_box(V1).integrate_unit_box(V2);
        out.c1 = integrate_region_product(w, ab, weights);
    }

    // c2: the mixed pair F1*F3.
    {
        MultiPoly g =
            (poly_F(1) * poly_F(3)).integrate_unit_box(V3).integrate_unit_box(V4);
        MultiPoly w = dd * g;
        w = w.integrate_unit_box(V1).integrate_unit_box(V2);
        out.c2 = integrate_region_product(w, ab, weights);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factored double-precision evaluation (QMC side)
// ---------------------------------------------------------------------------

MomentIntegrandEvaluator::MomentIntegrandEvaluator(
    const AmplifierParams& params, double u)
    : r_(params.r), theta_(static_cast<double>(to_real(params.theta))), u_(u) {
    params.validate();
    for (const auto& c : params.P_coeffs)
        p_.push_back(static_cast<double>(to_real(c)));
}

MomentIntegrandEvaluator::Factors MomentIntegrandEvaluator::factors(
    const RegionPoint& w) const {
    const double sx = w[X1] + w[X2] + w[X3] + w[X4];
    const double sz = w[Z1] + w[Z2] + w[Z3] + w[Z4];
    const double mix = -w[V1] * sx + w[V2] * sz;
    const double d12 =
        w[V1] - w[V2] + theta_ * (w[X1] + w[X2] - w[Z1] - w[Z2] + mix);
    const double d34 =
        w[V1] - w[V2] + theta_ * (w[X3] + w[X4] - w[Z3] - w[Z4] + mix);
    const double a = 1 - theta_ * sx, b = 1 - theta_ * sz;

    double base = a * b * d12 * d34;
    if (r_ > 1) {
        double xz = w[X1] * w[X2] * w[X3] * w[X4] * w[Z1] * w[Z2] * w[Z3] * w[Z4];
        double tt = w[T1] * w[T2] * w[T3] * w[T4];
        for (int i = 0; i < r_ - 1; ++i) base *= xz;
        for (int i = 0; i < r_ * r_ - 1; ++i) base *= tt;
    }
    if (!(p_.size() == 1 && p_[0] == 1.0)) {
        const double slack[4] = {
            1 - w[T1] - w[T3] - w[X1] - w[Z1],
            1 - w[T2] - w[T4] - w[X2] - w[Z2],
            1 - w[T1] - w[T2] - w[X3] - w[Z3],
            1 - w[T3] - w[T4] - w[X4] - w[Z4],
        };
        for (double s : slack) {
            double acc = 0;
            for (auto it = p_.rbegin(); it != p_.rend(); ++it) acc = acc * s + *it;
            base *= acc;
        }
    }

    Factors f;
    f.base = base;
    f.F1 = u_ - theta_ * (w[T1] + w[T2] + w[X1] + w[X2] + w[X3] + w[Z3]) -
           w[V1] * a + w[V3] * d12;
    f.F2 = u_ - theta_ * (w[T3] + w[T4] + w[X4] + w[Z1] + w[Z2] + w[Z4]) -
           w[V2] * b - w[V3] * d12;
    f.F3 = u_ - theta_ * (w[T1] + w[T3] + w[X1] + w[X3] + w[X4] + w[Z1]) -
           w[V1] * a + w[V4] * d34;
    f.F4 = u_ - theta_ * (w[T2] + w[T4] + w[X2] + w[Z2] + w[Z3] + w[Z4]) -
           w[V2] * b - w[V4] * d34;
    return f;
}

double MomentIntegrandEvaluator::eval_c(const RegionPoint& w) const {
    return factors(w).base;
}
double MomentIntegrandEvaluator::eval_c1(const RegionPoint& w) const {
    auto f = factors(w);
    return f.base * f.F1 * f.F2 * f.F3 * f.F4;
}
double MomentIntegrandEvaluator::eval_c2(const RegionPoint& w) const {
    auto f = factors(w);
    return f.base * f.F1 * f.F3;
}

}  // namespace zetagap
