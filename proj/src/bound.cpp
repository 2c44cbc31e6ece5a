#include "zetagap/bound.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace zetagap {

void BoundParams::validate() const {
    amplifier.validate();
    if (v < 0) throw std::invalid_argument("mixing parameter v must be >= 0");
}

Real lambda0(const Rat& v) {
    if (v < 0) throw std::invalid_argument("lambda0 requires v >= 0");
    return (to_real(1 + 4 * v) + sqrt(to_real(1 + 8 * v))) / 8;
}

std::optional<Rat> lambda0_exact(const Rat& v) {
    if (v < 0) throw std::invalid_argument("lambda0 requires v >= 0");
    auto s = rational_sqrt(1 + 8 * v);
    if (!s) return std::nullopt;
    return (1 + 4 * v + *s) / 8;
}

namespace {

void check_bound_inputs(bool c_pos, bool c1_pos) {
    if (!c1_pos)
        throw std::domain_error(
            "lambda bound undefined: c1 <= 0 (invalid parameter point)");
    if (!c_pos)
        throw std::domain_error(
            "lambda bound: c <= 0, which a correct integration cannot "
            "produce");
}

}  // namespace

Real lambda_bound(const Real& c, const Real& c1, const Real& c2,
                  const Real& v) {
    check_bound_inputs(c > 0, c1 > 0);
    if (v < 0) throw std::invalid_argument("lambda_bound requires v >= 0");
    Real lam0 = (1 + 4 * v + sqrt(1 + 8 * v)) / 8;
    Real disc = 144 * v * v * c2 * c2 + 48 * lam0 * c * c1;
    return (sqrt(disc) - 12 * v * c2) / (16 * c1);
}

std::optional<Rat> lambda_bound_exact(const Rat& c, const Rat& c1,
                                      const Rat& c2, const Rat& v) {
    check_bound_inputs(c > 0, c1 > 0);
    if (v < 0) throw std::invalid_argument("lambda_bound requires v >= 0");
    auto lam0 = lambda0_exact(v);
    if (!lam0) return std::nullopt;
    Rat disc = 144 * v * v * c2 * c2 + 48 * (*lam0) * c * c1;
    auto root = rational_sqrt(disc);
    if (!root) return std::nullopt;
    return (*root - 12 * v * c2) / (16 * c1);
}

Real hall_reduced_bound(const Rat& v) {
    Real vv = to_real(v);
    return sqrt(sqrt(49 * vv * vv + 105 * lambda0(v)) - 7 * vv);
}

Rat zmoment_coeff(unsigned k) {
    Int four_k = 1;
    for (unsigned i = 0; i < k; ++i) four_k *= 4;
    return Rat(Int(1), four_k * (2 * k + 1));
}

Real classical_k1_bound() {
    Rat kappa_sq = zmoment_coeff(0) / (4 * zmoment_coeff(1));
    return sqrt(to_real(kappa_sq));
}

Real wirtinger_coefficient(int k) {
    if (k < 1) throw std::invalid_argument("wirtinger_coefficient needs k >= 1");
    Real pi = boost::math::constants::pi<Real>();
    Real base = k * sin(pi / (2 * k));
    return pow(base, 2 * k) / (2 * k - 1);
}

BoundResult evaluate_bound(const BoundParams& params,
                           const MomentConstants& constants) {
    params.validate();
    const Rat& th = params.amplifier.theta;
    return bound_from_values(params, constants.eval_c(th),
                             constants.eval_c1(params.u, th),
                             constants.eval_c2(params.u, th), "exact");
}

BoundResult bound_from_values(const BoundParams& params, const Rat& c,
                              const Rat& c1, const Rat& c2,
                              const std::string& provenance) {
    BoundResult out;
    out.params = params;
    out.c_value = c;
    out.c1_value = c1;
    out.c2_value = c2;
    out.provenance = provenance;
    out.lambda_squared =
        lambda_bound(to_real(c), to_real(c1), to_real(c2), to_real(params.v));
    out.lambda_squared_exact = lambda_bound_exact(c, c1, c2, params.v);
    if (out.lambda_squared_exact)
        out.lambda_squared = to_real(*out.lambda_squared_exact);
    out.lambda = sqrt(out.lambda_squared);
    return out;
}

}  // namespace zetagap
