#include "zetagap/region.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zetagap/qmc.hpp"  // splitmix64, used to mix cache keys

namespace zetagap {

const std::array<RegionSpec::Constraint, 4>& RegionSpec::constraints() {
    // t1+t2+x3+z3 <= 1, t3+t4+x4+z4 <= 1, t1+t3+x1+z1 <= 1, t2+t4+x2+z2 <= 1,
    // listed so that entry k carries the pair (x_{k+1}, z_{k+1}).
    static const std::array<Constraint, 4> cs = {{
        {T1, T3, X1, Z1},
        {T2, T4, X2, Z2},
        {T1, T2, X3, Z3},
        {T3, T4, X4, Z4},
    }};
    return cs;
}

MultiPoly RegionSpec::budget(int k) {
    const auto& c = constraints()[k];
    return MultiPoly::constant(Rat(1)) - MultiPoly::variable(c.ti) -
           MultiPoly::variable(c.tj);
}

Rat beta_integral(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw std::domain_error("beta_integral needs m,n >= 1");
    return Rat(factorial(m - 1) * factorial(n - 1), factorial(m + n - 1));
}

MultiPoly integrate_triangle_pair(const MultiPoly& p, int xvar, int zvar,
                                  const MultiPoly& budget) {
    if (budget.contains_var(xvar) || budget.contains_var(zvar))
        throw std::invalid_argument(
            "triangle budget must not involve the variables being integrated");
    // Cache budget^(a+b+2) across terms; the same small powers recur heavily.
    std::vector<MultiPoly> powers{MultiPoly::constant(Rat(1))};
    auto budget_pow = [&](int k) -> const MultiPoly& {
        while (static_cast<int>(powers.size()) <= k)
            powers.push_back(powers.back() * budget);
        return powers[k];
    };
    std::vector<MultiPoly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        int a = m.degree_in(xvar), b = m.degree_in(zvar);
        Rat kernel(factorial(a) * factorial(b), factorial(a + b + 2));
        Monomial rest = m;
        rest.e[xvar] = 0;
        rest.e[zvar] = 0;
        const Rat scale = Rat(c * kernel);
        for (const auto& [mb, cb] : budget_pow(a + b + 2).terms()) {
            Monomial prod = rest;
            for (int i = 0; i < kNumVars; ++i)
                prod.e[i] = static_cast<std::uint8_t>(prod.e[i] + mb.e[i]);
            out.push_back({prod, Rat(scale * cb)});
        }
    }
    return MultiPoly::from_term_map(std::move(out));
}

Rat t_monomial_chamber(int a, int b, int c, int d) {
    // {t2 <= t3}: integrate t1 over [0, 1-t3], t4 over [0, 1-t3], t2 over
    // [0, t3], leaving int_0^1 t3^(b+c+1) (1-t3)^(a+d+2) dt3 / ((a+1)(b+1)(d+1)).
    return beta_integral(b + c + 2, a + d + 3) /
           (Rat(a + 1) * Rat(b + 1) * Rat(d + 1));
}

Rat t_monomial_chamber_mirror(int a, int b, int c, int d) {
    // {t3 <= t2}: same with the roles of t2 and t3 exchanged.
    return beta_integral(b + c + 2, a + d + 3) /
           (Rat(a + 1) * Rat(c + 1) * Rat(d + 1));
}

Rat integrate_t_monomial(int a, int b, int c, int d) {
    return t_monomial_chamber(a, b, c, d) + t_monomial_chamber_mirror(a, b, c, d);
}

MultiPoly integrate_t_polytope(const MultiPoly& q) {
    // Termwise over the residual t-polytope; memoize the exponent quadruples.
    std::map<std::tuple<int, int, int, int>, Rat> cache;
    std::vector<MultiPoly::Term> out;
    out.reserve(q.num_terms());
    for (const auto& [m, coeff] : q.terms()) {
        auto key = std::make_tuple(m.degree_in(T1), m.degree_in(T2),
                                   m.degree_in(T3), m.degree_in(T4));
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto [a, b, c, d] = key;
            it = cache.emplace(key, integrate_t_monomial(a, b, c, d)).first;
        }
        Monomial rest = m;
        rest.e[T1] = rest.e[T2] = rest.e[T3] = rest.e[T4] = 0;
        out.push_back({rest, coeff * it->second});
    }
    return MultiPoly::from_term_map(std::move(out));
}

namespace {

// The termwise region integral factors through two caches.
//
// Eliminating the triangle pair (x_k, z_k) turns x^a z^b into
// a! b! / (a+b+2)! times the k-th budget raised to the a+b+2, so after all
// four pairs a term needs one t-polytope integral of
//     prod_k budget_k^{m_k} * t1^{c1} t2^{c2} t3^{c3} t4^{c4},
// with budget_k kept as a symbol rather than expanded.  `profile_integral`
// computes that by peeling one budget factor at a time,
//     B_k^m t^c  =  B_k^{m-1} t^c - B_k^{m-1} t^{c+ti} - B_k^{m-1} t^{c+tj},
// down to the closed-form t-monomial integral, memoized on the whole
// (m1..m4, c1..c4) state so shared substates are computed once.
//
// On top of that, `reduced_factor` caches the complete per-monomial constant
// (four triangle kernels times the profile integral) keyed by the twelve
// x/z/t exponents, which makes the hot fused-product loop one hash lookup
// and one multiply per term pair.

using Key128 = std::pair<std::uint64_t, std::uint64_t>;

struct Key128Hash {
    std::size_t operator()(const Key128& k) const {
        return static_cast<std::size_t>(
            splitmix64(k.first ^ splitmix64(k.second)));
    }
};

struct ProfileState {
    std::array<int, 4> m;  // symbolic budget powers, one per constraint
    std::array<int, 4> c;  // t1..t4 exponents

    Key128 key() const {
        std::uint64_t lo = 0, hi = 0;
        for (int i = 0; i < 4; ++i) {
            lo = (lo << 16) | static_cast<std::uint64_t>(m[i]);
            hi = (hi << 16) | static_cast<std::uint64_t>(c[i]);
        }
        return {lo, hi};
    }
};

using ProfileCache = std::unordered_map<Key128, Rat, Key128Hash>;

const Rat& profile_integral(const ProfileState& s, ProfileCache& cache) {
    auto it = cache.find(s.key());
    if (it != cache.end()) return it->second;

    Rat value;
    int k = 0;
    while (k < 4 && s.m[k] == 0) ++k;
    if (k == 4) {
        value = integrate_t_monomial(s.c[0], s.c[1], s.c[2], s.c[3]);
    } else {
        const auto& ts = RegionSpec::constraints()[k];
        ProfileState down = s;
        --down.m[k];
        value = profile_integral(down, cache);
        ProfileState ti = down;
        ++ti.c[ts.ti - T1];
        value -= profile_integral(ti, cache);
        ProfileState tj = down;
        ++tj.c[ts.tj - T1];
        value -= profile_integral(tj, cache);
    }
    return cache.emplace(s.key(), std::move(value)).first->second;
}

ProfileCache& shared_profile_cache() {
    static ProfileCache cache;
    return cache;
}

using SigCache = std::unordered_map<Key128, Rat, Key128Hash>;

Key128 signature_key(const Monomial& m) {
    std::uint64_t lo = 0, hi = 0;
    for (int j = 0; j < 4; ++j) {
        lo = (lo << 16) |
             (static_cast<std::uint64_t>(m.e[X1 + j]) << 8 | m.e[Z1 + j]);
        hi = (hi << 8) | m.e[T1 + j];
    }
    return {lo, hi};
}

// Complete constant for one x/z/t exponent pattern: the product of the four
// triangle kernels and the t-polytope profile integral, with each pair's
// slack optionally weighted by the polynomial sum_d w[d] slack^d.  The d-th
// slack power joins the pair's triangle integral in closed form,
//     iint_{x+z<=s} x^a z^b (s-x-z)^d  =  a! b! d! / (a+b+d+2)!  s^(a+b+d+2),
// so a degree-D weight fans one profile out into at most (D+1)^4.
Rat reduced_factor_fresh(const Monomial& m, const std::vector<Rat>& weights) {
    const int degree = static_cast<int>(weights.size()) - 1;
    std::array<int, 4> xa{}, zb{};
    ProfileState s{};
    for (int k = 0; k < 4; ++k) {
        const auto& ts = RegionSpec::constraints()[k];
        xa[k] = m.e[ts.xk];
        zb[k] = m.e[ts.zk];
        s.c[k] = 0;
    }
    for (int j = 0; j < 4; ++j) s.c[j] = m.e[T1 + j];

    Rat total(0);
    std::array<int, 4> d{};
    for (;;) {
        Rat term(1);
        bool live = true;
        for (int k = 0; k < 4 && live; ++k) {
            const Rat& w = weights[d[k]];
            if (w == 0) {
                live = false;
                break;
            }
            const int a = xa[k], b = zb[k], dk = d[k];
            term *= w * Rat(factorial(a) * factorial(b) * factorial(dk),
                            factorial(a + b + dk + 2));
            s.m[k] = a + b + dk + 2;
        }
        if (live) {
            term *= profile_integral(s, shared_profile_cache());
            total += term;
        }
        int k = 0;
        while (k < 4 && d[k] == degree) d[k++] = 0;
        if (k == 4) break;
        ++d[k];
    }
    return total;
}

const std::vector<Rat>& unit_weights() {
    static const std::vector<Rat> w{Rat(1)};
    return w;
}

// Finish one product term: integrate the v's over the unit box, the x/z
// pairs over their (weighted) triangles, and the t's over the residual
// polytope, then fold what is left (u and theta exponents only) into the
// accumulator.
struct RegionAccumulator {
    const std::vector<Rat>& weights;
    SigCache& sig_cache;
    std::unordered_map<Monomial, Rat, MonomialHash> acc;

    void add(const Monomial& mono, const Rat& coeff) {
        auto sig = sig_cache.find(signature_key(mono));
        if (sig == sig_cache.end())
            sig = sig_cache
                      .emplace(signature_key(mono),
                               reduced_factor_fresh(mono, weights))
                      .first;
        Rat value = coeff * sig->second;
        for (int v : {V1, V2, V3, V4})
            if (const int e = mono.e[v]) value /= e + 1;
        Monomial rest{};
        rest.e[U] = mono.e[U];
        rest.e[THETA] = mono.e[THETA];
        auto [it, fresh] = acc.try_emplace(rest, std::move(value));
        if (!fresh) it->second += value;
    }

    MultiPoly collect() && {
        std::vector<MultiPoly::Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) out.push_back({m, std::move(c)});
        return MultiPoly::from_term_map(std::move(out));
    }
};

SigCache& shared_sig_cache() {
    static SigCache cache;
    return cache;
}

MultiPoly fused_product(const MultiPoly& p, const MultiPoly& q,
                        RegionAccumulator& sink) {
    for (const auto& [mq, cq] : q.terms()) {
        for (const auto& [mp, cp] : p.terms()) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) {
                const int e = mp.e[i] + mq.e[i];
                if (e > 255)
                    throw std::overflow_error("exponent exceeds 255 in product");
                m.e[i] = static_cast<std::uint8_t>(e);
            }
            sink.add(m, Rat(cp * cq));
        }
    }
    return std::move(sink).collect();
}

}  // namespace

MultiPoly integrate_region(const MultiPoly& p) {
    // Monomials are fixed-width over the 18-name universe, so a foreign
    // variable is unrepresentable; the only reachable misuse is a polynomial
    // already free of the integration variables, which flows through fine.
    RegionAccumulator sink{unit_weights(), shared_sig_cache(), {}};
    for (const auto& [m, c] : p.terms()) sink.add(m, c);
    return std::move(sink).collect();
}

MultiPoly integrate_region_product(const MultiPoly& p, const MultiPoly& q) {
    RegionAccumulator sink{unit_weights(), shared_sig_cache(), {}};
    return fused_product(p, q, sink);
}

MultiPoly integrate_region_product(const MultiPoly& p, const MultiPoly& q,
                                   const std::vector<Rat>& slack_weights) {
    if (slack_weights.empty())
        throw std::invalid_argument("slack weight polynomial needs >= 1 coefficient");
    if (slack_weights.size() == 1) {
        // A constant weight is just a scalar on every constraint.
        const Rat w0 = slack_weights[0];
        return integrate_region_product(p, q).scaled(w0 * w0 * w0 * w0);
    }
    SigCache local;
    RegionAccumulator sink{slack_weights, local, {}};
    return fused_product(p, q, sink);
}

Rat integrate_region_scalar(const MultiPoly& p) {
    return integrate_region(p).constant_value();
}

const Rat& region_volume() {
    static const Rat vol =
        integrate_region_scalar(MultiPoly::constant(Rat(1)));
    return vol;
}

Rat t_polytope_volume() { return integrate_t_monomial(0, 0, 0, 0); }

}  // namespace zetagap
