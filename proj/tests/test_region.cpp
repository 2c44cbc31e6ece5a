// Exact integration pipeline over the constrained region: Dirichlet triangle
// kernel, residual t-polytope closed form, full-region values, and the
// relabeling symmetries the region geometry implies.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <random>

#include "zetagap/region.hpp"

using namespace zetagap;

namespace {

MultiPoly var(int v, int k = 1) { return MultiPoly::variable(v, k); }

std::array<int, kNumVars> identity_perm() {
    std::array<int, kNumVars> p;
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void swap_vars(std::array<int, kNumVars>& p, int a, int b) {
    std::swap(p[a], p[b]);
}

MultiPoly relabel(const MultiPoly& p, const std::array<int, kNumVars>& perm) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.num_terms());
    for (const auto& [m, c] : p.terms()) {
        Monomial m2;
        for (int i = 0; i < kNumVars; ++i) m2.e[perm[i]] = m.e[i];
        out.push_back({m2, c});
    }
    return MultiPoly::from_term_map(std::move(out));
}

// Random polynomial in the sixteen integration variables only.
MultiPoly random_integrand(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> pick_var(0, 15);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 5);
    MultiPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        MultiPoly term = MultiPoly::constant(Rat(num(rng), den(rng)));
        for (int j = 0; j < 3; ++j) {
            const int e = expo(rng);
            if (e > 0) term *= var(pick_var(rng), e);
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("integer Beta function") {
    CHECK(beta_integral(1, 1) == 1);
    CHECK(beta_integral(2, 3) == Rat(1, 12));
    CHECK(beta_integral(3, 2) == Rat(1, 12));
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned n = 1; n <= 6; ++n) {
            CHECK(beta_integral(m, n) == beta_integral(n, m));
            // Pascal-style recurrence B(m,n) = B(m+1,n) + B(m,n+1).
            CHECK(beta_integral(m, n) ==
                  beta_integral(m + 1, n) + beta_integral(m, n + 1));
        }
}

TEST_CASE("t-polytope monomial integrals") {
    SUBCASE("volume") {
        CHECK(integrate_t_monomial(0, 0, 0, 0) == Rat(1, 6));
        CHECK(t_polytope_volume() == Rat(1, 6));
    }
    SUBCASE("hand-checked first moments") {
        // All four coordinates have the same mean by symmetry.
        CHECK(integrate_t_monomial(1, 0, 0, 0) == Rat(1, 20));
        CHECK(integrate_t_monomial(0, 1, 0, 0) == Rat(1, 20));
        CHECK(integrate_t_monomial(0, 0, 1, 0) == Rat(1, 20));
        CHECK(integrate_t_monomial(0, 0, 0, 1) == Rat(1, 20));
    }
    SUBCASE("chamber split sums to the closed form") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 3; ++c)
                    for (int d = 0; d <= 3; ++d)
                        CHECK(t_monomial_chamber(a, b, c, d) +
                                  t_monomial_chamber_mirror(a, b, c, d) ==
                              integrate_t_monomial(a, b, c, d));
    }
    SUBCASE("symmetry under (t2,t3) and (t1,t4) exchange") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 3; ++c)
                    for (int d = 0; d <= 3; ++d) {
                        const Rat base = integrate_t_monomial(a, b, c, d);
                        CHECK(base > 0);
                        CHECK(integrate_t_monomial(a, c, b, d) == base);
                        CHECK(integrate_t_monomial(d, b, c, a) == base);
                    }
    }
    SUBCASE("mirror chamber is the (b,c) swap of the first") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 3; ++c)
                    for (int d = 0; d <= 3; ++d)
                        CHECK(t_monomial_chamber_mirror(a, b, c, d) ==
                              t_monomial_chamber(a, c, b, d));
    }
}

TEST_CASE("triangle-pair kernel") {
    const MultiPoly s = RegionSpec::budget(0);  // 1 - t1 - t3
    SUBCASE("Dirichlet closed form for monomials") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                const MultiPoly p = var(Var::X1, a) * var(Var::Z1, b);
                const Rat k(factorial(a) * factorial(b),
                            factorial(a + b + 2));
                CHECK(integrate_triangle_pair(p, Var::X1, Var::Z1, s) ==
                      s.pow(a + b + 2).scaled(k));
            }
    }
    SUBCASE("a constant integrand picks up the triangle area") {
        CHECK(integrate_triangle_pair(MultiPoly::constant(1), Var::X2,
                                      Var::Z2, RegionSpec::budget(1)) ==
              RegionSpec::budget(1).pow(2).scaled(Rat(1, 2)));
    }
    SUBCASE("coefficients in other variables pass through") {
        const MultiPoly p = var(Var::T1) * var(Var::X1);
        CHECK(integrate_triangle_pair(p, Var::X1, Var::Z1, s) ==
              var(Var::T1) * s.pow(3).scaled(Rat(1, 6)));
    }
    SUBCASE("linearity") {
        std::mt19937_64 rng(5);
        const MultiPoly a = var(Var::X3, 2) + var(Var::Z3);
        const MultiPoly b = var(Var::X3) * var(Var::Z3);
        const MultiPoly s2 = RegionSpec::budget(2);
        CHECK(integrate_triangle_pair(a + b, Var::X3, Var::Z3, s2) ==
              integrate_triangle_pair(a, Var::X3, Var::Z3, s2) +
                  integrate_triangle_pair(b, Var::X3, Var::Z3, s2));
    }
}

TEST_CASE("t-polytope stage on polynomials") {
    SUBCASE("termwise agreement with the monomial rule") {
        const MultiPoly p = var(Var::T1) * var(Var::T2) -
                            MultiPoly::constant(Rat(1, 3)) * var(Var::T4, 2);
        const Rat expected = integrate_t_monomial(1, 1, 0, 0) -
                             Rat(1, 3) * integrate_t_monomial(0, 0, 0, 2);
        CHECK(integrate_t_polytope(p).constant_value() == expected);
    }
    SUBCASE("symbolic parameters survive") {
        const MultiPoly p = var(Var::U) * var(Var::T1);
        CHECK(integrate_t_polytope(p) ==
              var(Var::U).scaled(Rat(1, 20)));
    }
}

TEST_CASE("full region integrals") {
    SUBCASE("volume") {
        CHECK(region_volume() == Rat(181, 2661120));
        CHECK(integrate_region(MultiPoly::constant(1)).constant_value() ==
              region_volume());
        CHECK(integrate_region_scalar(MultiPoly::constant(1)) ==
              region_volume());
    }
    SUBCASE("x and z play symmetric roles within a pair") {
        CHECK(integrate_region_scalar(var(Var::X1) - var(Var::Z1)) == 0);
        CHECK(integrate_region_scalar(var(Var::X4) * var(Var::Z4)) ==
              integrate_region_scalar(var(Var::Z4) * var(Var::X4)));
    }
    SUBCASE("unconstrained v-coordinates integrate independently") {
        CHECK(integrate_region_scalar(var(Var::V1)) == region_volume() / 2);
        CHECK(integrate_region_scalar(var(Var::V2, 2)) ==
              region_volume() / 3);
    }
    SUBCASE("symbolic parameters factor out") {
        const MultiPoly p = var(Var::U) * var(Var::THETA) * var(Var::X1);
        const Rat m1 = integrate_region_scalar(var(Var::X1));
        CHECK(integrate_region(p) ==
              var(Var::U) * var(Var::THETA).scaled(m1));
    }
}

TEST_CASE("region relabeling symmetries") {
    std::mt19937_64 rng(29);

    // x <-> z within every pair, v1 <-> v2, v3 <-> v4.
    auto mirror = identity_perm();
    for (int j = 0; j < 4; ++j) swap_vars(mirror, Var::X1 + j, Var::Z1 + j);
    swap_vars(mirror, Var::V1, Var::V2);
    swap_vars(mirror, Var::V3, Var::V4);

    // t2 <-> t3 with pairs (x1,z1) <-> (x3,z3), (x2,z2) <-> (x4,z4).
    auto rotate = identity_perm();
    swap_vars(rotate, Var::T2, Var::T3);
    swap_vars(rotate, Var::X1, Var::X3);
    swap_vars(rotate, Var::Z1, Var::Z3);
    swap_vars(rotate, Var::X2, Var::X4);
    swap_vars(rotate, Var::Z2, Var::Z4);

    // t1 <-> t4 with pairs (x1,z1) <-> (x4,z4), (x2,z2) <-> (x3,z3).
    auto flip = identity_perm();
    swap_vars(flip, Var::T1, Var::T4);
    swap_vars(flip, Var::X1, Var::X4);
    swap_vars(flip, Var::Z1, Var::Z4);
    swap_vars(flip, Var::X2, Var::X3);
    swap_vars(flip, Var::Z2, Var::Z3);

    for (int trial = 0; trial < 8; ++trial) {
        const MultiPoly p = random_integrand(rng);
        const MultiPoly base = integrate_region(p);
        CHECK(integrate_region(relabel(p, mirror)) == base);
        CHECK(integrate_region(relabel(p, rotate)) == base);
        CHECK(integrate_region(relabel(p, flip)) == base);
    }
}
