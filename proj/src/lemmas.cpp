#include "zetagap/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetagap/arith.hpp"
#include "zetagap/integrands.hpp"
#include "zetagap/poly.hpp"
#include "zetagap/region.hpp"

namespace zetagap {

namespace {

std::array<std::uint64_t, 3> trend_scales(std::uint64_t y) {
    return {y / 100, y / 10, y};
}

int degree_of(const TestPoly& p) {
    int d = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) d = static_cast<int>(i);
    return d;
}

// p(a + b s), coefficients in s; exact.
TestPoly compose_affine(const TestPoly& p, const Rat& a, const Rat& b) {
    TestPoly acc{Rat(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        TestPoly next(acc.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * a;
            next[i + 1] += acc[i] * b;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return acc;
}

std::vector<Real> compose_affine_real(const TestPoly& p, const Real& a,
                                      const Real& b) {
    std::vector<Real> acc{Real(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::vector<Real> next(acc.size() + 1, Real(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * a;
            next[i + 1] += acc[i] * b;
        }
        next[0] += to_real(*it);
        acc = std::move(next);
    }
    return acc;
}

std::vector<double> to_doubles(const TestPoly& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(static_cast<double>(to_real(c)));
    if (out.empty()) out.push_back(0.0);
    return out;
}

double horner(const std::vector<double>& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

LemmaReport verify_lemma_21(int r, std::uint64_t y1, std::uint64_t y2,
                            const TestPoly& f, const TestPoly& g) {
    if (r < 1) throw std::invalid_argument("lemma 2.1: r must be >= 1");
    if (y1 < 200 || y1 > y2 || y2 > 10'000'000)
        throw std::invalid_argument("lemma 2.1: need 200 <= y1 <= y2 <= 1e7");
    if (f.empty() || g.empty())
        throw std::invalid_argument("lemma 2.1: empty test polynomial");

    const int K = degree_of(f) + degree_of(g);
    const auto dr = divisor_table(r, y1);
    const auto scales = trend_scales(y1);

    // One ascending pass accumulates the log-moments
    //   M_k(N) = sum_{n<=N} d_r(n) (log n)^k / n,  k = 0..K,
    // snapshotted at the three trend cutoffs; the lhs at each scale is a
    // small linear combination of these.
    std::array<std::vector<Real>, 3> M;
    std::vector<Real> run(K + 1, Real(0));
    std::size_t si = 0;
    for (std::uint64_t n = 1; n <= y1; ++n) {
        Real w = Real(dr[n]) / n;
        run[0] += w;
        if (K > 0) {
            Real ln = log(Real(n));
            for (int k = 1; k <= K; ++k) {
                w *= ln;
                run[k] += w;
            }
        }
        while (si < 3 && n == scales[si]) M[si++] = run;
    }

    const TestPoly f_flip = compose_affine(f, 1, -1);  // f(1 - t)

    LemmaReport rep;
    rep.lemma_id = "2.1";
    rep.y1 = y1;
    rep.y2 = y2;
    for (int idx = 0; idx < 3; ++idx) {
        const std::uint64_t s1 = scales[idx];
        // Keep the two scales in proportion along the trend.
        std::uint64_t s2 = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(y2) * s1 / y1);
        if (s2 < s1) s2 = s1;
        const Real L1 = log(Real(s1)), L2 = log(Real(s2));

        // lhs: f((L1-x)/L1) g((L2-x)/L2) expanded in powers of x = log n.
        const auto F = compose_affine_real(f, 1, -1 / L1);
        const auto G = compose_affine_real(g, 1, -1 / L2);
        std::vector<Real> C(K + 1, Real(0));
        for (std::size_t a = 0; a < F.size(); ++a)
            for (std::size_t b = 0; b < G.size(); ++b)
                if (a + b <= static_cast<std::size_t>(K))
                    C[a + b] += F[a] * G[b];
        Real lhs = 0;
        for (int k = 0; k <= K; ++k) lhs += C[k] * M[idx][k];

        // rhs: expand g(1 - t rho) in powers of rho = L1/L2; each
        // coefficient's t-integral against t^(r-1) f(1-t) is exact.
        const Real rho = L1 / L2;
        Real series = 0, rho_b = 1;
        for (std::size_t b = 0; b < g.size(); ++b) {
            Rat gc = 0;
            for (std::size_t k = b; k < g.size(); ++k)
                gc += g[k] * Rat(binomial(static_cast<unsigned>(k),
                                          static_cast<unsigned>(b)));
            Rat integ = 0;
            for (std::size_t i = 0; i < f_flip.size(); ++i)
                integ += f_flip[i] / Rat(static_cast<unsigned long>(r) + b + i);
            Rat Kb = (b % 2 ? -gc : gc) * integ;
            series += to_real(Kb) * rho_b;
            rho_b *= rho;
        }
        Real rhs = pow(L1, r) / to_real(Rat(factorial(r - 1))) * series;

        rep.trend.push_back({s1, lhs / rhs});
        if (idx == 2) {
            rep.lhs = lhs;
            rep.rhs_main = rhs;
            rep.ratio = lhs / rhs;
        }
    }
    return rep;
}

Rat lemma_22_main_integral(int r, const std::array<TestPoly, 4>& f) {
    if (r < 1) throw std::invalid_argument("lemma 2.2: r must be >= 1");
    // Constraint-slack arguments, in the region integrator's budget order:
    // f1 <- 1-t1-t2, f2 <- 1-t3-t4, f3 <- 1-t1-t3, f4 <- 1-t2-t4.
    static constexpr int kBudgetFor[4] = {2, 3, 0, 1};
    MultiPoly integ = MultiPoly::constant(Rat(1));
    for (int i = 0; i < 4; ++i)
        integ = integ * poly_P_at(f[i], RegionSpec::budget(kBudgetFor[i]));
    if (r > 1) {
        Monomial m;
        for (int v : {T1, T2, T3, T4})
            m.e[v] = static_cast<std::uint8_t>(r - 1);
        std::vector<MultiPoly::Term> t{{m, Rat(1)}};
        integ = integ * MultiPoly::from_term_map(std::move(t));
    }
    return integrate_t_polytope(integ).constant_value();
}

namespace {

// Direct quadruple sum at one scale, in double precision: loops over
// (n1, n2, n3) honoring n1 n2 <= y and n1 n3 <= y; the innermost n4 sum
// (n4 <= y / max(n2, n3) from the two remaining constraints) is read off
// cumulative tables of d_r(n) (log n)^k / n, with f2 f4 expanded in powers
// of log n4.  About 1.6 y^2 triples at the top scale.
double lemma22_lhs(std::uint64_t y, const std::array<TestPoly, 4>& f,
                   const std::vector<std::uint64_t>& dr_full) {
    const double L = std::log(static_cast<double>(y));
    std::vector<double> ln(y + 1, 0.0), w(y + 1, 0.0);
    std::vector<std::uint64_t> lim(y + 1, 0);
    for (std::uint64_t n = 1; n <= y; ++n) {
        ln[n] = std::log(static_cast<double>(n));
        w[n] = static_cast<double>(dr_full[n]) / static_cast<double>(n);
        lim[n] = y / n;
    }

    const auto f1 = to_doubles(f[0]), f3 = to_doubles(f[2]);
    const int d2 = degree_of(f[1]), d4 = degree_of(f[3]);
    const int K = d2 + d4;

    // Cumulative moments P[k][N] = sum_{n<=N} d_r(n) (log n)^k / n.
    std::vector<std::vector<double>> P(K + 1,
                                       std::vector<double>(y + 1, 0.0));
    for (std::uint64_t n = 1; n <= y; ++n) {
        double pw = w[n];
        P[0][n] = P[0][n - 1] + pw;
        for (int k = 1; k <= K; ++k) {
            pw *= ln[n];
            P[k][n] = P[k][n - 1] + pw;
        }
    }

    // E2[n3] = coefficients of f2((L - log n3 - x)/L) in x = log n4, and
    // E4[n2] likewise; stored flat.
    auto expansion = [&](const TestPoly& p, int deg) {
        std::vector<double> table(static_cast<std::size_t>(deg + 1) * (y + 1));
        const auto pd = to_doubles(p);
        for (std::uint64_t n = 1; n <= y; ++n) {
            // Horner composition with the affine argument a + b x.
            const double a = (L - ln[n]) / L, b = -1.0 / L;
            std::vector<double> acc(deg + 1, 0.0);
            for (auto it = pd.rbegin(); it != pd.rend(); ++it) {
                for (int i = deg; i >= 1; --i)
                    acc[i] = acc[i] * a + acc[i - 1] * b;
                acc[0] = acc[0] * a + *it;
            }
            for (int i = 0; i <= deg; ++i)
                table[n * (deg + 1) + i] = acc[i];
        }
        return table;
    };
    const auto E2 = expansion(f[1], d2), E4 = expansion(f[3], d4);

    double acc = 0;
    for (std::uint64_t n1 = 1; n1 <= y; ++n1) {
        const std::uint64_t m = lim[n1];
        for (std::uint64_t n2 = 1; n2 <= m; ++n2) {
            const double w2 =
                w[n1] * w[n2] * horner(f1, (L - ln[n1] - ln[n2]) / L);
            const double* e4 = &E4[n2 * (d4 + 1)];
            double inner = 0;
            for (std::uint64_t n3 = 1; n3 <= m; ++n3) {
                const double w3 = w[n3] * horner(f3, (L - ln[n1] - ln[n3]) / L);
                const double* e2 = &E2[n3 * (d2 + 1)];
                const std::uint64_t n4max = lim[std::max(n2, n3)];
                double s = 0;
                for (int a = 0; a <= d2; ++a)
                    for (int b = 0; b <= d4; ++b)
                        s += e2[a] * e4[b] * P[a + b][n4max];
                inner += w3 * s;
            }
            acc += w2 * inner;
        }
    }
    return acc;
}

}  // namespace

LemmaReport verify_lemma_22(int r, std::uint64_t y,
                            const std::array<TestPoly, 4>& f) {
    if (r < 1) throw std::invalid_argument("lemma 2.2: r must be >= 1");
    if (y < 200 || y > 10'000)
        throw std::invalid_argument("lemma 2.2: need 200 <= y <= 1e4");
    for (const auto& p : f)
        if (p.empty())
            throw std::invalid_argument("lemma 2.2: empty test polynomial");

    const Rat main_int = lemma_22_main_integral(r, f);
    const auto dr = divisor_table(r, y);
    const Real fact_pow = pow(to_real(Rat(factorial(r - 1))), 4);

    LemmaReport rep;
    rep.lemma_id = "2.2";
    rep.y1 = rep.y2 = y;
    for (std::uint64_t s : trend_scales(y)) {
        // The quadruple sum dominates the run; double precision leaves
        // ~1e-12 relative error, far below the O(1/log y) terms under test.
        Real lhs = Real(lemma22_lhs(s, f, dr));
        Real rhs =
            pow(log(Real(s)), 4 * r) / fact_pow * to_real(main_int);
        rep.trend.push_back({s, lhs / rhs});
        if (s == y) {
            rep.lhs = lhs;
            rep.rhs_main = rhs;
            rep.ratio = lhs / rhs;
        }
    }
    return rep;
}

LemmaReport verify_lemma_23(int r, int j, std::uint64_t n, std::uint64_t y) {
    if (r < 1 || j < 0) throw std::invalid_argument("lemma 2.3: bad r or j");
    if (n < 1 || y < 200 * n || y > 10'000'000)
        throw std::invalid_argument("lemma 2.3: need 1 <= n, 200 n <= y <= 1e7");

    const auto d2r = divisor_table(2 * r, y / n);
    const auto scales = trend_scales(y);

    // Moments of d_{2r}, snapshotted at the per-scale cutoffs floor(Y/n).
    std::array<std::vector<Real>, 3> M;
    std::vector<Real> run(j + 1, Real(0));
    std::size_t si = 0;
    for (std::uint64_t m = 1; m <= y / n; ++m) {
        Real w = Real(d2r[m]) / m;
        run[0] += w;
        if (j > 0) {
            Real lm = log(Real(m));
            for (int k = 1; k <= j; ++k) {
                w *= lm;
                run[k] += w;
            }
        }
        while (si < 3 && m == scales[si] / n) M[si++] = run;
    }

    LemmaReport rep;
    rep.lemma_id = "2.3";
    rep.y1 = rep.y2 = y;
    for (int idx = 0; idx < 3; ++idx) {
        const Real L = log(Real(scales[idx]) / n);  // log(y/n), real quotient
        // lhs = (1/j!) sum_k C(j,k) L^(j-k) (-1)^k M_k.
        Real lhs = 0;
        for (int k = 0; k <= j; ++k) {
            Real term = to_real(Rat(binomial(j, k))) * pow(L, j - k) *
                        M[idx][k];
            lhs += (k % 2 ? -term : term);
        }
        lhs /= to_real(Rat(factorial(j)));
        const Real rhs = pow(L, j + 2 * r) / to_real(Rat(factorial(j + 2 * r)));
        rep.trend.push_back({scales[idx], lhs / rhs});
        if (idx == 2) {
            rep.lhs = lhs;
            rep.rhs_main = rhs;
            rep.ratio = lhs / rhs;
        }
    }
    return rep;
}

}  // namespace zetagap
