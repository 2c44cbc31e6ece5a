#include "zetagap/arith.hpp"

#include <stdexcept>

namespace zetagap {

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1;  // exact: product of j consecutive integers / j!
    }
    return num;
}

Int divisor_d(int r, std::uint64_t n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("divisor_d requires r >= 1 and n >= 1");
    Int out = 1;
    auto absorb = [&](unsigned k) {
        out *= binomial(k + static_cast<unsigned>(r) - 1,
                        static_cast<unsigned>(r) - 1);
    };
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned k = 0;
        while (n % p == 0) n /= p, ++k;
        absorb(k);
    }
    if (n > 1) absorb(1);
    return out;
}

std::vector<std::uint64_t> divisor_table(int r, std::size_t limit) {
    if (r < 1) throw std::invalid_argument("divisor_table requires r >= 1");
    std::vector<std::uint64_t> cur(limit + 1, 1);
    cur[0] = 0;
    for (int pass = 1; pass < r; ++pass) {
        std::vector<std::uint64_t> next(limit + 1, 0);
        for (std::size_t d = 1; d <= limit; ++d)
            for (std::size_t m = d; m <= limit; m += d) next[m] += cur[d];
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

Real euler_a(int r, std::uint64_t prime_cutoff) {
    if (r < 1) throw std::invalid_argument("euler_a requires r >= 1");
    if (prime_cutoff < 2)
        throw std::invalid_argument("euler_a requires prime_cutoff >= 2");
    const Real tail_tol = Real("1e-20");
    Real product = 1;
    for (std::uint32_t p : primes_up_to(prime_cutoff)) {
        Real inv_p = Real(1) / p;
        // (1 - 1/p)^(r^2)
        Real front = pow(Real(1) - inv_p, r * r);
        // sum_j C(j+r-1, r-1)^2 / p^j until the tail is negligible
        Real series = 0, pj = 1;
        for (unsigned j = 0;; ++j) {
            Int b = binomial(j + static_cast<unsigned>(r) - 1,
                             static_cast<unsigned>(r) - 1);
            Real term = Real(b) * Real(b) * pj;
            series += term;
            pj *= inv_p;
            // d_r(p^j) grows polynomially in j, so the geometric decay 1/p
            // dominates; a crude comparison of the next term suffices.
            Int b_next = binomial(j + static_cast<unsigned>(r),
                                  static_cast<unsigned>(r) - 1);
            if (Real(b_next) * Real(b_next) * pj < tail_tol * series) break;
        }
        product *= front * series;
    }
    return product;
}

}  // namespace zetagap
