// Sparse multivariate polynomials over exact rationals.
//
// The variable universe is fixed: the sixteen integration variables
// x1..x4, z1..z4, t1..t4, v1..v4 of the amplified fourth-moment integral,
// plus the two bound parameters u and theta.  Every integrand and every
// closed-form integral in the project lives in this ring.
//
// Terms are kept canonical: sorted by graded-lexicographic monomial order,
// no zero coefficients, no duplicate monomials.  Addition and multiplication
// are exact; nothing here ever rounds.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zetagap/rational.hpp"

namespace zetagap {

inline constexpr int kNumVars = 18;

// Variable indices.  x1..x4 = 0..3, z1..z4 = 4..7, t1..t4 = 8..11,
// v1..v4 = 12..15, then the symbolic parameters u and theta.
enum Var : int {
    X1 = 0, X2, X3, X4,
    Z1 = 4, Z2, Z3, Z4,
    T1 = 8, T2, T3, T4,
    V1 = 12, V2, V3, V4,
    U = 16,
    THETA = 17,
};

const char* var_name(int v);              // "x1".."theta"
int var_index(std::string_view name);     // -1 if not in the universe

struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};

    int degree() const {
        int d = 0;
        for (auto k : e) d += k;
        return d;
    }
    int degree_in(int v) const { return e[v]; }
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Graded lex: total degree first, then exponent vector lexicographically.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.e <=> b.e;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        // FNV-1a over the exponent bytes.
        std::size_t h = 1469598103934665603ull;
        for (auto b : m.e) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class MultiPoly {
  public:
    using Term = std::pair<Monomial, Rat>;

    MultiPoly() = default;
    static MultiPoly constant(Rat c);
    static MultiPoly variable(int v, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int total_degree() const;
    int degree_in(int v) const;
    bool contains_var(int v) const { return degree_in(v) > 0; }

    // The constant value of a degree-0 polynomial (0 for the zero polynomial).
    // Throws if any variable is still present.
    Rat constant_value() const;

    // Coefficient of v^k as a polynomial in the remaining variables.
    MultiPoly coefficient_of(int v, int k) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }
    MultiPoly scaled(const Rat& s) const;
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Exact evaluation.  Every variable occurring in the polynomial must be
    // assigned; a missing assignment throws, naming the variable.
    Rat eval(const std::map<int, Rat>& point) const;

    // Substitute a polynomial for a variable (replacement may involve others).
    MultiPoly substitute(int v, const MultiPoly& replacement) const;

    // Integrate one variable over [0,1]: v^k -> 1/(k+1); v eliminated.
    MultiPoly integrate_unit_box(int v) const;

    // Canonical text form, e.g. "5/7*x1^2*t3 - 1".  Terms in descending
    // graded-lex order; parse() inverts to_string() exactly.
    std::string to_string() const;

    struct ParseError {
        std::size_t position;  // 0-based offset into the input
        std::string message;
    };
    // Parses the textual form.  On failure returns the error; never throws.
    static MultiPoly parse(std::string_view text, ParseError* err = nullptr);

    // Internal: adopt a term map, dropping zeros and sorting canonically.
    static MultiPoly from_term_map(
        std::vector<Term>&& unsorted_accumulated_terms);

  private:
    std::vector<Term> terms_;  // canonical: sorted, nonzero coefficients
};

// Seeded random sparse polynomial (property tests and the QMC oracle gate):
// `max_degree` caps the total degree, coefficients are small rationals.
MultiPoly random_polynomial(std::uint64_t seed, int num_terms, int max_degree,
                            const std::vector<int>& vars);

}  // namespace zetagap
