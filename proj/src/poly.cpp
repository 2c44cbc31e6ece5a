#include "zetagap/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <unordered_map>

namespace zetagap {

namespace {

const char* kVarNames[kNumVars] = {
    "x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4",
    "t1", "t2", "t3", "t4", "v1", "v2", "v3", "v4",
    "u", "theta",
};

void check_exponent(int e) {
    if (e > 255)
        throw std::overflow_error("monomial exponent exceeds 255");
}

}  // namespace

const char* var_name(int v) { return kVarNames[v]; }

int var_index(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return i;
    return -1;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    Int n = numerator(q), d = denominator(q);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rat(rn, rd);
}

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    auto digits = [&](std::size_t& j) {
        std::size_t start = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == start)
            throw std::invalid_argument("malformed rational literal: " + text);
        return s.substr(start, j - start);
    };
    std::string ip = digits(i);
    Rat value;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = digits(i);
        if (i != s.size())
            throw std::invalid_argument("malformed rational literal: " + text);
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rat(Int(ip), d);
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::string fp = digits(i);
        if (i != s.size())
            throw std::invalid_argument("malformed rational literal: " + text);
        Int scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        value = Rat(Int(ip) * scale + Int(fp), scale);
    } else {
        if (i != s.size())
            throw std::invalid_argument("malformed rational literal: " + text);
        value = Rat(Int(ip));
    }
    return neg ? Rat(-value) : value;
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string real_str(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

const Int& factorial(unsigned n) {
    static std::vector<Int> table{Int(1)};
    while (table.size() <= n) table.push_back(table.back() * Int(table.size()));
    return table[n];
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(Rat c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(int v, int power) {
    if (power == 0) return constant(Rat(1));
    check_exponent(power);
    MultiPoly p;
    Monomial m;
    m.e[v] = static_cast<std::uint8_t>(power);
    p.terms_.push_back({m, Rat(1)});
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int MultiPoly::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() != 1 || !terms_[0].first.is_constant())
        throw std::logic_error("polynomial is not constant: " + to_string());
    return terms_[0].second;
}

MultiPoly MultiPoly::coefficient_of(int v, int k) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(v) != k) continue;
        Monomial r = m;
        r.e[v] = 0;
        out.push_back({r, c});
    }
    return from_term_map(std::move(out));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    // Merge two canonically sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = q.terms_.begin(), be = q.terms_.end();
    while (a != ae && b != be) {
        auto cmp = a->first <=> b->first;
        if (cmp < 0) {
            out.push_back(*a++);
        } else if (cmp > 0) {
            out.push_back(*b++);
        } else {
            Rat s = a->second + b->second;
            if (s != 0) out.push_back({a->first, std::move(s)});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) { return *this += -q; }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto& small = p.num_terms() <= q.num_terms() ? p.terms_ : q.terms_;
    const auto& large = p.num_terms() <= q.num_terms() ? q.terms_ : p.terms_;
    std::unordered_map<Monomial, Rat, MonomialHash> acc;
    acc.reserve(large.size() * 2);
    for (const auto& [ms, cs] : small) {
        for (const auto& [ml, cl] : large) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) {
                int e = ms.e[i] + ml.e[i];
                check_exponent(e);
                m.e[i] = static_cast<std::uint8_t>(e);
            }
            auto [it, fresh] = acc.try_emplace(m, Rat(cs * cl));
            if (!fresh) it->second += cs * cl;
        }
    }
    std::vector<MultiPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    return MultiPoly::from_term_map(std::move(out));
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
    if (s == 0) return {};
    MultiPoly p = *this;
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly acc = constant(Rat(1));
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Rat MultiPoly::eval(const std::map<int, Rat>& point) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.e[v];
            if (e == 0) continue;
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument(std::string("eval: no value for ") +
                                            var_name(v));
            Rat p = it->second;
            for (int i = 0; i < e; ++i) term *= p;
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& replacement) const {
    // Cache replacement^k; exponents of v are small in every integrand here.
    std::vector<MultiPoly> powers{constant(Rat(1))};
    MultiPoly result;
    std::vector<Term> untouched;
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(v);
        if (e == 0) {
            untouched.push_back({m, c});
            continue;
        }
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        Monomial rest = m;
        rest.e[v] = 0;
        MultiPoly base;
        base.terms_.push_back({rest, c});
        result += base * powers[e];
    }
    result += from_term_map(std::move(untouched));
    return result;
}

MultiPoly MultiPoly::integrate_unit_box(int v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(v);
        Monomial r = m;
        r.e[v] = 0;
        out.push_back({r, c / (e + 1)});
    }
    return from_term_map(std::move(out));
}

MultiPoly MultiPoly::from_term_map(std::vector<Term>&& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& [m, c] : terms) {
        if (!out.empty() && out.back().first == m)
            out.back().second += c;
        else
            out.push_back({m, std::move(c)});
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    MultiPoly p;
    p.terms_ = std::move(out);
    return p;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // Descending graded-lex: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = it == terms_.rbegin();
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool coeff_shown = (a != 1) || m.is_constant();
        if (coeff_shown) os << a;
        bool need_star = coeff_shown;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.e[v];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << var_name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    MultiPoly::ParseError error;
    bool failed = false;

    void fail(std::size_t at, std::string msg) {
        if (!failed) error = {at, std::move(msg)};
        failed = true;
    }
    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) {
            fail(pos, "expected a digit");
            return Int(0);
        }
        return Int(std::string(text.substr(start, pos - start)));
    }

    // factor := uint ('/' uint)? | varname ('^' uint)?
    // Returns via out-params; `is_number` distinguishes the two shapes.
    void parse_factor(Rat& coeff, Monomial& mono) {
        skip_ws();
        if (pos >= text.size()) {
            fail(pos, "expected a factor");
            return;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_uint();
            if (peek('/')) {
                ++pos;
                Int den = parse_uint();
                if (failed) return;
                if (den == 0) {
                    fail(pos, "zero denominator");
                    return;
                }
                coeff *= Rat(num, den);
            } else {
                coeff *= Rat(num);
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string name(text.substr(start, pos - start));
            int v = var_index(name);
            if (v < 0) {
                fail(start, "unknown variable '" + name + "'");
                return;
            }
            int e = 1;
            if (peek('^')) {
                ++pos;
                Int k = parse_uint();
                if (failed) return;
                if (k > 255) {
                    fail(pos, "exponent too large");
                    return;
                }
                e = static_cast<int>(k);
            }
            int total = mono.e[v] + e;
            if (total > 255) {
                fail(pos, "exponent too large");
                return;
            }
            mono.e[v] = static_cast<std::uint8_t>(total);
            return;
        }
        fail(pos, std::string("unexpected character '") + c + "'");
    }

    MultiPoly parse_poly() {
        MultiPoly sum;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail(pos, "expected '+' or '-'");
                return sum;
            }
            Rat coeff(sign);
            Monomial mono;
            parse_factor(coeff, mono);
            if (failed) return sum;
            while (peek('*')) {
                ++pos;
                parse_factor(coeff, mono);
                if (failed) return sum;
            }
            std::vector<MultiPoly::Term> t{{mono, coeff}};
            sum += MultiPoly::from_term_map(std::move(t));
            first = false;
            if (at_end()) return sum;
            if (!peek('+') && !peek('-')) {
                fail(pos, "expected '+', '-' or end of input");
                return sum;
            }
        }
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, ParseError* err) {
    Parser p{text};
    p.skip_ws();
    if (p.at_end()) {
        if (err) *err = {0, "empty polynomial"};
        return {};
    }
    // Special-case the canonical zero.
    MultiPoly result = p.parse_poly();
    if (p.failed) {
        if (err) *err = p.error;
        return {};
    }
    if (err) *err = {0, ""};
    return result;
}

MultiPoly random_polynomial(std::uint64_t seed, int num_terms, int max_degree,
                            const std::vector<int>& vars) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i < num_terms; ++i) {
        int n = num(rng);
        if (n == 0) n = 1;
        Rat c(n, den(rng));
        Monomial m;
        int budget = deg(rng);
        for (int d = 0; d < budget; ++d) {
            int v = vars[pick(rng)];
            if (m.e[v] < 255) ++m.e[v];
        }
        terms.push_back({m, c});
    }
    return MultiPoly::from_term_map(std::move(terms));
}

}  // namespace zetagap
