#pragma once

// Sparse multivariate polynomials with exact GMP coefficients.
//
// Polynomial<mpq_class> (XPoly) carries the Schur-function side, where
// rational factors like 1/720 appear; Polynomial<mpz_class> (UPoly) carries
// the alternant/orbit side, whose coefficients are always integers.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace weylschur {

/// Exponent vector of fixed length (the ring size).
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, then the second, and so on.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
        for (unsigned e : exps_) degree_ += e;
    }
    Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned total_degree() const noexcept { return degree_; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    /// Weighted degree with deg(var_i) = i + 1.
    unsigned weighted_degree() const noexcept {
        unsigned d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<unsigned>(i + 1) * exps_[i];
        return d;
    }

    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    /// Swap the exponents of two variables.
    Monomial swapped(std::size_t i, std::size_t j) const {
        Monomial r = *this;
        std::swap(r.exps_[i], r.exps_[j]);
        return r;
    }

    /// Copy with the exponent vector zero-padded or truncated to nvars.
    Monomial resized(std::size_t nvars) const {
        std::vector<unsigned> e = exps_;
        e.resize(nvars, 0);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        // Within one degree, larger leading exponents sort later.
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
        return a.size() <=> b.size();
    }

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<mpq_class> {
    static bool divides(const mpq_class& d, const mpq_class&) { return sgn(d) != 0; }
    static mpq_class quotient(const mpq_class& n, const mpq_class& d) { return mpq_class(n / d); }
    static std::string str(const mpq_class& c) { return c.get_str(); }
    static mpq_class parse(const std::string& s) {
        mpq_class q(s, 10);
        q.canonicalize();
        return q;
    }
};

template <>
struct coeff_traits<mpz_class> {
    static bool divides(const mpz_class& d, const mpz_class& n) {
        return sgn(d) != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
    }
    static mpz_class quotient(const mpz_class& n, const mpz_class& d) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    static std::string str(const mpz_class& c) { return c.get_str(); }
    static mpz_class parse(const std::string& s) { return mpz_class(s, 10); }
};

template <class C>
class Polynomial {
public:
    using coeff_type = C;
    using term_map = std::map<Monomial, C>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const C& c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    static Polynomial one(std::size_t nvars) { return constant(nvars, C(1)); }

    /// The variable with zero-based index i.
    static Polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw usage_error("variable index out of range");
        std::vector<unsigned> e(nvars, 0);
        e[i] = 1;
        return term(Monomial(std::move(e)), C(1));
    }

    static Polynomial term(const Monomial& m, const C& c) {
        Polynomial p(m.size());
        p.add_term(m, c);
        return p;
    }

    /// Builds from an arbitrary (possibly non-canonical) term list:
    /// duplicate monomials are merged and zero coefficients dropped.
    static Polynomial from_terms(std::size_t nvars, std::span<const std::pair<Monomial, C>> raw) {
        Polynomial p(nvars);
        for (const auto& [m, c] : raw) {
            if (m.size() != nvars) throw usage_error("monomial length does not match ring size");
            p.add_term(m, c);
        }
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Contract: must not be called on the zero polynomial.
    unsigned degree() const {
        if (is_zero()) throw usage_error("degree of the zero polynomial is undefined");
        return terms_.rbegin()->first.total_degree();
    }

    /// Largest term in graded-lex order. Contract: nonzero.
    const std::pair<const Monomial, C>& leading_term() const {
        if (is_zero()) throw usage_error("leading term of the zero polynomial");
        return *terms_.rbegin();
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if constexpr (std::is_same_v<C, mpq_class>) {
            // mpq_class(a, b) does not reduce; equality needs canonical form.
            if (inserted) it->second.canonicalize();
        }
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& b) {
        check_ring(b);
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        check_ring(b);
        for (const auto& [m, c] : b.terms_) add_term(m, C(-c));
        return *this;
    }
    Polynomial& operator*=(const C& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
    friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.nvars_);
        if (a.is_zero() || b.is_zero()) return r;
        const Polynomial& big = a.size() >= b.size() ? a : b;
        const Polynomial& small = a.size() >= b.size() ? b : a;
        C prod;
        for (const auto& [ms, cs] : small.terms_) {
            for (const auto& [mb, cb] : big.terms_) {
                prod = cs * cb;
                r.add_term(ms * mb, prod);
            }
        }
        return r;
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = one(nvars_);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            e >>= 1;
            if (e != 0) base *= base;
        }
        return r;
    }

    /// Negates every variable: a monomial of total degree d picks up (-1)^d.
    Polynomial negated_variables() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_)
            if (m.total_degree() % 2 == 1) c = -c;
        return r;
    }

    Polynomial swapped_variables(std::size_t i, std::size_t j) const {
        if (i >= nvars_ || j >= nvars_) throw usage_error("variable index out of range");
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.swapped(i, j), c);
        return r;
    }

    /// Re-embeds into a ring with a different number of variables. Shrinking
    /// requires the dropped variables to be absent.
    Polynomial with_nvars(std::size_t nvars) const {
        Polynomial r(nvars);
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = nvars; i < m.size(); ++i)
                if (m[i] != 0) throw usage_error("polynomial uses a variable outside the target ring");
            r.terms_.emplace(m.resized(nvars), c);
        }
        return r;
    }

    /// Replaces variable i by images[i] (all in one target ring of coefficient type D).
    template <class D>
    Polynomial<D> substitute(std::span<const Polynomial<D>> images) const;

    /// Common denominator of all coefficients (1 for integer polynomials).
    mpz_class denominator_lcm() const {
        mpz_class l = 1;
        if constexpr (std::is_same_v<C, mpq_class>) {
            for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        return l;
    }

    /// Renders e.g. "-1 + 1/720*x1^6 - x1*x2" in ascending graded-lex order.
    std::string str(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool neg = sgn(c) < 0;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            const C mag = neg ? C(-c) : c;
            const bool unit = mag == 1;
            if (!unit || m.is_one()) out += coeff_traits<C>::str(mag);
            bool need_star = !unit;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (need_star) out += "*";
                out += std::string(var) + std::to_string(i + 1);
                if (m[i] > 1) out += "^" + std::to_string(m[i]);
                need_star = true;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void check_ring(const Polynomial& b) const {
        if (nvars_ != b.nvars_)
            throw usage_error("ring size mismatch: " + std::to_string(nvars_) + " vs " +
                              std::to_string(b.nvars_));
    }

    std::size_t nvars_ = 0;
    term_map terms_;

    template <class>
    friend class Polynomial;
};

using XPoly = Polynomial<mpq_class>;
using UPoly = Polynomial<mpz_class>;

template <class C>
template <class D>
Polynomial<D> Polynomial<C>::substitute(std::span<const Polynomial<D>> images) const {
    if (images.size() != nvars_) throw usage_error("substitute: need one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw usage_error("substitute: images live in different rings");
    // Cache powers per variable; exponents are small.
    std::vector<std::vector<Polynomial<D>>> powers(nvars_);
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial<D>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial<D>::one(target));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial<D> r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial<D> t = Polynomial<D>::constant(target, D(c));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= power(i, m[i]);
        r += t;
    }
    return r;
}

inline XPoly to_rational(const UPoly& p) {
    XPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, mpq_class(c));
    return r;
}

/// Throws inconsistency_error if some coefficient is not an integer.
inline UPoly to_integer(const XPoly& p) {
    UPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw inconsistency_error("polynomial has a non-integral coefficient " + c.get_str());
        r.add_term(m, mpz_class(c.get_num()));
    }
    return r;
}

/// Exact quotient q with q * den == num. Throws inexact_division otherwise;
/// never returns a truncated quotient.
template <class C>
Polynomial<C> divide_exact(const Polynomial<C>& num, const Polynomial<C>& den) {
    if (num.nvars() != den.nvars()) throw usage_error("divide_exact: ring size mismatch");
    if (den.is_zero()) throw usage_error("divide_exact: division by the zero polynomial");
    Polynomial<C> q(num.nvars());
    Polynomial<C> rem = num;
    const auto& [dm, dc] = den.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!dm.divides(rm) || !coeff_traits<C>::divides(dc, rc))
            throw inexact_division("polynomial division leaves a remainder");
        const Monomial qm = rm / dm;
        const C qc = coeff_traits<C>::quotient(rc, dc);
        q.add_term(qm, qc);
        for (const auto& [m, c] : den.terms()) rem.add_term(qm * m, C(-(qc * c)));
    }
    return q;
}

/// Like to_string with the common denominator pulled out:
/// "1/15*(15*x1 + x1^5*x2)". Falls back to plain form for integral input.
inline std::string str_factored(const XPoly& p, std::string_view var = "x") {
    const mpz_class den = p.denominator_lcm();
    if (den == 1) return p.str(var);
    XPoly scaled = p * mpq_class(den);
    return "1/" + den.get_str() + "*(" + scaled.str(var) + ")";
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars, std::string_view var)
        : s_(text), nvars_(nvars), var_(var) {}

    XPoly parse() {
        XPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    // expr := ['+'|'-'] term { ('+'|'-') term }
    XPoly expr() {
        XPoly r(nvars_);
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        XPoly t = product();
        r += neg ? -t : t;
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            neg = get() == '-';
            t = product();
            r += neg ? -t : t;
        }
        return r;
    }

    // product := factor { ['*'] factor }
    XPoly product() {
        XPoly r = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                r *= factor();
            } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || starts_var()) {
                r *= factor();
            } else {
                break;
            }
        }
        return r;
    }

    // factor := number ['/' number] | var index ['^' n] | '(' expr ')' ['^' n]
    XPoly factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            XPoly e = expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = e.pow(static_cast<unsigned>(std::stoul(digits())));
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                num += "/" + digits();
            }
            return XPoly::constant(nvars_, coeff_traits<mpq_class>::parse(num));
        }
        if (starts_var()) {
            pos_ += var_.size();
            if (peek() == '_') ++pos_;
            const std::string idx = digits();
            const std::size_t i = std::stoul(idx);
            if (i == 0 || i > nvars_) fail("variable index out of range");
            unsigned e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = static_cast<unsigned>(std::stoul(digits()));
            }
            return XPoly::variable(nvars_, i - 1).pow(e);
        }
        fail("unexpected character");
    }

    bool starts_var() const { return s_.substr(pos_, var_.size()) == var_; }
    std::string digits() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const {
        throw usage_error("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    std::string_view var_;
};

} // namespace detail

/// Parses the notation printed by Polynomial::str (and the looser
/// "1/15 (x1 + 2 x2^3)" style with implicit products).
inline XPoly parse_xpoly(std::string_view text, std::size_t nvars, std::string_view var = "x") {
    return detail::PolyParser(text, nvars, var).parse();
}

} // namespace weylschur
