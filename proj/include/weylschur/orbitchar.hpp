#pragma once

// Weyl-orbit characters as class functions.
//
// With e(mu_i) = u_i the character of the orbit of a dominant weight with
// partition (q_1..q_k) is the monomial symmetric polynomial K_(q) in
// u_1..u_N: every distinct monomial u_{j1}^{q1}...u_{jk}^{qk}, distinct
// indices, counted once. Power sums K(Q) generate them; K(Q) -> Q x_Q moves
// everything into x_1..x_{N-1}, where u_1...u_N = 1 turns x_Q (Q >= N) into a
// polynomial in the first N-1 indeterminates.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "poly.hpp"

namespace weylschur {

/// Rational combination of products K(Q_1)...K(Q_m) of power sums. The key
/// is the multiset {Q_1..Q_m} sorted descending; the empty key is 1.
class GeneratorExpr {
public:
    using key_type = std::vector<int>;
    using term_map = std::map<key_type, mpq_class>;

    GeneratorExpr() = default;

    static GeneratorExpr one() { return generator_product({}); }
    static GeneratorExpr generator(int q) { return generator_product({q}); }
    static GeneratorExpr generator_product(key_type qs) {
        GeneratorExpr g;
        std::sort(qs.begin(), qs.end(), std::greater<>());
        g.terms_.emplace(std::move(qs), mpq_class(1));
        return g;
    }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const key_type& k, const mpq_class& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    GeneratorExpr& add_scaled(const GeneratorExpr& o, const mpq_class& s) {
        for (const auto& [k, c] : o.terms_) add(k, mpq_class(c * s));
        return *this;
    }

    /// Multiplies every product by one more generator K(q).
    GeneratorExpr times_generator(int q) const {
        GeneratorExpr r;
        for (const auto& [k, c] : terms_) {
            key_type nk = k;
            nk.insert(std::upper_bound(nk.begin(), nk.end(), q, std::greater<>()), q);
            r.add(nk, c);
        }
        return r;
    }

    friend GeneratorExpr operator+(GeneratorExpr a, const GeneratorExpr& b) { return a.add_scaled(b, 1); }
    friend GeneratorExpr operator-(GeneratorExpr a, const GeneratorExpr& b) { return a.add_scaled(b, -1); }
    friend GeneratorExpr operator*(const mpq_class& s, const GeneratorExpr& g) {
        GeneratorExpr r;
        return r.add_scaled(g, s);
    }
    friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
            first = false;
            const mpq_class mag = abs(c);
            if (mag != 1 || k.empty()) s += mag.get_str() + (k.empty() ? "" : "*");
            for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "*" : "") + ("K(" + std::to_string(k[i]) + ")");
        }
        return s;
    }

private:
    term_map terms_;
};

/// Orbit character in u_1..u_N: the sum over injective index assignments
/// (j_1..j_k), keeping each resulting monomial once. Zero when the partition
/// has more than N parts.
inline UPoly orbit_char_u(const Partition& p, const AlgebraContext& ctx) {
    const auto n = static_cast<std::size_t>(ctx.n());
    UPoly r(n);
    if (p.length() > ctx.n()) return r;
    std::set<Monomial> seen;
    std::vector<unsigned> exps(n, 0);
    std::vector<bool> used(n, false);
    auto assign = [&](auto&& self, std::size_t slot) -> void {
        if (slot == p.parts().size()) {
            Monomial m(exps);
            if (seen.insert(m).second) r.add_term(m, mpz_class(1));
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            exps[j] = static_cast<unsigned>(p.parts()[slot]);
            self(self, slot + 1);
            exps[j] = 0;
            used[j] = false;
        }
    };
    assign(assign, 0);
    return r;
}

namespace detail {

inline GeneratorExpr reduce_rec(const std::vector<int>& parts, std::map<std::vector<int>, GeneratorExpr>& memo) {
    if (parts.size() <= 1) return GeneratorExpr::generator_product(parts);
    if (auto it = memo.find(parts); it != memo.end()) return it->second;

    // K(a) K_mu = r K_lambda + sum_b c_b K_{mu with one b -> a+b}, where
    // lambda = mu + {a}, r counts a in lambda, and c_b counts a+b in the
    // merged partition.
    const int a = parts.front();
    const std::vector<int> mu(parts.begin() + 1, parts.end());
    const auto r = static_cast<long>(std::count(parts.begin(), parts.end(), a));

    GeneratorExpr acc = reduce_rec(mu, memo).times_generator(a);
    std::vector<int> distinct = mu;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int b : distinct) {
        std::vector<int> merged = mu;
        *std::find(merged.begin(), merged.end(), b) = a + b;
        std::sort(merged.begin(), merged.end(), std::greater<>());
        const auto c = std::count(merged.begin(), merged.end(), a + b);
        acc.add_scaled(reduce_rec(merged, memo), mpq_class(-c));
    }
    GeneratorExpr result = mpq_class(1, r) * acc;
    memo.emplace(parts, result);
    return result;
}

} // namespace detail

/// Orbit character as a polynomial in the generators K(Q). Independent of N.
inline GeneratorExpr reduce_to_generators(const Partition& p) {
    std::map<std::vector<int>, GeneratorExpr> memo;
    return detail::reduce_rec(p.parts(), memo);
}

/// Power sums and elementary symmetric functions of u_1..u_N written in
/// x_1..x_{N-1} under u_1...u_N = 1. Entries are computed on demand and kept;
/// an instance is not safe for concurrent mutation, so give each thread its own.
class PowerSumTable {
public:
    explicit PowerSumTable(const AlgebraContext& ctx) : ctx_(ctx), nvars_(static_cast<std::size_t>(ctx.n() - 1)) {
        const int n = ctx.n();
        power_.push_back(XPoly::one(nvars_)); // K(0) = 1 by convention
        for (int q = 1; q < n; ++q)
            power_.push_back(XPoly::variable(nvars_, static_cast<std::size_t>(q - 1)) * mpq_class(q));
        // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
        elementary_.push_back(XPoly::one(nvars_));
        for (int k = 1; k < n; ++k) {
            XPoly acc(nvars_);
            for (int i = 1; i <= k; ++i) {
                XPoly t = elementary_[static_cast<std::size_t>(k - i)] * power_[static_cast<std::size_t>(i)];
                if (i % 2 == 0) acc -= t;
                else acc += t;
            }
            elementary_.push_back(acc * mpq_class(1, k));
        }
        elementary_.push_back(XPoly::one(nvars_)); // e_N = u_1...u_N = 1
    }

    const AlgebraContext& context() const noexcept { return ctx_; }
    std::size_t nvars() const noexcept { return nvars_; }

    /// e_k in x; zero for k > N.
    XPoly elementary(int k) const {
        if (k < 0 || k > ctx_.n()) return XPoly(nvars_);
        return elementary_[static_cast<std::size_t>(k)];
    }

    /// p_Q = K(Q) in x (Q x_Q below N, degenerated from N on). p_0 is 1.
    const XPoly& power_sum(int q) {
        if (q < 0) throw usage_error("negative power-sum degree");
        const int n = ctx_.n();
        while (static_cast<int>(power_.size()) <= q) {
            const int m = static_cast<int>(power_.size());
            // p_m = sum_{i=1}^{min(N, m-1)} (-1)^{i-1} e_i p_{m-i} + [m = N] (-1)^{N-1} N e_N
            XPoly acc(nvars_);
            for (int i = 1; i <= std::min(n, m - 1); ++i) {
                XPoly t = elementary_[static_cast<std::size_t>(i)] * power_[static_cast<std::size_t>(m - i)];
                if (i % 2 == 0) acc -= t;
                else acc += t;
            }
            if (m == n) acc += XPoly::constant(nvars_, mpq_class(n % 2 == 1 ? n : -n));
            power_.push_back(std::move(acc));
        }
        return power_[static_cast<std::size_t>(q)];
    }

    /// x_Q itself: p_Q / Q.
    XPoly x(int q) {
        if (q < 1) throw usage_error("x_Q needs Q >= 1");
        return power_sum(q) * mpq_class(1, q);
    }

private:
    AlgebraContext ctx_;
    std::size_t nvars_;
    // deque: references handed out by power_sum stay valid as the table grows.
    std::deque<XPoly> power_;
    std::deque<XPoly> elementary_;
};

/// The dependent indeterminate x_Q (Q >= N) as a polynomial in x_1..x_{N-1}.
inline XPoly degenerate_x(int q, const AlgebraContext& ctx) {
    if (q < ctx.n())
        throw usage_error("x_" + std::to_string(q) + " is an independent indeterminate for N = " +
                          std::to_string(ctx.n()));
    PowerSumTable table(ctx);
    return table.x(q);
}

/// Substitutes K(Q) -> Q x_Q, with degenerated x_Q for Q >= N.
inline XPoly generator_to_x(const GeneratorExpr& g, PowerSumTable& table) {
    XPoly r(table.nvars());
    for (const auto& [key, c] : g.terms()) {
        XPoly t = XPoly::constant(table.nvars(), c);
        for (int q : key) t *= table.power_sum(q);
        r += t;
    }
    return r;
}

inline XPoly generator_to_x(const GeneratorExpr& g, const AlgebraContext& ctx) {
    PowerSumTable table(ctx);
    return generator_to_x(g, table);
}

inline XPoly orbit_char_x(const Partition& p, PowerSumTable& table) {
    if (p.length() > table.context().n()) return XPoly(table.nvars());
    return generator_to_x(reduce_to_generators(p), table);
}

inline XPoly orbit_char_x(const Partition& p, const AlgebraContext& ctx) {
    PowerSumTable table(ctx);
    return orbit_char_x(p, table);
}

/// Lifts an x-polynomial to the homogeneous degree-`degree` symmetric
/// polynomial in u_1..u_N it stands for: x_i -> p_i(u)/i, and each term of
/// weighted degree d is multiplied by (u_1...u_N)^((degree - d)/N).
inline UPoly x_to_u(const XPoly& f, const AlgebraContext& ctx, int degree) {
    const int n = ctx.n();
    const auto nu = static_cast<std::size_t>(n);
    if (f.nvars() != nu - 1) throw usage_error("x_to_u: polynomial is not in x_1..x_{N-1}");
    std::vector<XPoly> images;
    for (int i = 1; i < n; ++i) {
        XPoly p(nu);
        for (std::size_t j = 0; j < nu; ++j) {
            std::vector<unsigned> e(nu, 0);
            e[j] = static_cast<unsigned>(i);
            p.add_term(Monomial(e), mpq_class(1, i));
        }
        images.push_back(std::move(p));
    }
    const Monomial full_column(std::vector<unsigned>(nu, 1));
    XPoly r(nu);
    for (const auto& [m, c] : f.terms()) {
        const int d = static_cast<int>(m.weighted_degree());
        if (d > degree || (degree - d) % n != 0)
            throw usage_error("x_to_u: term of weighted degree " + std::to_string(d) + " does not fit degree " +
                              std::to_string(degree) + " mod N");
        XPoly t = XPoly::term(m, c).substitute<mpq_class>(images);
        const auto cols = static_cast<unsigned>((degree - d) / n);
        if (cols != 0) {
            std::vector<unsigned> e(nu, cols);
            t *= XPoly::term(Monomial(e), mpq_class(1));
        }
        r += t;
    }
    return to_integer(r);
}

/// Rewrites a symmetric polynomial in u_1..u_N through elementary symmetric
/// polynomials (repeatedly peeling off the leading monomial), then sets
/// e_N = 1 and e_k (k < N) to their x-expressions.
inline XPoly u_to_x(const UPoly& f, PowerSumTable& table) {
    const int n = table.context().n();
    const auto nu = static_cast<std::size_t>(n);
    if (f.nvars() != nu) throw usage_error("u_to_x: polynomial is not in u_1..u_N");
    std::vector<UPoly> e_u;
    for (int k = 1; k <= n; ++k) {
        UPoly ek(nu);
        std::vector<unsigned> e(nu, 0);
        std::fill(e.begin(), e.begin() + k, 1u);
        std::sort(e.begin(), e.end());
        do {
            ek.add_term(Monomial(e), mpz_class(1));
        } while (std::next_permutation(e.begin(), e.end()));
        e_u.push_back(std::move(ek));
    }
    UPoly rem = f;
    XPoly r(table.nvars());
    while (!rem.is_zero()) {
        const auto [lead, c] = rem.leading_term();
        std::vector<unsigned> gaps(nu);
        for (std::size_t i = 0; i < nu; ++i) {
            const unsigned next = i + 1 < nu ? lead[i + 1] : 0u;
            if (lead[i] < next) throw usage_error("u_to_x: polynomial is not symmetric");
            gaps[i] = lead[i] - next;
        }
        UPoly prod_u = UPoly::constant(nu, c);
        XPoly prod_x = XPoly::constant(table.nvars(), mpq_class(c));
        for (std::size_t i = 0; i < nu; ++i) {
            if (gaps[i] == 0) continue;
            prod_u *= e_u[i].pow(gaps[i]);
            prod_x *= table.elementary(static_cast<int>(i + 1)).pow(gaps[i]);
        }
        rem -= prod_u;
        r += prod_x;
    }
    return r;
}

inline XPoly u_to_x(const UPoly& f, const AlgebraContext& ctx) {
    PowerSumTable table(ctx);
    return u_to_x(f, table);
}

} // namespace weylschur
