#pragma once

// Weight multiplicities from ChR(Lambda) = S_(q) in x_1..x_{N-1}.
//
// Both sides are expanded in x-monomials: the left as an unknown combination
// of orbit characters over Sub(Q lambda_1), the right as the generalized
// Schur function. Matching coefficients gives an exact linear system whose
// unique solution is the multiplicity table.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "orbitchar.hpp"
#include "poly.hpp"
#include "schur.hpp"

namespace weylschur {

struct MultiplicityEntry {
    DominantWeight weight;
    Partition partition; ///< uncollapsed partition of Q behind the weight
    mpz_class multiplicity;
    std::uint64_t orbit_size = 0;
};

struct MultiplicityTable {
    DominantWeight highest_weight;
    std::vector<MultiplicityEntry> entries; ///< in Sub(Q lambda_1) order
    mpz_class dimension;                    ///< sum of multiplicity * orbit size
    std::size_t equations = 0;              ///< distinct x-monomials in the system
    std::size_t rhs_support = 0;            ///< monomials of S_(q)

    const MultiplicityEntry* find(const DominantWeight& w) const {
        for (const auto& e : entries)
            if (e.weight == w) return &e;
        return nullptr;
    }
};

/// Weyl dimension formula: prod_{i<j} (q_i - q_j + j - i) / (j - i).
inline mpz_class dimension(const DominantWeight& w) {
    const int n = w.context().n();
    const std::vector<int> q = w.partition().padded(n);
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= q[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

/// Unique solution of an overdetermined-or-square rational system
/// columns * m = rhs. Rows are cleared of denominators, then eliminated
/// fraction-free with columns taken in order of decreasing support. Throws
/// inconsistency_error when the system is singular or inconsistent.
inline std::vector<mpq_class> solve_exact(const std::vector<XPoly>& columns, const XPoly& rhs,
                                          std::size_t* equations = nullptr) {
    const std::size_t n = columns.size();
    std::map<Monomial, std::size_t> row_of;
    for (const auto& c : columns)
        for (const auto& [m, v] : c.terms()) row_of.try_emplace(m, 0);
    for (const auto& [m, v] : rhs.terms()) row_of.try_emplace(m, 0);
    std::size_t rows = 0;
    for (auto& [m, idx] : row_of) idx = rows++;
    if (equations) *equations = rows;
    if (rows < n) throw inconsistency_error("multiplicity system is underdetermined");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return columns[a].size() > columns[b].size(); });

    // Rational augmented matrix in pivot-column order; last column is rhs.
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(n + 1));
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [m, v] : columns[order[k]].terms()) q[row_of.at(m)][k] = v;
    for (const auto& [m, v] : rhs.terms()) q[row_of.at(m)][n] = v;

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (const auto& v : q[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j <= n; ++j) a[i][j] = mpz_class(q[i][j] * l);
    }

    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < rows && a[p][k] == 0) ++p;
        if (p == rows) throw inconsistency_error("multiplicity system is singular");
        std::swap(a[k], a[p]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    for (std::size_t i = n; i < rows; ++i)
        if (a[i][n] != 0) throw inconsistency_error("multiplicity system is inconsistent");

    std::vector<mpq_class> sol(n);
    for (std::size_t k = n; k-- > 0;) {
        mpq_class acc = a[k][n];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * sol[j];
        sol[k] = acc / a[k][k];
    }
    std::vector<mpq_class> out(n);
    for (std::size_t k = 0; k < n; ++k) out[order[k]] = sol[k];
    return out;
}

inline MultiplicityTable solve_multiplicities(const DominantWeight& w, SchurContext& schur) {
    const AlgebraContext& ctx = w.context();
    if (!(schur.context() == ctx)) throw usage_error("Schur context rank differs from the weight's");
    MultiplicityTable t{w, {}, 0, 0, 0};
    const Partition top = w.partition();
    const int q = top.weight();
    if (q == 0) {
        t.entries.push_back({w, Partition{}, 1, 1});
        t.dimension = 1;
        return t;
    }

    const std::vector<Partition> parts = sub_q_lambda1_partitions(q, ctx);
    std::vector<XPoly> columns;
    columns.reserve(parts.size());
    for (const auto& p : parts) columns.push_back(orbit_char_x(p, schur.power_sums()));
    const XPoly& rhs = schur.generalized_schur(top);
    t.rhs_support = rhs.size();

    const std::vector<mpq_class> sol = solve_exact(columns, rhs, &t.equations);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const mpq_class& m = sol[i];
        if (m.get_den() != 1) throw inconsistency_error("non-integral multiplicity " + m.get_str());
        if (sgn(m) < 0) throw inconsistency_error("negative multiplicity " + m.get_str());
        const DominantWeight dw = partition_to_dominant(parts[i], ctx);
        MultiplicityEntry e{dw, parts[i], mpz_class(m.get_num()), orbit_size(dw)};
        t.dimension += e.multiplicity * e.orbit_size;
        t.entries.push_back(std::move(e));
    }
    const MultiplicityEntry* self = t.find(w);
    if (self == nullptr || self->multiplicity != 1)
        throw inconsistency_error("highest weight does not occur exactly once");
    return t;
}

inline MultiplicityTable solve_multiplicities(const DominantWeight& w) {
    SchurContext schur(w.context());
    return solve_multiplicities(w, schur);
}

} // namespace weylschur
